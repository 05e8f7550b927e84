// Command-line front end: overlap matrices, kernel grids, identity
// verification batches, and ensemble computations, with machine-readable
// JSON / CSV output. Outputs are deterministic for a fixed config+seed.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "detkern/detkern.hpp"

namespace dk = detkern;
using nlohmann::json;

namespace {

struct Options {
  std::string config;
  std::string fixture;
  std::string out;
  std::string format;  // "json" or "csv" (grids default to csv)
  std::string grid;    // "a:b:steps"
  std::string family = "hermite";
  std::string theorem;  // optional filter for verify
  int nodes = 64;
  int oracle_nodes = 40;
  int n = 0;    // 0 = unset
  int k = -1;   // -1 = all applicable
  int n_max = 4;
  std::uint64_t seed = 42;
  std::optional<json> phi_json;
  std::optional<json> psi_json;
};

struct OptionRefs {
  CLI::Option* fixture = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* grid = nullptr;
  CLI::Option* family = nullptr;
  CLI::Option* theorem = nullptr;
  CLI::Option* nodes = nullptr;
  CLI::Option* oracle_nodes = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* k = nullptr;
  CLI::Option* n_max = nullptr;
  CLI::Option* seed = nullptr;
};

OptionRefs add_common_options(CLI::App* cmd, Options& o) {
  OptionRefs r;
  cmd->add_option("--config", o.config,
                  "JSON config file; explicit flags override its fields");
  r.fixture = cmd->add_option("--fixture", o.fixture,
                              "built-in fixture name (see --list-fixtures)");
  r.out = cmd->add_option("--out", o.out, "output path (default: stdout)");
  r.format = cmd->add_option("--format", o.format, "output format: json|csv")
                 ->check(CLI::IsMember({"json", "csv"}));
  r.grid = cmd->add_option("--grid", o.grid, "evaluation grid a:b:steps");
  r.family = cmd->add_option("--family", o.family,
                             "classical family: legendre|hermite|laguerre")
                 ->check(CLI::IsMember({"legendre", "hermite", "laguerre"}));
  r.theorem =
      cmd->add_option("--theorem", o.theorem, "restrict verify to one identity");
  r.nodes = cmd->add_option("--nodes", o.nodes,
                            "quadrature nodes for overlap/kernel building")
                ->check(CLI::Range(1, 256));
  r.oracle_nodes =
      cmd->add_option("--oracle-nodes", o.oracle_nodes,
                      "quadrature nodes per axis for brute-force oracles")
          ->check(CLI::Range(1, 256));
  r.n = cmd->add_option("--n", o.n, "set size / ensemble size");
  r.k = cmd->add_option("--k", o.k, "free-point count (default: all legal)");
  r.n_max = cmd->add_option("--n-max", o.n_max,
                            "cap on set size in the full verify suite");
  r.seed = cmd->add_option("--seed", o.seed, "free evaluation point seed");
  return r;
}

// Fields given in the config file apply unless the flag was set explicitly.
void merge_config(Options& o, const OptionRefs& r) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw dk::Error("cannot open config file: " + o.config);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw dk::Error("config parse error in " + o.config + ": " + e.what());
  }

  auto set_str = [&](const char* key, CLI::Option* opt, std::string& dst) {
    if (cfg.contains(key) && (!opt || opt->count() == 0))
      dst = cfg.at(key).get<std::string>();
  };
  auto set_int = [&](const char* key, CLI::Option* opt, int& dst) {
    if (cfg.contains(key) && (!opt || opt->count() == 0))
      dst = cfg.at(key).get<int>();
  };
  set_str("fixture", r.fixture, o.fixture);
  set_str("out", r.out, o.out);
  set_str("format", r.format, o.format);
  set_str("grid", r.grid, o.grid);
  set_str("family", r.family, o.family);
  set_str("theorem", r.theorem, o.theorem);
  set_int("nodes", r.nodes, o.nodes);
  set_int("oracle_nodes", r.oracle_nodes, o.oracle_nodes);
  set_int("n", r.n, o.n);
  set_int("k", r.k, o.k);
  set_int("n_max", r.n_max, o.n_max);
  if (cfg.contains("seed") && (!r.seed || r.seed->count() == 0))
    o.seed = cfg.at("seed").get<std::uint64_t>();
  if (cfg.contains("phi")) o.phi_json = cfg.at("phi");
  if (cfg.contains("psi")) o.psi_json = cfg.at("psi");
}

struct OutputSink {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw dk::Error("cannot open output path: " + path);
      stream = &file;
    }
  }
  std::ostream& os() { return *stream; }
};

struct GridSpec {
  double a = 0.0, b = 1.0;
  int steps = 10;

  std::vector<double> points() const {
    std::vector<double> p(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i)
      p[static_cast<std::size_t>(i)] = a + (b - a) * i / steps;
    return p;
  }
};

GridSpec parse_grid(const std::string& spec) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> g.a >> c1 >> g.b >> c2 >> g.steps) || c1 != ':' || c2 != ':')
    throw dk::Error("grid must be a:b:steps, got: " + spec);
  if (!(g.a < g.b) || g.steps < 1)
    throw dk::Error("grid needs a < b and steps >= 1, got: " + spec);
  return g;
}

// The function-set pair a command operates on: custom sets from the
// config when present, a built-in fixture otherwise.
dk::Fixture resolve_fixture(const Options& o) {
  if (o.phi_json) {
    const json& pj = *o.phi_json;
    const json& sj = o.psi_json ? *o.psi_json : pj;
    dk::FunctionSet phi = dk::function_set_from_json(pj, "config-phi");
    dk::FunctionSet psi = dk::function_set_from_json(sj, "config-psi");
    return dk::Fixture{"config", "sets from config file", std::move(phi),
                       std::move(psi)};
  }
  if (o.fixture.empty())
    throw dk::Error("no function sets: pass --fixture or a config with phi/psi");
  return dk::get_fixture(o.fixture);
}

int run_gram(const Options& o) {
  const dk::Fixture fx = resolve_fixture(o);
  const dk::GramMatrix g = dk::compute_gram(fx.phi, fx.psi, fx.rule(o.nodes));
  json out = dk::gram_to_json(g);
  out["fixture"] = fx.name;
  out["nodes"] = o.nodes;
  OutputSink sink(o.out);
  sink.os() << out.dump(2) << "\n";
  return 0;
}

int run_kernel_grid(const Options& o) {
  const dk::Fixture fx = resolve_fixture(o);
  const dk::GeneralizedKernel kern = fx.kernel(o.nodes);
  const GridSpec grid = o.grid.empty() ? GridSpec{} : parse_grid(o.grid);
  const std::vector<double> pts = grid.points();
  if (!pts.empty() &&
      (!fx.domain().contains(pts.front()) || !fx.domain().contains(pts.back())))
    throw dk::DomainError("grid extends outside the fixture domain " +
                          fx.domain().to_string());

  const Eigen::MatrixXd values = dk::kernel_table(kern, pts, pts);
  OutputSink sink(o.out);
  if (o.format == "json") {
    json rows = json::array();
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < values.cols(); ++j)
        row.push_back(values(i, j));
      rows.push_back(row);
    }
    json out = {{"fixture", fx.name},
                {"normalized", kern.normalized()},
                {"points", pts},
                {"values", rows}};
    sink.os() << out.dump(2) << "\n";
  } else {
    sink.os() << "p,q,value\n";
    std::ostringstream buf;
    buf.precision(17);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        buf.str("");
        buf << pts[i] << "," << pts[j] << ","
            << values(static_cast<Eigen::Index>(i),
                      static_cast<Eigen::Index>(j));
        sink.os() << buf.str() << "\n";
      }
    if (!kern.normalized())
      std::cerr << "note: overlap matrix is singular; values are the "
                   "detG-multiplied kernel\n";
  }
  return 0;
}

bool want(const Options& o, dk::TheoremId id) {
  return o.theorem.empty() || dk::theorem_from_string(o.theorem) == id;
}

void verify_one_fixture(const Options& o, const dk::Fixture& fx,
                        std::vector<dk::TheoremReport>& reports) {
  const int n = fx.phi.size();
  const dk::QuadratureRule oracle = fx.rule(o.oracle_nodes);
  const dk::GeneralizedKernel kern = fx.kernel(o.nodes);

  if (want(o, dk::TheoremId::kernel_reduction)) {
    for (int k = std::max(0, n - dk::kMaxOracleDims); k <= n; ++k) {
      if (o.k >= 0 && k != o.k) continue;
      reports.push_back(dk::verify_reduction(kern, k, oracle, o.seed));
    }
  }
  if (want(o, dk::TheoremId::andreief) && n <= dk::kMaxOracleDims)
    reports.push_back(dk::verify_andreief(fx.phi, fx.psi, oracle));
  if (want(o, dk::TheoremId::self_contraction)) {
    for (int k = 1; k <= std::min(3, n); ++k) {
      if (o.k >= 0 && k != o.k) continue;
      reports.push_back(dk::verify_contraction_k(kern, k, oracle, o.seed));
    }
  }
  if (want(o, dk::TheoremId::kernel_normalization)) {
    for (int k = 1; k <= std::min(3, n); ++k) {
      if (o.k >= 0 && k != o.k) continue;
      reports.push_back(dk::verify_knorm(kern, k, oracle));
    }
  }
  if (want(o, dk::TheoremId::pointwise_det_identity))
    reports.push_back(dk::verify_pointwise_identity(kern, o.seed));
}

int run_verify(const Options& o) {
  std::vector<dk::TheoremReport> reports;

  const bool single_fixture = !o.fixture.empty() || o.phi_json.has_value();
  if (single_fixture) {
    verify_one_fixture(o, resolve_fixture(o), reports);
  } else {
    for (const auto& name : dk::fixture_names()) {
      const dk::Fixture fx = dk::get_fixture(name);
      if (fx.phi.size() > o.n_max) continue;
      verify_one_fixture(o, fx, reports);
    }
  }

  if (!single_fixture && want(o, dk::TheoremId::classical_dyson)) {
    const dk::Family family = dk::family_from_string(o.family);
    const int n_lo = o.n > 0 ? o.n : 2;
    const int n_hi = o.n > 0 ? o.n : std::min(o.n_max, 4);
    for (int n = n_lo; n <= n_hi; ++n)
      for (int k = std::max(0, n - dk::kMaxOracleDims); k <= n; ++k) {
        if (o.k >= 0 && k != o.k) continue;
        reports.push_back(
            dk::verify_dyson_classical(family, n, k, o.oracle_nodes, o.seed));
      }
  }

  OutputSink sink(o.out);
  int failures = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failures;
    sink.os() << dk::report_to_json(r).dump() << "\n";
  }
  std::cerr << reports.size() << " checks, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

int run_rmt(const Options& o) {
  const dk::Family family = dk::family_from_string(o.family);
  const int n = o.n > 0 ? o.n : 3;
  const dk::Ensemble ens(family, n);
  OutputSink sink(o.out);

  if (!o.grid.empty() && o.format != "json") {
    // one-point correlation profile for plotting
    const GridSpec grid = parse_grid(o.grid);
    sink.os() << "x,r1\n";
    std::ostringstream buf;
    buf.precision(17);
    for (double x : grid.points()) {
      const double r1 = ens.correlation_rk(std::vector<double>{x});
      buf.str("");
      buf << x << "," << r1;
      sink.os() << buf.str() << "\n";
    }
    return 0;
  }

  const double z_closed = ens.partition_function_closed();
  json out = {{"family", dk::to_string(family)},
              {"n", n},
              {"z_closed", z_closed}};
  bool ok = true;

  if (n <= 4) {
    const double z_oracle = ens.partition_function_oracle(o.oracle_nodes);
    const double rel =
        std::abs(z_closed - z_oracle) / std::max(z_closed, z_oracle);
    out["z_oracle"] = z_oracle;
    out["z_rel_residual"] = rel;
    ok = ok && rel <= 1e-8;
  }

  const dk::QuadratureRule rule = dk::lebesgue_rule(ens.domain(), o.oracle_nodes);
  const double r1_integral = dk::integrate_1d(
      [&](double x) { return ens.correlation_rk(std::vector<double>{x}); },
      rule);
  out["r1_integral"] = r1_integral;
  ok = ok && std::abs(r1_integral - n) <= 1e-9 * n;

  // partial trace of the two-point correlation at a few sample points
  double worst = 0.0;
  if (n >= 2) {
    for (double x : dk::free_points(ens.domain(), 3, o.seed)) {
      const double lhs = dk::integrate_1d(
          [&](double y) { return ens.correlation_rk(std::vector<double>{x, y}); },
          rule);
      const double rhs = (n - 1) * ens.correlation_rk(std::vector<double>{x});
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    out["r2_partial_trace_residual"] = worst;
    ok = ok && worst <= 1e-8;
  }

  out["pass"] = ok;
  sink.os() << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"determinantal-kernel toolkit"};
  app.require_subcommand(0, 1);

  bool list_fixtures = false;
  app.add_flag("--list-fixtures", list_fixtures,
               "print the built-in fixture names and exit");

  Options gram_opts, grid_opts, verify_opts, rmt_opts;
  CLI::App* gram_cmd =
      app.add_subcommand("gram", "build an overlap matrix and print it");
  OptionRefs gram_refs = add_common_options(gram_cmd, gram_opts);
  CLI::App* grid_cmd = app.add_subcommand(
      "kernel-grid", "evaluate the kernel on a rectangular grid");
  OptionRefs grid_refs = add_common_options(grid_cmd, grid_opts);
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "verify integral identities against brute-force oracles");
  OptionRefs verify_refs = add_common_options(verify_cmd, verify_opts);
  CLI::App* rmt_cmd = app.add_subcommand(
      "rmt", "ensemble checks: partition function and correlations");
  OptionRefs rmt_refs = add_common_options(rmt_cmd, rmt_opts);

  CLI11_PARSE(app, argc, argv);

  if (list_fixtures) {
    for (const auto& name : dk::fixture_names()) std::cout << name << "\n";
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }

  try {
    if (gram_cmd->parsed()) {
      merge_config(gram_opts, gram_refs);
      return run_gram(gram_opts);
    }
    if (grid_cmd->parsed()) {
      merge_config(grid_opts, grid_refs);
      return run_kernel_grid(grid_opts);
    }
    if (verify_cmd->parsed()) {
      merge_config(verify_opts, verify_refs);
      return run_verify(verify_opts);
    }
    if (rmt_cmd->parsed()) {
      merge_config(rmt_opts, rmt_refs);
      return run_rmt(rmt_opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
