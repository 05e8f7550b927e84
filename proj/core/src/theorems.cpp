#include "detkern/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "detkern/combinatorics.hpp"
#include "detkern/errors.hpp"

namespace detkern {

namespace {

std::string fixture_label(const FunctionSet& phi, const FunctionSet& psi) {
  if (phi.name() == psi.name()) return phi.name();
  return phi.name() + "/" + psi.name();
}

// Bit-reversal (van der Corput) radical inverse in base 2.
double radical_inverse(std::uint64_t i) {
  double x = 0.0, f = 0.5;
  while (i) {
    if (i & 1u) x += f;
    f *= 0.5;
    i >>= 1;
  }
  return x;
}

void check_oracle_dims(int d) {
  if (d > kMaxOracleDims)
    throw CostGuardError("oracle would open " + std::to_string(d) +
                             " coupled integration variables (cap " +
                             std::to_string(kMaxOracleDims) + ")",
                         static_cast<double>(d));
}

std::vector<double> to_vec(std::span<const double> s) {
  return std::vector<double>(s.begin(), s.end());
}

// Values of a two-point function split into grid/free blocks:
//   nn(s,t) = F(node_s, node_t)    nf(s,j) = F(node_s, qfree_j)
//   fn(i,t) = F(pfree_i, node_t)   ff(i,j) = F(pfree_i, qfree_j)
struct PairTables {
  Eigen::MatrixXd nn, nf, fn, ff;
};

PairTables bilinear_tables(const FunctionSet& phi, const FunctionSet& psi,
                           const std::vector<double>& nodes,
                           std::span<const double> p_free,
                           std::span<const double> q_free) {
  const Eigen::MatrixXd vphi = eval_table(phi, nodes);
  const Eigen::MatrixXd vpsi = eval_table(psi, nodes);
  const Eigen::MatrixXd pf = eval_table(phi, to_vec(p_free));
  const Eigen::MatrixXd qf = eval_table(psi, to_vec(q_free));
  PairTables t;
  t.nn = vphi.transpose() * vpsi;
  t.nf = vphi.transpose() * qf;
  t.fn = pf.transpose() * vpsi;
  t.ff = pf.transpose() * qf;
  return t;
}

// Integral over the first d = n-k variables (row and column points set
// equal, running over the rule grid) of the n x n determinant of F, with
// the trailing k rows/columns pinned at the free points. d = 0 is the
// integration-free determinant of the ff block.
double integrate_det_moment(const PairTables& t, const QuadratureRule& rule,
                            int n, int k, std::uint64_t* cost_out) {
  const int d = n - k;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(d + i, d + j) = t.ff(i, j);

  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  if (d == 0) {
    if (cost_out) *cost_out = 0;
    lu.compute(m);
    return lu.determinant();
  }
  check_oracle_dims(d);
  const double value = integrate_nd_indexed(
      [&](const std::vector<int>& idx) {
        for (int a = 0; a < d; ++a) {
          const int ia = idx[static_cast<std::size_t>(a)];
          for (int b = 0; b < d; ++b)
            m(a, b) = t.nn(ia, idx[static_cast<std::size_t>(b)]);
          for (int j = 0; j < k; ++j) m(a, d + j) = t.nf(ia, j);
          for (int i = 0; i < k; ++i) m(d + i, a) = t.fn(i, ia);
        }
        lu.compute(m);
        return lu.determinant();
      },
      rule, d);
  if (cost_out)
    *cost_out = static_cast<std::uint64_t>(tensor_cost(rule, d));
  return value;
}

double max_abs(const Eigen::MatrixXd& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::classical_dyson: return "classical_dyson";
    case TheoremId::kernel_reduction: return "kernel_reduction";
    case TheoremId::self_contraction: return "self_contraction";
    case TheoremId::kernel_normalization: return "kernel_normalization";
    case TheoremId::andreief: return "andreief";
    case TheoremId::pointwise_det_identity: return "pointwise_det_identity";
  }
  throw Error("unknown theorem id");
}

TheoremId theorem_from_string(const std::string& s) {
  if (s == "classical_dyson") return TheoremId::classical_dyson;
  if (s == "kernel_reduction") return TheoremId::kernel_reduction;
  if (s == "self_contraction") return TheoremId::self_contraction;
  if (s == "kernel_normalization") return TheoremId::kernel_normalization;
  if (s == "andreief") return TheoremId::andreief;
  if (s == "pointwise_det_identity") return TheoremId::pointwise_det_identity;
  throw Error("unknown theorem id: " + s);
}

TheoremReport make_report(TheoremId id, std::string fixture, int n, int k,
                          double lhs, double rhs, double tolerance,
                          double scale, std::uint64_t oracle_cost,
                          std::uint64_t seed, bool unnormalized) {
  TheoremReport r;
  r.id = id;
  r.fixture = std::move(fixture);
  r.n = n;
  r.k = k;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.scale = scale;
  r.oracle_cost = oracle_cost;
  r.seed = seed;
  r.unnormalized = unnormalized;
  r.abs_residual = std::abs(lhs - rhs);
  const double denom = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_residual = denom > 0.0 ? r.abs_residual / denom : 0.0;
  const double ref = std::max(scale, 1.0);
  const bool near_zero = denom <= 1e-6 * ref;
  r.pass = near_zero ? (r.abs_residual <= tolerance * ref)
                     : (r.rel_residual <= tolerance);
  return r;
}

std::vector<double> free_points(const Interval& domain, int count,
                                std::uint64_t seed) {
  if (count < 0) throw Error("free point count must be >= 0");
  const Interval box = domain.core_box();
  std::vector<double> pts(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double v = radical_inverse(seed + 1 + static_cast<std::uint64_t>(i));
    const double t = 0.05 + 0.9 * v;  // stay strictly interior
    pts[static_cast<std::size_t>(i)] = box.a + (box.b - box.a) * t;
  }
  return pts;
}

// ---------------------------------------------------------------------------
// Determinant-reduction identity
// ---------------------------------------------------------------------------

namespace {

void check_free_points(const GeneralizedKernel& kern, int k,
                       std::span<const double> p_free,
                       std::span<const double> q_free) {
  if (k < 0 || k > kern.n())
    throw Error("free-point count k must satisfy 0 <= k <= n");
  if (static_cast<int>(p_free.size()) != k ||
      static_cast<int>(q_free.size()) != k)
    throw Error("inconsistent free-point counts: expected " +
                std::to_string(k) + " per side");
}

// Near-zero comparison scale for unnormalized runs: the sampled magnitude
// of the detG-multiplied kernel, raised to the number of kernel factors a
// k x k determinant multiplies together.
double unnormalized_scale(const GeneralizedKernel& kern,
                          std::span<const double> p,
                          std::span<const double> q) {
  double mx = 0.0;
  for (double pv : p)
    for (double qv : q)
      mx = std::max(mx, std::abs(kern.eval_unnormalized(pv, qv)));
  const int k = static_cast<int>(p.size());
  return std::pow(std::max(1.0, mx), std::max(k, 1));
}

double gram_scale(const GramMatrix& g, int n) {
  return std::pow(std::max(1.0, max_abs(g.entries())), n) * factorial_d(n);
}

}  // namespace

double lhs_reduction(const GeneralizedKernel& kern, int k,
                    std::span<const double> p_free,
                    std::span<const double> q_free, const QuadratureRule& rule,
                    std::uint64_t* cost) {
  check_free_points(kern, k, p_free, q_free);
  validate_weight_convention(kern.phi(), kern.psi(), rule);
  const int n = kern.n();
  const PairTables t =
      bilinear_tables(kern.phi(), kern.psi(), rule.nodes, p_free, q_free);
  const double integral = integrate_det_moment(t, rule, n, k, cost);
  if (kern.normalized()) return integral / kern.gram().det();
  // multiplied through by detG^k to stay finite at detG = 0
  if (k == 0) return integral;
  return std::pow(kern.gram().det(), k - 1) * integral;
}

double rhs_reduction(const GeneralizedKernel& kern, int k,
                    std::span<const double> p_free,
                    std::span<const double> q_free) {
  check_free_points(kern, k, p_free, q_free);
  const int n = kern.n();
  if (!kern.normalized() && k == 0)
    return factorial_d(n) * kern.gram().det();
  return factorial_d(n - k) * kern.det(p_free, q_free);
}

TheoremReport verify_reduction(const GeneralizedKernel& kern, int k,
                              std::span<const double> p_free,
                              std::span<const double> q_free,
                              const QuadratureRule& rule, std::uint64_t seed) {
  std::uint64_t cost = 0;
  const double lhs = lhs_reduction(kern, k, p_free, q_free, rule, &cost);
  const double rhs = rhs_reduction(kern, k, p_free, q_free);
  double scale = 1.0;
  if (!kern.normalized())
    scale = k == 0 ? gram_scale(kern.gram(), kern.n())
                   : unnormalized_scale(kern, p_free, q_free);
  return make_report(TheoremId::kernel_reduction,
                     fixture_label(kern.phi(), kern.psi()), kern.n(), k, lhs,
                     rhs, kOracleTol, scale, cost, seed, !kern.normalized());
}

TheoremReport verify_reduction(const GeneralizedKernel& kern, int k,
                              const QuadratureRule& rule, std::uint64_t seed) {
  const std::vector<double> p = free_points(kern.domain(), k, seed);
  const std::vector<double> q = free_points(kern.domain(), k, seed + 7919);
  return verify_reduction(kern, k, p, q, rule, seed);
}

// ---------------------------------------------------------------------------
// Product-of-determinants integral
// ---------------------------------------------------------------------------

TheoremReport verify_andreief(const FunctionSet& phi, const FunctionSet& psi,
                              const QuadratureRule& rule) {
  validate_weight_convention(phi, psi, rule);
  const int n = phi.size();
  check_oracle_dims(n);

  const Eigen::MatrixXd vphi = eval_table(phi, rule.nodes);
  const Eigen::MatrixXd vpsi = eval_table(psi, rule.nodes);
  Eigen::MatrixXd a(n, n), b(n, n);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  const double lhs = integrate_nd_indexed(
      [&](const std::vector<int>& idx) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            a(i, j) = vphi(j, idx[static_cast<std::size_t>(i)]);
            b(i, j) = vpsi(j, idx[static_cast<std::size_t>(i)]);
          }
        lu.compute(a);
        const double da = lu.determinant();
        lu.compute(b);
        return da * lu.determinant();
      },
      rule, n);

  const GramMatrix g = compute_gram(phi, psi, rule);
  const double rhs = factorial_d(n) * g.det();
  const double scale = g.nonsingular() ? 1.0 : gram_scale(g, n);
  return make_report(TheoremId::andreief, fixture_label(phi, psi), n, 0, lhs,
                     rhs, kOracleTol, scale,
                     static_cast<std::uint64_t>(tensor_cost(rule, n)), 0,
                     !g.nonsingular());
}

// ---------------------------------------------------------------------------
// k-point self-contraction and normalization
// ---------------------------------------------------------------------------

TheoremReport verify_contraction_k(const GeneralizedKernel& kern, int k,
                                   std::span<const double> p,
                                   std::span<const double> r,
                                   const QuadratureRule& rule,
                                   std::uint64_t seed) {
  check_free_points(kern, k, p, r);
  if (k < 1) throw Error("contraction needs k >= 1");
  if (k > 3)
    throw CostGuardError("contraction oracle is limited to k <= 3",
                         static_cast<double>(k));
  validate_weight_convention(kern.phi(), kern.psi(), rule);

  const int m = rule.size();
  Eigen::MatrixXd kpn(k, m), knr(m, k);
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < m; ++t)
      kpn(i, t) = kern.value(p[static_cast<std::size_t>(i)],
                             rule.nodes[static_cast<std::size_t>(t)]);
  for (int t = 0; t < m; ++t)
    for (int j = 0; j < k; ++j)
      knr(t, j) = kern.value(rule.nodes[static_cast<std::size_t>(t)],
                             r[static_cast<std::size_t>(j)]);

  Eigen::MatrixXd a(k, k), b(k, k);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  const double kfact = factorial_d(k);
  const double integral = integrate_nd_indexed(
      [&](const std::vector<int>& idx) {
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            a(i, j) = kpn(i, idx[static_cast<std::size_t>(j)]);
            b(i, j) = knr(idx[static_cast<std::size_t>(i)], j);
          }
        lu.compute(a);
        const double da = lu.determinant();
        lu.compute(b);
        return da * lu.determinant();
      },
      rule, k);
  const double lhs = integral / (kfact * kfact);

  double rhs = kern.det(p, r) / kfact;
  if (!kern.normalized()) rhs *= std::pow(kern.gram().det(), k);

  double scale = 1.0;
  if (!kern.normalized()) {
    // tables already hold the detG-multiplied kernel values in this mode
    const double mx = std::max(max_abs(kpn), max_abs(knr));
    scale = std::pow(std::max(1.0, mx), 2 * k);
  }
  return make_report(TheoremId::self_contraction,
                     fixture_label(kern.phi(), kern.psi()), kern.n(), k, lhs,
                     rhs, kOracleTol, scale,
                     static_cast<std::uint64_t>(tensor_cost(rule, k)), seed,
                     !kern.normalized());
}

TheoremReport verify_contraction_k(const GeneralizedKernel& kern, int k,
                                   const QuadratureRule& rule,
                                   std::uint64_t seed) {
  const std::vector<double> p = free_points(kern.domain(), k, seed);
  const std::vector<double> r = free_points(kern.domain(), k, seed + 104729);
  return verify_contraction_k(kern, k, p, r, rule, seed);
}

TheoremReport verify_knorm(const GeneralizedKernel& kern, int k,
                           const QuadratureRule& rule) {
  if (k < 1 || k > kern.n())
    throw Error("normalization trace needs 1 <= k <= n");
  if (k > 3)
    throw CostGuardError("normalization oracle is limited to k <= 3",
                         static_cast<double>(k));
  validate_weight_convention(kern.phi(), kern.psi(), rule);

  const Eigen::MatrixXd knn =
      kernel_table(kern, rule.nodes, rule.nodes);  // mode-native values
  Eigen::MatrixXd m(k, k);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  const double kfact = factorial_d(k);
  const double lhs = integrate_nd_indexed(
                         [&](const std::vector<int>& idx) {
                           for (int i = 0; i < k; ++i)
                             for (int j = 0; j < k; ++j)
                               m(i, j) = knn(idx[static_cast<std::size_t>(i)],
                                             idx[static_cast<std::size_t>(j)]);
                           lu.compute(m);
                           return lu.determinant();
                         },
                         rule, k) /
                     kfact;

  double rhs = binomial_d(kern.n(), k);
  if (!kern.normalized()) rhs *= std::pow(kern.gram().det(), k);

  const double scale =
      kern.normalized() ? 1.0 : std::pow(std::max(1.0, max_abs(knn)), k);
  return make_report(TheoremId::kernel_normalization,
                     fixture_label(kern.phi(), kern.psi()), kern.n(), k, lhs,
                     rhs, kOracleTol, scale,
                     static_cast<std::uint64_t>(tensor_cost(rule, k)), 0,
                     !kern.normalized());
}

// ---------------------------------------------------------------------------
// Orthonormal wave-function kernel: iterated integration
// ---------------------------------------------------------------------------

TheoremReport verify_dyson_classical(Family family, int n, int k,
                                     int oracle_nodes, std::uint64_t seed) {
  if (n < 1) throw Error("ensemble size must be >= 1");
  if (k < 0 || k > n) throw Error("need 0 <= k <= n");
  const Interval domain = natural_domain(family);
  const QuadratureRule rule = lebesgue_rule(domain, oracle_nodes);
  const std::vector<double> xf = free_points(domain, k, seed);

  const int m = rule.size();
  Eigen::MatrixXd w(n, m), wf(n, k);
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < m; ++t)
      w(j, t) = wave_eval(family, j, rule.nodes[static_cast<std::size_t>(t)]);
    for (int i = 0; i < k; ++i)
      wf(j, i) = wave_eval(family, j, xf[static_cast<std::size_t>(i)]);
  }
  PairTables t;
  t.nn = w.transpose() * w;
  t.nf = w.transpose() * wf;
  t.fn = wf.transpose() * w;
  t.ff = wf.transpose() * wf;

  std::uint64_t cost = 0;
  const double lhs = integrate_det_moment(t, rule, n, k, &cost);
  const double rhs =
      factorial_d(n - k) *
      (k == 0 ? 1.0 : Eigen::PartialPivLU<Eigen::MatrixXd>(t.ff).determinant());
  return make_report(TheoremId::classical_dyson,
                     to_string(family) + "-wave-n" + std::to_string(n), n, k,
                     lhs, rhs, kOracleTol, 1.0, cost, seed, false);
}

// ---------------------------------------------------------------------------
// k = n: integration-free determinant identity
// ---------------------------------------------------------------------------

TheoremReport verify_pointwise_identity(const GeneralizedKernel& kern,
                                        std::uint64_t seed) {
  const int n = kern.n();
  const std::vector<double> p = free_points(kern.domain(), n, seed);
  const std::vector<double> q = free_points(kern.domain(), n, seed + 7919);

  const BilinearQ qform(kern.phi(), kern.psi());
  MatrixLD qm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      qm(i, j) = static_cast<long double>(
          qform.eval(p[static_cast<std::size_t>(i)],
                     q[static_cast<std::size_t>(j)]));
  const double det_q =
      static_cast<double>(Eigen::PartialPivLU<MatrixLD>(qm).determinant());

  const double lhs = kern.det(p, q);
  double rhs;
  double scale = 1.0;
  if (kern.normalized()) {
    rhs = det_q / kern.gram().det();
  } else {
    rhs = std::pow(kern.gram().det(), n - 1) * det_q;
    scale = unnormalized_scale(kern, p, q);
  }
  return make_report(TheoremId::pointwise_det_identity,
                     fixture_label(kern.phi(), kern.psi()), n, n, lhs, rhs,
                     kAlgebraTol, scale, 0, seed, !kern.normalized());
}

}  // namespace detkern
