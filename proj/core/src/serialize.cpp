#include "detkern/serialize.hpp"

#include "detkern/errors.hpp"

namespace detkern {

using nlohmann::json;

json interval_to_json(const Interval& iv) {
  if (iv.is_real_line()) return json("real_line");
  if (iv.is_half_line()) return json("half_line");
  return json::array({iv.a, iv.b});
}

Interval interval_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "real_line") return Interval::real_line();
    if (s == "half_line") return Interval::half_line();
    throw Error("unknown domain tag: " + s +
                " (expected real_line, half_line, or [a, b])");
  }
  if (j.is_array() && j.size() == 2)
    return Interval::finite(j[0].get<double>(), j[1].get<double>());
  throw Error("domain must be \"real_line\", \"half_line\", or [a, b]");
}

namespace {

json simple_to_json(const SimpleMember& m) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Monomial>) {
          return json{{"type", "monomial"}, {"power", v.power}};
        } else if constexpr (std::is_same_v<T, MonicPoly>) {
          return json{{"type", "monic"},
                      {"family", to_string(v.family)},
                      {"degree", v.degree}};
        } else {
          return json{{"type", "wave"},
                      {"family", to_string(v.family)},
                      {"index", v.index}};
        }
      },
      m);
}

SimpleMember simple_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "monomial") return Monomial{j.at("power").get<int>()};
  if (type == "monic")
    return MonicPoly{family_from_string(j.at("family").get<std::string>()),
                     j.at("degree").get<int>()};
  if (type == "wave")
    return WaveFunction{family_from_string(j.at("family").get<std::string>()),
                        j.at("index").get<int>()};
  throw Error("unknown member type: " + type +
              " (expected monomial, monic, wave, or composite)");
}

}  // namespace

json member_to_json(const Member& m) {
  if (const auto* c = std::get_if<Composite>(&m)) {
    json terms = json::array();
    for (const auto& t : c->terms) {
      json part = simple_to_json(t.part);
      part["coeff"] = t.coeff;
      terms.push_back(part);
    }
    return json{{"type", "composite"}, {"terms", terms}};
  }
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Composite>) {
          return json();  // unreachable
        } else {
          return simple_to_json(SimpleMember{v});
        }
      },
      m);
}

Member member_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "composite") {
    Composite c;
    for (const auto& t : j.at("terms")) {
      const double coeff = t.value("coeff", 1.0);
      c.terms.push_back(CompositeTerm{coeff, simple_from_json(t)});
    }
    return c;
  }
  const SimpleMember s = simple_from_json(j);
  return std::visit([](const auto& v) -> Member { return v; }, s);
}

json function_set_to_json(const FunctionSet& s) {
  json members = json::array();
  for (const auto& m : s.members()) members.push_back(member_to_json(m));
  return json{{"name", s.name()},
              {"domain", interval_to_json(s.domain())},
              {"members", members}};
}

FunctionSet function_set_from_json(const json& j,
                                   const std::string& fallback_name) {
  const std::string name = j.value("name", fallback_name);
  const Interval domain = interval_from_json(j.at("domain"));
  std::vector<Member> members;
  for (const auto& m : j.at("members")) members.push_back(member_from_json(m));
  return FunctionSet(name, domain, std::move(members));
}

json gram_to_json(const GramMatrix& g) {
  json rows = json::array();
  for (int i = 0; i < g.n(); ++i) {
    json row = json::array();
    for (int k = 0; k < g.n(); ++k) row.push_back(g.entries()(i, k));
    rows.push_back(row);
  }
  return json{{"n", g.n()},
              {"entries", rows},
              {"det", g.det()},
              {"rank", g.rank()},
              {"rank_tolerance", g.rank_tolerance()}};
}

json report_to_json(const TheoremReport& r) {
  return json{{"theorem", to_string(r.id)},
              {"fixture", r.fixture},
              {"n", r.n},
              {"k", r.k},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"abs_residual", r.abs_residual},
              {"rel_residual", r.rel_residual},
              {"tolerance", r.tolerance},
              {"scale", r.scale},
              {"oracle_cost", r.oracle_cost},
              {"seed", r.seed},
              {"unnormalized", r.unnormalized},
              {"pass", r.pass}};
}

}  // namespace detkern
