#include <doctest.h>

#include "detkern/fixtures.hpp"
#include "detkern/serialize.hpp"
#include "detkern/theorems.hpp"

namespace dk = detkern;
using nlohmann::json;

TEST_CASE("domains round-trip, including unbounded tags") {
  for (const dk::Interval dom :
       {dk::Interval::finite(-2.5, 4.0), dk::Interval::real_line(),
        dk::Interval::half_line()}) {
    CHECK(dk::interval_from_json(dk::interval_to_json(dom)) == dom);
  }
  CHECK_THROWS_AS(dk::interval_from_json(json("circle")), dk::Error);
  CHECK_THROWS_AS(dk::interval_from_json(json::array({1.0})), dk::Error);
}

TEST_CASE("members round-trip through their typed encodings") {
  const std::vector<dk::Member> members{
      dk::Monomial{3},
      dk::MonicPoly{dk::Family::laguerre, 2},
      dk::WaveFunction{dk::Family::hermite, 4},
      dk::Composite{{{1.0, dk::WaveFunction{dk::Family::legendre, 2}},
                     {0.25, dk::WaveFunction{dk::Family::legendre, 0}}}},
  };
  for (const dk::Member& m : members)
    CHECK(dk::member_from_json(dk::member_to_json(m)) == m);

  CHECK_THROWS_AS(dk::member_from_json(json{{"type", "fourier"}}), dk::Error);
}

TEST_CASE("function sets round-trip with every fixture") {
  for (const std::string& name : dk::fixture_names()) {
    const dk::Fixture fx = dk::get_fixture(name);
    const json j = dk::function_set_to_json(fx.phi);
    const dk::FunctionSet back = dk::function_set_from_json(j, "unused");
    CHECK(back.name() == fx.phi.name());
    CHECK(back.domain() == fx.phi.domain());
    CHECK(back.members() == fx.phi.members());
  }
}

TEST_CASE("custom sets parse from hand-written JSON") {
  const json j = {
      {"domain", json::array({0.0, 2.0})},
      {"members",
       json::array({json{{"type", "monomial"}, {"power", 0}},
                    json{{"type", "composite"},
                         {"terms", json::array({json{{"type", "monomial"},
                                                     {"power", 1},
                                                     {"coeff", -2.0}}})}}})}};
  const dk::FunctionSet set = dk::function_set_from_json(j, "custom");
  CHECK(set.name() == "custom");
  CHECK(set.size() == 2);
  CHECK(set.eval(1, 1.5) == doctest::Approx(-3.0));
}

TEST_CASE("overlap matrices serialize their decision data") {
  const dk::Fixture fx = dk::get_fixture("monomials-n2");
  const json j = dk::gram_to_json(dk::compute_gram(fx.phi, fx.psi, fx.rule(32)));
  CHECK(j.at("n") == 2);
  CHECK(j.at("rank") == 2);
  CHECK(j.at("det").get<double>() == doctest::Approx(1.0 / 12.0));
  CHECK(j.at("entries")[1][0].get<double>() == doctest::Approx(0.5));
  CHECK(j.contains("rank_tolerance"));
}

TEST_CASE("verification reports serialize all gate fields") {
  const dk::Fixture fx = dk::get_fixture("monomials-n2");
  const dk::TheoremReport r =
      dk::verify_andreief(fx.phi, fx.psi, fx.rule(24));
  const json j = dk::report_to_json(r);
  for (const char* key :
       {"theorem", "fixture", "n", "k", "lhs", "rhs", "abs_residual",
        "rel_residual", "tolerance", "scale", "oracle_cost", "seed",
        "unnormalized", "pass"})
    CHECK(j.contains(key));
  CHECK(j.at("theorem") == "andreief");
  CHECK(j.at("pass") == true);
}
