#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "detkern/combinatorics.hpp"
#include "detkern/fixtures.hpp"
#include "detkern/theorems.hpp"

namespace dk = detkern;

TEST_CASE("identity names round-trip") {
  using dk::TheoremId;
  for (TheoremId id :
       {TheoremId::classical_dyson, TheoremId::kernel_reduction,
        TheoremId::self_contraction, TheoremId::kernel_normalization,
        TheoremId::andreief, TheoremId::pointwise_det_identity})
    CHECK(dk::theorem_from_string(dk::to_string(id)) == id);
  CHECK_THROWS_AS(dk::theorem_from_string("nonsense"), dk::Error);
}

TEST_CASE("free points are deterministic, distinct and interior") {
  const dk::Interval dom = dk::Interval::real_line();
  const std::vector<double> a = dk::free_points(dom, 6, 42);
  const std::vector<double> b = dk::free_points(dom, 6, 42);
  const std::vector<double> c = dk::free_points(dom, 6, 43);
  CHECK(a == b);
  CHECK(a != c);

  const dk::Interval box = dom.core_box();
  std::set<double> uniq(a.begin(), a.end());
  CHECK(uniq.size() == a.size());
  for (double x : a) {
    CHECK(x > box.a);
    CHECK(x < box.b);
  }
}

TEST_CASE("report assembly: relative vs near-zero comparison") {
  using dk::make_report;
  const auto id = dk::TheoremId::kernel_reduction;

  // Plain relative pass/fail on O(1) values.
  CHECK(make_report(id, "t", 2, 1, 1.0, 1.0 + 1e-10, 1e-8, 1.0, 0, 0, false).pass);
  CHECK_FALSE(
      make_report(id, "t", 2, 1, 1.0, 1.0 + 1e-6, 1e-8, 1.0, 0, 0, false).pass);

  // Both sides tiny relative to the declared scale: compare absolutely,
  // so 0-vs-roundoff does not divide by zero.
  const dk::TheoremReport zz =
      make_report(id, "t", 2, 1, 1e-14, 0.0, 1e-8, 1.0, 0, 0, false);
  CHECK(zz.pass);
  CHECK(zz.rel_residual == doctest::Approx(1.0));  // honest, but not the gate

  // A genuinely wrong zero answer still fails against the scale.
  CHECK_FALSE(make_report(id, "t", 2, 1, 1e-3, 0.0, 1e-8, 1.0, 0, 0, false).pass);
}

TEST_CASE("reduction identity at explicit free points") {
  const dk::Fixture fx = dk::get_fixture("monomials-n2");
  const dk::GeneralizedKernel kern = fx.kernel(48);
  const dk::QuadratureRule rule = fx.rule(32);

  // k = 1: integral over one variable of the 2x2 determinant
  // collapses to (n-k)! K(p,q).
  const std::vector<double> p{0.3}, q{0.8};
  std::uint64_t cost = 0;
  const double lhs = dk::lhs_reduction(kern, 1, p, q, rule, &cost);
  const double rhs = dk::rhs_reduction(kern, 1, p, q);
  CHECK(cost == 32);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));

  // Full report plumbing on the same configuration.
  const dk::TheoremReport r = dk::verify_reduction(kern, 1, p, q, rule, 0);
  CHECK(r.pass);
  CHECK(r.id == dk::TheoremId::kernel_reduction);
  CHECK(r.n == 2);
  CHECK(r.k == 1);
  CHECK(r.oracle_cost == 32);
}

TEST_CASE("reduction endpoints: k = 0 and k = n") {
  const dk::Fixture fx = dk::get_fixture("mixed-polys-n3");
  const dk::GeneralizedKernel kern = fx.kernel(48);
  const dk::QuadratureRule rule = fx.rule(24);

  // k = 0: the fully integrated determinant equals n! (normalized mode).
  const dk::TheoremReport r0 = dk::verify_reduction(kern, 0, rule, 42);
  CHECK(r0.pass);
  CHECK(r0.rhs == doctest::Approx(dk::factorial_d(3)));

  // k = n: no integration; the report reduces to the pointwise identity.
  const dk::TheoremReport rn = dk::verify_reduction(kern, 3, rule, 42);
  CHECK(rn.pass);
  CHECK(rn.oracle_cost == 0);
}

TEST_CASE("reduction rejects out-of-range point counts") {
  const dk::Fixture fx = dk::get_fixture("monomials-n2");
  const dk::GeneralizedKernel kern = fx.kernel(32);
  const dk::QuadratureRule rule = fx.rule(16);
  CHECK_THROWS_AS(dk::verify_reduction(kern, -1, rule, 0), dk::Error);
  CHECK_THROWS_AS(dk::verify_reduction(kern, 3, rule, 0), dk::Error);
}

TEST_CASE("oracle dimension guard") {
  // n = 6, k = 1 would need a 5-fold tensor integral: refused.
  const dk::Fixture fx = dk::get_fixture("mixed-polys-n6");
  const dk::GeneralizedKernel kern = fx.kernel(48);
  const dk::QuadratureRule rule = fx.rule(10);
  CHECK_THROWS_AS(dk::verify_reduction(kern, 1, rule, 0), dk::CostGuardError);
  CHECK_NOTHROW(dk::verify_reduction(kern, 2, rule, 0));
}

TEST_CASE("two-determinant integral identity has the closed value 1/6") {
  const dk::Fixture fx = dk::get_fixture("monomials-n2");
  const dk::TheoremReport r = dk::verify_andreief(fx.phi, fx.psi, fx.rule(40));
  CHECK(r.pass);
  CHECK(r.id == dk::TheoremId::andreief);
  // n! det G = 2 * (1/12)
  CHECK(r.rhs == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(r.lhs == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("self-contraction and normalization reports") {
  const dk::Fixture fx = dk::get_fixture("hermite-wave-n4");
  const dk::GeneralizedKernel kern = fx.kernel(64);
  const dk::QuadratureRule rule = fx.rule(40);

  const dk::TheoremReport c2 = dk::verify_contraction_k(kern, 2, rule, 42);
  CHECK(c2.pass);
  CHECK(c2.id == dk::TheoremId::self_contraction);
  CHECK(c2.k == 2);

  // Trace normalization: binomial(4, 2) = 6.
  const dk::TheoremReport t2 = dk::verify_knorm(kern, 2, rule);
  CHECK(t2.pass);
  CHECK(t2.rhs == doctest::Approx(6.0));
  CHECK(t2.lhs == doctest::Approx(6.0).epsilon(1e-9));

  CHECK_THROWS_AS(dk::verify_contraction_k(kern, 4, rule, 42),
                  dk::CostGuardError);
  CHECK_THROWS_AS(dk::verify_knorm(kern, 0, rule), dk::Error);
}

TEST_CASE("iterated integration of the orthonormal wave kernel") {
  for (int k : {0, 1, 2}) {
    const dk::TheoremReport r =
        dk::verify_dyson_classical(dk::Family::hermite, 2, k, 32, 42);
    CHECK(r.pass);
    CHECK(r.id == dk::TheoremId::classical_dyson);
  }
  // k = 0 of the orthonormal kernel is exactly n!.
  const dk::TheoremReport r0 =
      dk::verify_dyson_classical(dk::Family::legendre, 3, 0, 32, 42);
  CHECK(r0.pass);
  CHECK(r0.rhs == doctest::Approx(6.0));
}

TEST_CASE("pointwise identity holds to algebraic accuracy") {
  for (const char* name : {"monomials-n4", "hermite-mixed-n3"}) {
    const dk::Fixture fx = dk::get_fixture(name);
    const dk::TheoremReport r =
        dk::verify_pointwise_identity(fx.kernel(64), 42);
    CHECK(r.pass);
    CHECK(r.tolerance == doctest::Approx(1e-12));
    CHECK(r.oracle_cost == 0);
  }
}

TEST_CASE("rank-deficient pairs verify through the detG-multiplied form") {
  const dk::Fixture fx = dk::get_fixture("degenerate-rank1");
  const dk::GeneralizedKernel kern = fx.kernel(64);
  const dk::QuadratureRule rule = fx.rule(40);

  const dk::TheoremReport r1 = dk::verify_reduction(kern, 1, rule, 42);
  CHECK(r1.pass);
  CHECK(r1.unnormalized);
  // Rank n-1 keeps a genuinely nonzero one-point check.
  CHECK(std::abs(r1.lhs) > 1e-3);

  const dk::TheoremReport rp = dk::verify_pointwise_identity(kern, 42);
  CHECK(rp.pass);
  CHECK(rp.unnormalized);
}

TEST_CASE("combinatorial helpers") {
  CHECK(dk::factorial(0) == 1);
  CHECK(dk::factorial(5) == 120);
  CHECK(dk::binomial(4, 2) == 6);
  CHECK(dk::binomial(6, 0) == 1);
  CHECK(dk::binomial(3, 5) == 0);
  CHECK(dk::factorial_d(6) == doctest::Approx(720.0));
  CHECK(dk::binomial_d(6, 3) == doctest::Approx(20.0));
  CHECK_THROWS_AS(dk::factorial(21), std::overflow_error);
  CHECK_THROWS_AS(dk::factorial(-1), std::invalid_argument);
}
