#include <doctest.h>

#include <cmath>
#include <vector>

#include "detkern/basis.hpp"
#include "detkern/quadrature.hpp"

namespace dk = detkern;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("two-point Legendre rule is the textbook one") {
  const dk::QuadratureRule r = dk::gauss_rule(dk::Interval::finite(-1.0, 1.0), 2);
  REQUIRE(r.size() == 2);
  CHECK(r.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(r.nodes[1] == doctest::Approx(+1.0 / std::sqrt(3.0)));
  CHECK(r.weights[0] == doctest::Approx(1.0));
  CHECK(r.weights[1] == doctest::Approx(1.0));
  CHECK_FALSE(r.weight_embedded);
}

TEST_CASE("one-point rules collapse to the recurrence origin") {
  const dk::QuadratureRule h = dk::gauss_rule(dk::Interval::real_line(), 1);
  REQUIRE(h.size() == 1);
  CHECK(h.nodes[0] == doctest::Approx(0.0));
  CHECK(h.weights[0] == doctest::Approx(std::sqrt(kPi)));

  const dk::QuadratureRule l = dk::gauss_rule(dk::Interval::half_line(), 1);
  CHECK(l.nodes[0] == doctest::Approx(1.0));  // alpha_0 of the half-line family
  CHECK(l.weights[0] == doctest::Approx(1.0));
}

TEST_CASE("gauss rules hit polynomial exactness") {
  const dk::QuadratureRule r = dk::gauss_rule(dk::Interval::finite(0.0, 1.0), 6);
  CHECK(dk::integrate_1d([](double x) { return x * x * x; }, r) ==
        doctest::Approx(0.25));
  CHECK(dk::integrate_1d([](double x) { return std::pow(x, 11); }, r) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-14));

  // Embedded real-line rule: integral of exp(-x^2) x^2 = sqrt(pi)/2.
  const dk::QuadratureRule h = dk::gauss_rule(dk::Interval::real_line(), 8);
  CHECK(h.weight_embedded);
  CHECK(dk::integrate_1d([](double x) { return x * x; }, h) ==
        doctest::Approx(std::sqrt(kPi) / 2.0));

  // Embedded half-line rule: integral of exp(-x) x^3 = 6.
  const dk::QuadratureRule lag = dk::gauss_rule(dk::Interval::half_line(), 8);
  CHECK(dk::integrate_1d([](double x) { return x * x * x; }, lag) ==
        doctest::Approx(6.0));
}

TEST_CASE("plain-dx rules integrate dressed members literally") {
  // The squared 0th wave integrates to 1 over each natural domain.
  for (const dk::Interval dom :
       {dk::Interval::finite(-1.0, 1.0), dk::Interval::real_line(),
        dk::Interval::half_line()}) {
    const dk::QuadratureRule r = dk::lebesgue_rule(dom, 32);
    CHECK_FALSE(r.weight_embedded);
    const dk::Family f = dom.is_finite()    ? dk::Family::legendre
                         : dom.is_real_line() ? dk::Family::hermite
                                              : dk::Family::laguerre;
    const double norm = dk::integrate_1d(
        [&](double x) {
          const double v = dk::wave_eval(f, 0, x);
          return v * v;
        },
        r);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("plain half-line rules refuse node counts that overflow") {
  CHECK_THROWS_AS(dk::lebesgue_rule(dk::Interval::half_line(), 200), dk::Error);
  CHECK_NOTHROW(dk::lebesgue_rule(dk::Interval::half_line(), 160));
  CHECK_THROWS_AS(dk::gauss_rule(dk::Interval::real_line(), 0), dk::Error);
  CHECK_THROWS_AS(dk::gauss_rule(dk::Interval::real_line(), 300), dk::Error);
}

TEST_CASE("tensor integration reproduces separable and coupled integrals") {
  const dk::QuadratureRule r = dk::gauss_rule(dk::Interval::finite(0.0, 1.0), 12);

  // integral over the unit square of x*y = 1/4
  CHECK(dk::integrate_nd([](const std::vector<double>& x) { return x[0] * x[1]; },
                         r, 2) == doctest::Approx(0.25));
  // integral of (x - y)^2 = 1/6
  CHECK(dk::integrate_nd(
            [](const std::vector<double>& x) {
              const double d = x[0] - x[1];
              return d * d;
            },
            r, 2) == doctest::Approx(1.0 / 6.0));
  // 3D: product of means
  CHECK(dk::integrate_nd(
            [](const std::vector<double>& x) { return x[0] * x[1] * x[2]; }, r,
            3) == doctest::Approx(0.125));
}

TEST_CASE("d = 1 tensor integration equals the 1D path bit for bit") {
  const dk::QuadratureRule r = dk::gauss_rule(dk::Interval::finite(0.0, 1.0), 24);
  auto f1 = [](double x) { return std::exp(x) * x; };
  const double a = dk::integrate_1d(f1, r);
  const double b = dk::integrate_nd(
      [&](const std::vector<double>& x) { return f1(x[0]); }, r, 1);
  CHECK(a == b);
}

TEST_CASE("indexed traversal agrees with coordinate traversal") {
  const dk::QuadratureRule r = dk::gauss_rule(dk::Interval::finite(0.0, 1.0), 8);
  const double via_coords = dk::integrate_nd(
      [](const std::vector<double>& x) { return x[0] * x[0] + x[1]; }, r, 2);
  const double via_index = dk::integrate_nd_indexed(
      [&](const std::vector<int>& idx) {
        const double x0 = r.nodes[static_cast<std::size_t>(idx[0])];
        const double x1 = r.nodes[static_cast<std::size_t>(idx[1])];
        return x0 * x0 + x1;
      },
      r, 2);
  CHECK(via_coords == via_index);
}

TEST_CASE("cost guard trips before the grid explodes") {
  const dk::QuadratureRule r = dk::gauss_rule(dk::Interval::finite(0.0, 1.0), 100);
  CHECK(dk::tensor_cost(r, 4) == doctest::Approx(1e8));
  CHECK_THROWS_AS(
      dk::integrate_nd([](const std::vector<double>&) { return 1.0; }, r, 5),
      dk::CostGuardError);
  try {
    dk::integrate_nd([](const std::vector<double>&) { return 1.0; }, r, 5);
  } catch (const dk::CostGuardError& e) {
    CHECK(e.requested_cost() == doctest::Approx(1e10));
  }
}

TEST_CASE("non-finite integrands are reported with the offending node") {
  const dk::QuadratureRule r = dk::gauss_rule(dk::Interval::finite(-1.0, 1.0), 3);
  // Pole placed exactly on the middle node, so the sample is infinite.
  const double mid = r.nodes[1];
  const auto f = [mid](double x) { return 1.0 / (x - mid); };
  CHECK_THROWS_AS(dk::integrate_1d(f, r), dk::NonFiniteIntegrandError);
  try {
    dk::integrate_1d(f, r);
  } catch (const dk::NonFiniteIntegrandError& e) {
    CHECK(e.node() == doctest::Approx(mid));
  }
}

TEST_CASE("node tables are sane at scale") {
  const dk::QuadratureRule r = dk::gauss_rule(dk::Interval::real_line(), 64);
  REQUIRE(r.size() == 64);
  for (int i = 1; i < r.size(); ++i)
    CHECK(r.nodes[static_cast<std::size_t>(i)] >
          r.nodes[static_cast<std::size_t>(i - 1)]);
  for (double w : r.weights) CHECK(w > 0.0);
  // Total mass of the embedded weight = sqrt(pi).
  double mass = 0.0;
  for (double w : r.weights) mass += w;
  CHECK(mass == doctest::Approx(std::sqrt(kPi)));
}
