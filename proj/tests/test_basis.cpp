#include <doctest.h>

#include <cmath>
#include <vector>

#include "detkern/basis.hpp"

namespace dk = detkern;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("monic recurrences reproduce closed forms") {
  // Legendre: p2 = x^2 - 1/3, p3 = x^3 - (3/5)x.
  CHECK(dk::monic_eval(dk::Family::legendre, 2, 1.0) == doctest::Approx(2.0 / 3.0));
  CHECK(dk::monic_eval(dk::Family::legendre, 2, 0.0) == doctest::Approx(-1.0 / 3.0));
  CHECK(dk::monic_eval(dk::Family::legendre, 3, 0.5) ==
        doctest::Approx(0.125 - 0.3));

  // Hermite (physicists', monic): p2 = x^2 - 1/2, p3 = x^3 - (3/2)x.
  CHECK(dk::monic_eval(dk::Family::hermite, 2, 0.0) == doctest::Approx(-0.5));
  CHECK(dk::monic_eval(dk::Family::hermite, 3, 1.0) == doctest::Approx(-0.5));

  // Laguerre (monic): p1 = x - 1, p2 = x^2 - 4x + 2.
  CHECK(dk::monic_eval(dk::Family::laguerre, 1, 3.0) == doctest::Approx(2.0));
  CHECK(dk::monic_eval(dk::Family::laguerre, 2, 1.0) == doctest::Approx(-1.0));

  // Degree 0 and 1 are universal.
  for (dk::Family f :
       {dk::Family::legendre, dk::Family::hermite, dk::Family::laguerre}) {
    CHECK(dk::monic_eval(f, 0, 0.37) == 1.0);
    CHECK(dk::monic_eval(f, 1, 0.37) ==
          doctest::Approx(0.37 - dk::recurrence_alpha(f, 0)));
  }
}

TEST_CASE("monic derivative matches a finite difference") {
  const double x = 0.4, h = 1e-6;
  for (dk::Family f :
       {dk::Family::legendre, dk::Family::hermite, dk::Family::laguerre}) {
    for (int d : {1, 2, 5, 8}) {
      const double fd =
          (dk::monic_eval(f, d, x + h) - dk::monic_eval(f, d, x - h)) / (2 * h);
      CHECK(dk::monic_eval_derivative(f, d, x) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("squared norms follow the beta products") {
  // Legendre: h0 = 2, h1 = 2/3; Hermite: h0 = sqrt(pi), h1 = sqrt(pi)/2;
  // Laguerre: h0 = 1, h1 = 1.
  CHECK(dk::monic_norm(dk::Family::legendre, 0) == doctest::Approx(2.0));
  CHECK(dk::monic_norm(dk::Family::legendre, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(dk::monic_norm(dk::Family::hermite, 0) == doctest::Approx(std::sqrt(kPi)));
  CHECK(dk::monic_norm(dk::Family::hermite, 1) ==
        doctest::Approx(std::sqrt(kPi) / 2.0));
  CHECK(dk::monic_norm(dk::Family::laguerre, 0) == doctest::Approx(1.0));
  CHECK(dk::monic_norm(dk::Family::laguerre, 1) == doctest::Approx(1.0));

  const std::vector<double> hs = dk::monic_norms(dk::Family::hermite, 3);
  REQUIRE(hs.size() == 3);
  CHECK(hs[2] == doctest::Approx(std::sqrt(kPi) / 2.0));  // h2 = h1 * beta2 = h1
}

TEST_CASE("wave functions are weight-dressed and normalized at samples") {
  CHECK(dk::wave_eval(dk::Family::hermite, 0, 0.0) ==
        doctest::Approx(std::pow(kPi, -0.25)));
  CHECK(dk::wave_eval(dk::Family::legendre, 0, 0.3) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  // Gaussian dressing: wave_0(x) = pi^{-1/4} exp(-x^2/2).
  CHECK(dk::wave_eval(dk::Family::hermite, 0, 1.5) ==
        doctest::Approx(std::pow(kPi, -0.25) * std::exp(-1.125)));
  // Exponential dressing on the half line.
  CHECK(dk::wave_eval(dk::Family::laguerre, 0, 2.0) ==
        doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("member evaluation covers all variants") {
  using dk::Member;
  const Member mono = dk::Monomial{3};
  const Member poly = dk::MonicPoly{dk::Family::legendre, 2};
  const Member wave = dk::WaveFunction{dk::Family::legendre, 0};
  const Member combo = dk::Composite{
      {{2.0, dk::Monomial{1}}, {-1.0, dk::MonicPoly{dk::Family::legendre, 2}}}};

  CHECK(dk::eval_member(mono, 2.0) == doctest::Approx(8.0));
  CHECK(dk::eval_member(poly, 1.0) == doctest::Approx(2.0 / 3.0));
  CHECK(dk::eval_member(wave, -0.2) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(dk::eval_member(combo, 0.5) ==
        doctest::Approx(2.0 * 0.5 - (0.25 - 1.0 / 3.0)));

  CHECK(dk::member_weight_class(mono) == dk::WeightClass::none);
  CHECK(dk::member_weight_class(dk::Member{dk::WaveFunction{dk::Family::hermite, 1}}) ==
        dk::WeightClass::gaussian);
  CHECK(dk::member_weight_class(dk::Member{dk::WaveFunction{dk::Family::laguerre, 1}}) ==
        dk::WeightClass::exponential);
  // A combination mixing dressed and undressed parts is 'mixed'.
  const Member bad = dk::Composite{
      {{1.0, dk::Monomial{0}}, {1.0, dk::WaveFunction{dk::Family::hermite, 0}}}};
  CHECK(dk::member_weight_class(bad) == dk::WeightClass::mixed);
}

TEST_CASE("function set validates construction") {
  const dk::Interval dom = dk::Interval::finite(0.0, 1.0);

  CHECK_THROWS_AS(dk::FunctionSet("empty", dom, {}), dk::Error);
  CHECK_THROWS_AS(dk::FunctionSet("deep", dom, {dk::Monomial{31}}), dk::Error);
  CHECK_THROWS_AS(
      dk::FunctionSet("dup", dom, {dk::Monomial{1}, dk::Monomial{1}}),
      dk::Error);
  CHECK_THROWS_AS(
      dk::FunctionSet("nan", dom,
                      {dk::Composite{{{std::nan(""), dk::Monomial{0}}}}}),
      dk::Error);

  const dk::FunctionSet set("monos", dom, {dk::Monomial{0}, dk::Monomial{1}});
  CHECK(set.size() == 2);
  CHECK(set.eval(1, 0.5) == doctest::Approx(0.5));
  CHECK(set.independence_asserted());
  CHECK_THROWS_AS(set.eval(2, 0.5), std::out_of_range);
  CHECK_THROWS_AS(set.eval(0, 2.0), dk::DomainError);

  const dk::FunctionSet withCombo(
      "combo", dom,
      {dk::Monomial{0}, dk::Composite{{{1.0, dk::Monomial{1}}}}});
  CHECK_FALSE(withCombo.independence_asserted());
}

TEST_CASE("aggregate weight class") {
  const dk::Interval line = dk::Interval::real_line();
  const dk::FunctionSet waves(
      "hw", line,
      {dk::WaveFunction{dk::Family::hermite, 0},
       dk::WaveFunction{dk::Family::hermite, 1}});
  CHECK(waves.weight_class() == dk::WeightClass::gaussian);

  const dk::FunctionSet mixed(
      "mx", line,
      {dk::WaveFunction{dk::Family::hermite, 0}, dk::Monomial{1}});
  CHECK(mixed.weight_class() == dk::WeightClass::mixed);
}

TEST_CASE("eval_table lays out members by row") {
  const dk::FunctionSet set("m", dk::Interval::finite(0.0, 1.0),
                            {dk::Monomial{0}, dk::Monomial{2}});
  const std::vector<double> pts{0.0, 0.5, 1.0};
  const Eigen::MatrixXd t = dk::eval_table(set, pts);
  REQUIRE(t.rows() == 2);
  REQUIRE(t.cols() == 3);
  CHECK(t(0, 1) == 1.0);
  CHECK(t(1, 1) == doctest::Approx(0.25));
  CHECK(t(1, 2) == doctest::Approx(1.0));
}

TEST_CASE("family names round-trip") {
  for (dk::Family f :
       {dk::Family::legendre, dk::Family::hermite, dk::Family::laguerre})
    CHECK(dk::family_from_string(dk::to_string(f)) == f);
  CHECK_THROWS_AS(dk::family_from_string("chebyshev"), dk::Error);
}
