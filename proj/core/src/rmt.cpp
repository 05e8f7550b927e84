#include "detkern/rmt.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "detkern/combinatorics.hpp"
#include "detkern/errors.hpp"
#include "detkern/gram.hpp"

namespace detkern {

double vandermonde_sq(std::span<const double> points) {
  const std::size_t n = points.size();
  double prod = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double diff = points[j] - points[i];
      prod *= diff * diff;
    }
  return prod;
}

Ensemble::Ensemble(Family family, int n) : family_(family), n_(n) {
  if (n < 1) throw Error("ensemble size must be >= 1");
  norms_ = monic_norms(family, n);
}

double Ensemble::kernel(double x, double y) const {
  long double sum = 0.0L;
  for (int j = 0; j < n_; ++j)
    sum += static_cast<long double>(wave_eval(family_, j, x)) *
           static_cast<long double>(wave_eval(family_, j, y));
  return static_cast<double>(sum);
}

double Ensemble::kernel_closed_form(double x, double y) const {
  const double hn1 = monic_norm(family_, n_ - 1);
  const double dress = sqrt_weight(family_, x) * sqrt_weight(family_, y);
  if (std::abs(x - y) < 1e-6) {
    // confluent (derivative) form at the removable singularity
    const double mid = 0.5 * (x + y);
    const double pn = monic_eval(family_, n_, mid);
    const double pn1 = monic_eval(family_, n_ - 1, mid);
    const double dpn = monic_eval_derivative(family_, n_, mid);
    const double dpn1 = monic_eval_derivative(family_, n_ - 1, mid);
    return dress * (dpn * pn1 - dpn1 * pn) / hn1;
  }
  const double pn_x = monic_eval(family_, n_, x);
  const double pn_y = monic_eval(family_, n_, y);
  const double pn1_x = monic_eval(family_, n_ - 1, x);
  const double pn1_y = monic_eval(family_, n_ - 1, y);
  return dress * (pn_x * pn1_y - pn1_x * pn_y) / (hn1 * (x - y));
}

double Ensemble::partition_function_closed() const {
  double z = factorial_d(n_);
  for (int i = 0; i < n_; ++i) z *= norms_[static_cast<std::size_t>(i)];
  return z;
}

double Ensemble::partition_function_oracle(int oracle_nodes) const {
  if (n_ > 4)
    throw CostGuardError(
        "partition-function oracle opens n coupled integrals; limited to n <= 4",
        static_cast<double>(n_));
  // weight-embedded rule: the integrand is then just the squared
  // Vandermonde product, a polynomial integrated exactly
  const QuadratureRule rule = gauss_rule(domain(), oracle_nodes);
  return integrate_nd(
      [](const std::vector<double>& x) {
        return vandermonde_sq(std::span<const double>(x.data(), x.size()));
      },
      rule, n_);
}

double Ensemble::correlation_rk(std::span<const double> points) const {
  const int k = static_cast<int>(points.size());
  if (k < 1 || k > n_)
    throw Error("correlation order must satisfy 1 <= k <= n");
  MatrixLD m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m(i, j) = static_cast<long double>(
          kernel(points[static_cast<std::size_t>(i)],
                 points[static_cast<std::size_t>(j)]));
  return static_cast<double>(Eigen::PartialPivLU<MatrixLD>(m).determinant());
}

FunctionSet Ensemble::wave_set() const {
  std::vector<Member> members;
  members.reserve(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) members.push_back(WaveFunction{family_, j});
  return FunctionSet(to_string(family_) + "-wave-n" + std::to_string(n_),
                     domain(), std::move(members));
}

double cd_kernel(const Ensemble& e, double x, double y) {
  return e.kernel(x, y);
}

double partition_function(const Ensemble& e, PartitionMode mode,
                          int oracle_nodes) {
  return mode == PartitionMode::closed_form
             ? e.partition_function_closed()
             : e.partition_function_oracle(oracle_nodes);
}

double correlation_Rk(const Ensemble& e, std::span<const double> points) {
  return e.correlation_rk(points);
}

}  // namespace detkern
