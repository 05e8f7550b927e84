#pragma once

#include <span>
#include <string>
#include <vector>

#include "detkern/basis.hpp"
#include "detkern/quadrature.hpp"

namespace detkern {

// Squared Vandermonde product prod_{i<j} (x_j - x_i)^2, computed as a
// squared product rather than a determinant for stability.
double vandermonde_sq(std::span<const double> points);

// A unitary-invariant eigenvalue ensemble: classical weight, matrix size,
// and the projection kernel of its orthonormal wave functions.
// Immutable; evaluations are pure.
class Ensemble {
 public:
  Ensemble(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  Interval domain() const { return natural_domain(family_); }
  // Squared norms h_0 .. h_{n-1} of the monic polynomials.
  const std::vector<double>& norms() const { return norms_; }

  // Projection kernel: sum_{j<n} wave_j(x) wave_j(y). O(n) per call.
  double kernel(double x, double y) const;

  // Two-polynomial ratio form of the same kernel, as an independent
  // cross-check; switches to the derivative (confluent) form when
  // |x - y| < 1e-6.
  double kernel_closed_form(double x, double y) const;

  // Normalization of the unscaled joint eigenvalue density:
  // n! * prod_{i=1..n} h_{i-1}.
  double partition_function_closed() const;

  // Same quantity by brute force: the n-fold weighted integral of the
  // squared Vandermonde product. Cost-guarded to n <= 4.
  double partition_function_oracle(int oracle_nodes) const;

  // k-point eigenvalue correlation: det_k[ kernel(x_i, x_j) ], k <= n.
  double correlation_rk(std::span<const double> points) const;

  // The wave functions as a FunctionSet, for feeding this ensemble
  // through the general kernel machinery.
  FunctionSet wave_set() const;

 private:
  Family family_;
  int n_;
  std::vector<double> norms_;
};

enum class PartitionMode { closed_form, oracle };

// Free-function views over the ensemble API.
double cd_kernel(const Ensemble& e, double x, double y);
double partition_function(const Ensemble& e, PartitionMode mode,
                          int oracle_nodes = 24);
double correlation_Rk(const Ensemble& e, std::span<const double> points);

}  // namespace detkern
