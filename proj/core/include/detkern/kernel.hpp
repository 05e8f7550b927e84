#pragma once

#include <span>
#include <vector>

#include "detkern/gram.hpp"

namespace detkern {

// Raw bilinear pairing of two equal-size function sets:
// Q(x,y) = sum_j phi_j(x) psi_j(y). Generally NOT self-contracting.
class BilinearQ {
 public:
  BilinearQ(FunctionSet phi, FunctionSet psi);

  int n() const { return phi_.size(); }
  const FunctionSet& phi() const { return phi_; }
  const FunctionSet& psi() const { return psi_; }

  double eval(double x, double y) const;

 private:
  FunctionSet phi_;
  FunctionSet psi_;
};

// Self-contracting kernel dressed from the bilinear pairing by the
// inverse overlap matrix:
//
//   K(p,q) = (1/det G) sum_{l,j} phi_j(p) psi_l(q) cof(l,j)
//
// evaluated as a bilinear form through a coefficient matrix precomputed
// once (O(n^2) per point afterwards). When the overlap matrix is singular
// the normalized form does not exist; the object then works in
// unnormalized mode and exposes only detG * K (the cofactor bilinear
// form), which stays finite, and normalized() reports false. Depending on
// the overlap rank the unnormalized kernel either factorizes into a
// product f(p) g(q) (rank n-1) or vanishes identically (rank <= n-2).
// Immutable after construction; evaluation is pure.
class GeneralizedKernel {
 public:
  GeneralizedKernel(FunctionSet phi, FunctionSet psi, GramMatrix gram);

  int n() const { return phi_.size(); }
  const FunctionSet& phi() const { return phi_; }
  const FunctionSet& psi() const { return psi_; }
  const GramMatrix& gram() const { return gram_; }
  const Interval& domain() const { return phi_.domain(); }

  // False when the overlap matrix is rank-deficient; only the
  // unnormalized evaluations are then available.
  bool normalized() const { return normalized_; }

  // K(p,q). Throws SingularNormalizationError in unnormalized mode.
  double eval(double p, double q) const;

  // detG * K(p,q): the cofactor bilinear form, defined for any rank.
  double eval_unnormalized(double p, double q) const;

  // The mode's native value: eval() when normalized, eval_unnormalized()
  // otherwise. All determinant helpers below build on this.
  double value(double p, double q) const {
    return normalized_ ? eval(p, q) : eval_unnormalized(p, q);
  }

  // Independent slow form: sum over columns of the overlap determinant
  // with one column replaced by phi_i(p) psi_a(q). Normalized by det G
  // exactly when value() is. Cost-guarded to n <= 6.
  double eval_column_oracle(double p, double q) const;

  // Determinant of [value(p_i, q_j)] (empty product = 1 for k = 0).
  // k > n is legal but the result is 0 to rounding (the kernel has rank
  // n); *rank_warning is set when the caller provides it.
  double det(std::span<const double> p, std::span<const double> q,
             bool* rank_warning = nullptr) const;

  // det / k!: the k-point kernel.
  double k_point(std::span<const double> p, std::span<const double> q,
                 bool* rank_warning = nullptr) const;

 private:
  FunctionSet phi_;
  FunctionSet psi_;
  GramMatrix gram_;
  MatrixLD coeff_;  // coeff(j,l) = cof(l,j) / detG, or cof(l,j) unnormalized
  bool normalized_;
};

// compute_gram + kernel construction in one step.
GeneralizedKernel build_kernel(const FunctionSet& phi, const FunctionSet& psi,
                               const QuadratureRule& rule);

// Free-function views over the kernel API.
double q_eval(const BilinearQ& q, double x, double y);
double kernel_eval(const GeneralizedKernel& k, double p, double q);
double kernel_eval_column_oracle(const GeneralizedKernel& k, double p,
                                 double q);
double kernel_det(const GeneralizedKernel& k, std::span<const double> p,
                  std::span<const double> q, bool* rank_warning = nullptr);
double k_kernel(const GeneralizedKernel& k, std::span<const double> p,
                std::span<const double> q, bool* rank_warning = nullptr);

// value() on the cartesian product ps x qs: table(i,j) = value(ps[i], qs[j]).
Eigen::MatrixXd kernel_table(const GeneralizedKernel& k,
                             const std::vector<double>& ps,
                             const std::vector<double>& qs);

}  // namespace detkern
