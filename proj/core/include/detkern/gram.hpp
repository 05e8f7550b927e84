#pragma once

#include <Eigen/Dense>

#include "detkern/basis.hpp"
#include "detkern/quadrature.hpp"

namespace detkern {

using MatrixLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Overlap matrix of two function sets: entries(i,k) = integral of
// phi_i * psi_k over the common domain. The determinant is the kernel
// normalization constant; cofactors supply the kernel coefficients.
//
// Determinant, factorization, inverse and cofactors are carried in
// extended precision internally: monomial-type sets produce Hilbert-like
// conditioning, and plain double here would eat the downstream 1e-10
// identity budgets. A vanishing determinant is NOT an error at
// construction time; it switches downstream kernels to unnormalized mode.
// Immutable after construction; safe for concurrent reads.
class GramMatrix {
 public:
  // entry_scale is the magnitude of the sums that produced the entries
  // (quadrature accumulation mass); it floors the rank threshold so an
  // exactly-zero integral computed with roundoff is still seen as zero.
  // Zero means: no such information, use the largest singular value alone.
  explicit GramMatrix(const Eigen::MatrixXd& entries, double entry_scale = 0.0);
  explicit GramMatrix(MatrixLD entries, double entry_scale = 0.0);

  int n() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  const MatrixLD& entries_ld() const { return entries_ld_; }

  double det() const { return static_cast<double>(det_); }
  long double det_ld() const { return det_; }

  // Numerical rank: the count of singular values above rank_tolerance().
  int rank() const { return rank_; }
  // Threshold actually used: 1e-9 times the larger of the top singular
  // value and the entry accumulation scale.
  double rank_tolerance() const { return tol_rank_; }
  bool nonsingular() const { return rank_ == n(); }

  // Signed cofactor of entry (j,l): (-1)^(l+j) times the determinant of
  // entries with row j and column l removed (empty determinant = 1 at
  // n = 1). For nonsingular matrices cofactor(l,j) / det() = inverse()(l,j).
  double cofactor(int l, int j) const;

  // Full cofactor table A with A(l,j) = cofactor(l,j); well-defined for
  // singular matrices too.
  const Eigen::MatrixXd& cofactor_table() const { return cof_d_; }
  const MatrixLD& cofactor_table_ld() const { return cof_; }

  // Inverse via the pivoted factorization (triangular solves, not
  // cofactors). Throws SingularNormalizationError carrying rank() when
  // rank < n.
  Eigen::MatrixXd inverse() const;
  MatrixLD inverse_ld() const;

 private:
  void build();

  Eigen::MatrixXd entries_;
  MatrixLD entries_ld_;
  MatrixLD cof_;
  Eigen::MatrixXd cof_d_;
  Eigen::PartialPivLU<MatrixLD> lu_;
  long double det_ = 0.0L;
  int rank_ = 0;
  double tol_rank_ = 0.0;
  double entry_scale_ = 0.0;
};

// Throws unless products phi_i * psi_k can be integrated by the rule:
//  - a weight-embedded rule requires both sets to be free of sqrt-weight
//    dressing (the rule supplies the weight as the measure);
//  - a plain-dx rule on an unbounded domain requires both sets to be
//    uniformly dressed with the weight that matches the domain, or the
//    integrands would not decay;
//  - domains of both sets and the rule must agree, and the sets must have
//    equal size.
void validate_weight_convention(const FunctionSet& phi, const FunctionSet& psi,
                                const QuadratureRule& rule);

// Builds the overlap matrix entry-wise through the given rule, after
// running validate_weight_convention on the triple.
GramMatrix compute_gram(const FunctionSet& phi, const FunctionSet& psi,
                        const QuadratureRule& rule);

// Free-function views of the member operations, for call sites that read
// better with the matrix as an argument.
double signed_minor(const GramMatrix& g, int l, int j);
Eigen::MatrixXd inverse_row_solve(const GramMatrix& g);

}  // namespace detkern
