#include "detkern/gram.hpp"

#include <cmath>
#include <utility>

#include "detkern/errors.hpp"

namespace detkern {

namespace {

long double minor_det(const MatrixLD& m, int drop_row, int drop_col) {
  const int n = static_cast<int>(m.rows());
  if (n == 1) return 1.0L;  // empty determinant
  MatrixLD sub(n - 1, n - 1);
  for (int r = 0, rr = 0; r < n; ++r) {
    if (r == drop_row) continue;
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == drop_col) continue;
      sub(rr, cc) = m(r, c);
      ++cc;
    }
    ++rr;
  }
  return Eigen::PartialPivLU<MatrixLD>(sub).determinant();
}

}  // namespace

GramMatrix::GramMatrix(const Eigen::MatrixXd& entries, double entry_scale)
    : GramMatrix(MatrixLD(entries.cast<long double>()), entry_scale) {}

GramMatrix::GramMatrix(MatrixLD entries, double entry_scale)
    : entries_ld_(std::move(entries)), entry_scale_(entry_scale) {
  if (entries_ld_.rows() != entries_ld_.cols() || entries_ld_.rows() < 1)
    throw Error("overlap matrix must be square and non-empty");
  if (!(entry_scale_ >= 0.0) || !std::isfinite(entry_scale_))
    throw Error("entry_scale must be finite and non-negative");
  entries_ = entries_ld_.cast<double>();
  build();
}

void GramMatrix::build() {
  const int n = this->n();

  lu_.compute(entries_ld_);
  det_ = lu_.determinant();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(entries_);
  const double sigma_max = svd.singularValues()(0);
  tol_rank_ = 1e-9 * std::max(sigma_max, entry_scale_);
  rank_ = 0;
  for (int i = 0; i < n; ++i)
    if (svd.singularValues()(i) > tol_rank_) ++rank_;

  cof_.resize(n, n);
  if (rank_ == n) {
    // cofactor table = det * transpose-free inverse relation:
    // cof(l,j) = det * inverse(l,j)
    const MatrixLD inv = lu_.solve(MatrixLD::Identity(n, n));
    cof_ = det_ * inv;
  } else {
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j) {
        const long double sign = ((l + j) % 2 == 0) ? 1.0L : -1.0L;
        cof_(l, j) = sign * minor_det(entries_ld_, j, l);
      }
  }
  cof_d_ = cof_.cast<double>();
}

double GramMatrix::cofactor(int l, int j) const {
  if (l < 0 || l >= n() || j < 0 || j >= n())
    throw std::out_of_range("cofactor index out of range");
  return cof_d_(l, j);
}

Eigen::MatrixXd GramMatrix::inverse() const {
  return inverse_ld().cast<double>();
}

MatrixLD GramMatrix::inverse_ld() const {
  if (!nonsingular())
    throw SingularNormalizationError(
        "overlap matrix is singular (rank " + std::to_string(rank_) + " of " +
            std::to_string(n()) + "); use the unnormalized quantities instead",
        rank_);
  return lu_.solve(MatrixLD::Identity(n(), n()));
}

void validate_weight_convention(const FunctionSet& phi, const FunctionSet& psi,
                                const QuadratureRule& rule) {
  if (phi.size() != psi.size())
    throw Error("function sets must have equal size, got " +
                std::to_string(phi.size()) + " and " +
                std::to_string(psi.size()));
  if (phi.domain() != psi.domain() || phi.domain() != rule.domain)
    throw DomainError("function sets and integration rule must share one domain");

  const Interval& dom = rule.domain;
  const WeightClass cphi = phi.weight_class();
  const WeightClass cpsi = psi.weight_class();
  if (rule.weight_embedded) {
    if (cphi != WeightClass::none || cpsi != WeightClass::none)
      throw WeightConventionError(
          "weight-embedded rule cannot integrate sqrt-weight-dressed members; "
          "use a plain-dx rule");
  } else if (!dom.is_finite()) {
    const WeightClass needed =
        dom.is_real_line() ? WeightClass::gaussian : WeightClass::exponential;
    if (cphi != needed || cpsi != needed)
      throw WeightConventionError(
          "plain-dx rule on an unbounded domain requires both sets to be "
          "uniformly dressed with the decaying sqrt-weight (got " +
          to_string(cphi) + " and " + to_string(cpsi) + ")");
  }
}

GramMatrix compute_gram(const FunctionSet& phi, const FunctionSet& psi,
                        const QuadratureRule& rule) {
  validate_weight_convention(phi, psi, rule);

  const int n = phi.size();
  const Eigen::MatrixXd vphi = eval_table(phi, rule.nodes);
  const Eigen::MatrixXd vpsi = eval_table(psi, rule.nodes);
  const int m = rule.size();

  MatrixLD entries(n, n);
  long double entry_scale = 0.0L;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long double acc = 0.0L;
      long double mass = 0.0L;  // sum of |terms|: the roundoff scale
      for (int t = 0; t < m; ++t) {
        const long double term =
            static_cast<long double>(rule.weights[static_cast<std::size_t>(t)]) *
            static_cast<long double>(vphi(i, t)) *
            static_cast<long double>(vpsi(k, t));
        acc += term;
        mass += std::abs(term);
      }
      if (!std::isfinite(static_cast<double>(acc)))
        throw NonFiniteIntegrandError(
            "overlap entry (" + std::to_string(i) + "," + std::to_string(k) +
                ") is not finite",
            0.0);
      entries(i, k) = acc;
      entry_scale = std::max(entry_scale, mass);
    }
  return GramMatrix(std::move(entries), static_cast<double>(entry_scale));
}

double signed_minor(const GramMatrix& g, int l, int j) {
  return g.cofactor(l, j);
}

Eigen::MatrixXd inverse_row_solve(const GramMatrix& g) { return g.inverse(); }

}  // namespace detkern
