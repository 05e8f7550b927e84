#include "detkern/kernel.hpp"

#include <cmath>
#include <utility>

#include "detkern/combinatorics.hpp"
#include "detkern/errors.hpp"

namespace detkern {

namespace {

using VectorLD = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

void check_pair(const FunctionSet& phi, const FunctionSet& psi) {
  if (phi.size() != psi.size())
    throw Error("the two function sets must have equal size");
  if (phi.domain() != psi.domain())
    throw DomainError("the two function sets must share one domain");
}

VectorLD values_ld(const FunctionSet& set, double x) {
  VectorLD v(set.size());
  for (int j = 0; j < set.size(); ++j)
    v(j) = static_cast<long double>(set.eval(j, x));
  return v;
}

}  // namespace

BilinearQ::BilinearQ(FunctionSet phi, FunctionSet psi)
    : phi_(std::move(phi)), psi_(std::move(psi)) {
  check_pair(phi_, psi_);
}

double BilinearQ::eval(double x, double y) const {
  long double sum = 0.0L;
  for (int j = 0; j < n(); ++j)
    sum += static_cast<long double>(phi_.eval(j, x)) *
           static_cast<long double>(psi_.eval(j, y));
  return static_cast<double>(sum);
}

GeneralizedKernel::GeneralizedKernel(FunctionSet phi, FunctionSet psi,
                                     GramMatrix gram)
    : phi_(std::move(phi)), psi_(std::move(psi)), gram_(std::move(gram)) {
  check_pair(phi_, psi_);
  if (gram_.n() != phi_.size())
    throw Error("overlap matrix size does not match the function sets");
  normalized_ = gram_.nonsingular();
  coeff_ = gram_.cofactor_table_ld().transpose();
  if (normalized_) coeff_ /= gram_.det_ld();
}

double GeneralizedKernel::eval(double p, double q) const {
  if (!normalized_)
    throw SingularNormalizationError(
        "kernel is in unnormalized mode (overlap rank " +
            std::to_string(gram_.rank()) + " of " + std::to_string(n()) +
            "); call eval_unnormalized instead",
        gram_.rank());
  const VectorLD a = values_ld(phi_, p);
  const VectorLD b = values_ld(psi_, q);
  return static_cast<double>(a.dot(coeff_ * b));
}

double GeneralizedKernel::eval_unnormalized(double p, double q) const {
  const VectorLD a = values_ld(phi_, p);
  const VectorLD b = values_ld(psi_, q);
  if (normalized_)
    return static_cast<double>(gram_.det_ld() * a.dot(coeff_ * b));
  return static_cast<double>(a.dot(coeff_ * b));
}

double GeneralizedKernel::eval_column_oracle(double p, double q) const {
  if (n() > 6)
    throw CostGuardError(
        "column-replacement oracle is limited to sets of size <= 6",
        static_cast<double>(n()));
  const VectorLD a = values_ld(phi_, p);
  const VectorLD b = values_ld(psi_, q);
  long double sum = 0.0L;
  MatrixLD m(n(), n());
  for (int col = 0; col < n(); ++col) {
    m = gram_.entries_ld();
    for (int i = 0; i < n(); ++i) m(i, col) = a(i) * b(col);
    sum += Eigen::PartialPivLU<MatrixLD>(m).determinant();
  }
  if (normalized_) sum /= gram_.det_ld();
  return static_cast<double>(sum);
}

double GeneralizedKernel::det(std::span<const double> p,
                              std::span<const double> q,
                              bool* rank_warning) const {
  if (p.size() != q.size())
    throw Error("kernel determinant needs equally many row and column points");
  const int k = static_cast<int>(p.size());
  if (rank_warning) *rank_warning = k > n();
  if (k == 0) return 1.0;
  std::vector<VectorLD> b;
  b.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    b.push_back(values_ld(psi_, q[static_cast<std::size_t>(j)]));
  MatrixLD m(k, k);
  for (int i = 0; i < k; ++i) {
    const VectorLD a = values_ld(phi_, p[static_cast<std::size_t>(i)]);
    const VectorLD row = (a.transpose() * coeff_).transpose();
    for (int j = 0; j < k; ++j)
      m(i, j) = row.dot(b[static_cast<std::size_t>(j)]);
  }
  return static_cast<double>(Eigen::PartialPivLU<MatrixLD>(m).determinant());
}

double GeneralizedKernel::k_point(std::span<const double> p,
                                  std::span<const double> q,
                                  bool* rank_warning) const {
  const int k = static_cast<int>(p.size());
  return det(p, q, rank_warning) / factorial_d(k);
}

GeneralizedKernel build_kernel(const FunctionSet& phi, const FunctionSet& psi,
                               const QuadratureRule& rule) {
  return GeneralizedKernel(phi, psi, compute_gram(phi, psi, rule));
}

double q_eval(const BilinearQ& q, double x, double y) { return q.eval(x, y); }

double kernel_eval(const GeneralizedKernel& k, double p, double q) {
  return k.eval(p, q);
}

double kernel_eval_column_oracle(const GeneralizedKernel& k, double p,
                                 double q) {
  return k.eval_column_oracle(p, q);
}

double kernel_det(const GeneralizedKernel& k, std::span<const double> p,
                  std::span<const double> q, bool* rank_warning) {
  return k.det(p, q, rank_warning);
}

double k_kernel(const GeneralizedKernel& k, std::span<const double> p,
                std::span<const double> q, bool* rank_warning) {
  return k.k_point(p, q, rank_warning);
}

Eigen::MatrixXd kernel_table(const GeneralizedKernel& k,
                             const std::vector<double>& ps,
                             const std::vector<double>& qs) {
  Eigen::MatrixXd table(static_cast<Eigen::Index>(ps.size()),
                        static_cast<Eigen::Index>(qs.size()));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < qs.size(); ++j)
      table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          k.value(ps[i], qs[j]);
  return table;
}

}  // namespace detkern
