#include "detkern/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "detkern/basis.hpp"
#include "detkern/errors.hpp"

namespace detkern {

namespace {

// Neumaier variant of compensated summation: robust when terms exceed the
// running sum, which plain Kahan mishandles.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Nodes/weights from the symmetric tridiagonal recurrence matrix: nodes
// are its eigenvalues, weights mu0 times the squared first eigenvector
// components.
QuadratureRule golub_welsch(Family family, int m) {
  Eigen::VectorXd diag(m), subdiag(m > 1 ? m - 1 : 0);
  for (int k = 0; k < m; ++k) diag(k) = recurrence_alpha(family, k);
  for (int k = 1; k < m; ++k)
    subdiag(k - 1) = std::sqrt(recurrence_beta(family, k));

  QuadratureRule rule;
  rule.domain = natural_domain(family);
  rule.weight_embedded = family != Family::legendre;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));

  if (m == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = weight_mass(family);
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw Error("tridiagonal eigensolve failed while building Gauss rule");

  const double mu0 = weight_mass(family);
  for (int i = 0; i < m; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

void check_node_count(int m, int cap) {
  if (m < 1 || m > cap)
    throw Error("node count " + std::to_string(m) +
                " out of range [1, " + std::to_string(cap) + "]");
}

void validate_rule(const QuadratureRule& rule) {
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    if (!std::isfinite(rule.nodes[i]) || !std::isfinite(rule.weights[i]) ||
        rule.weights[i] <= 0.0)
      throw Error("integration rule has a non-finite node or non-positive weight");
    if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))
      throw Error("integration rule nodes are not strictly increasing");
  }
}

}  // namespace

QuadratureRule gauss_rule(const Interval& domain, int m) {
  check_node_count(m, kMaxNodes);
  QuadratureRule rule;
  if (domain.is_finite()) {
    rule = golub_welsch(Family::legendre, m);
    const double mid = 0.5 * (domain.a + domain.b);
    const double half = 0.5 * (domain.b - domain.a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      rule.nodes[i] = mid + half * rule.nodes[i];
      rule.weights[i] *= half;
    }
    rule.domain = domain;
  } else if (domain.is_real_line()) {
    rule = golub_welsch(Family::hermite, m);
  } else if (domain.is_half_line()) {
    rule = golub_welsch(Family::laguerre, m);
  } else {
    throw DomainError("unsupported domain " + domain.to_string() +
                      " for a Gauss rule");
  }
  validate_rule(rule);
  return rule;
}

QuadratureRule lebesgue_rule(const Interval& domain, int m) {
  if (domain.is_finite()) return gauss_rule(domain, m);
  if (domain.is_half_line()) check_node_count(m, kMaxNodesHalfLinePlain);
  QuadratureRule rule = gauss_rule(domain, m);
  const Family family =
      domain.is_real_line() ? Family::hermite : Family::laguerre;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    rule.weights[i] /= weight(family, rule.nodes[i]);
  rule.weight_embedded = false;
  validate_rule(rule);
  return rule;
}

double integrate_1d(const std::function<double(double)>& f,
                    const QuadratureRule& rule) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v))
      throw NonFiniteIntegrandError(
          "integrand is not finite at node " + std::to_string(rule.nodes[i]),
          rule.nodes[i]);
    acc.add(rule.weights[i] * v);
  }
  return acc.value();
}

double tensor_cost(const QuadratureRule& rule, int d) {
  return std::pow(static_cast<double>(rule.size()), d);
}

double integrate_nd_indexed(
    const std::function<double(const std::vector<int>&)>& f,
    const QuadratureRule& rule, int d) {
  if (d < 1) throw Error("tensor integration requires dimension >= 1");
  const double cost = tensor_cost(rule, d);
  if (cost > kMaxGridPoints) {
    std::ostringstream os;
    os << "tensor grid of " << rule.size() << "^" << d << " = " << cost
       << " points exceeds the budget of " << kMaxGridPoints;
    throw CostGuardError(os.str(), cost);
  }

  const int m = rule.size();
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  CompensatedSum acc;
  for (;;) {
    double w = 1.0;
    for (int i = 0; i < d; ++i)
      w *= rule.weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    const double v = f(idx);
    if (!std::isfinite(v))
      throw NonFiniteIntegrandError(
          "integrand is not finite at a grid point with first coordinate " +
              std::to_string(rule.nodes[static_cast<std::size_t>(idx[0])]),
          rule.nodes[static_cast<std::size_t>(idx[0])]);
    acc.add(w * v);

    // lexicographic odometer, last index fastest
    int pos = d - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == m) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return acc.value();
}

double integrate_nd(const std::function<double(const std::vector<double>&)>& f,
                    const QuadratureRule& rule, int d) {
  if (d == 1) {
    // keep the 1D path bit-identical to integrate_1d
    return integrate_1d([&f](double x) { return f(std::vector<double>{x}); },
                        rule);
  }
  std::vector<double> point(static_cast<std::size_t>(d));
  return integrate_nd_indexed(
      [&](const std::vector<int>& idx) {
        for (int i = 0; i < d; ++i)
          point[static_cast<std::size_t>(i)] =
              rule.nodes[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        return f(point);
      },
      rule, d);
}

}  // namespace detkern
