#pragma once

#include <functional>
#include <vector>

#include "detkern/interval.hpp"

namespace detkern {

// Node-count cap for Gauss rules.
inline constexpr int kMaxNodes = 256;

// Cap for half-line plain-dx rules: beyond ~170 nodes the de-embedding
// factor exp(+node) overflows double at the largest node.
inline constexpr int kMaxNodesHalfLinePlain = 170;

// Tensor-product cost guard: total grid points m^d must stay below this.
inline constexpr double kMaxGridPoints = 1e8;

/// Nodes and weights of a 1D integration rule on a domain.
///
/// Two weight conventions coexist and must never be mixed silently:
///  - weight_embedded = true: the weights absorb the classical weight
///    function, so sum w_i f(x_i) ~ integral of w(x) f(x) dx (classical
///    Gauss-Hermite / Gauss-Laguerre).
///  - weight_embedded = false: sum w_i f(x_i) ~ integral of f(x) dx, a
///    plain-dx rule; on unbounded domains the integrand itself must decay.
/// Finite-interval Gauss-Legendre has weight 1 and is reported as NOT
/// embedded. Rules are immutable; integration is pure.
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // all positive
  Interval domain;
  bool weight_embedded = false;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Classical Gauss rule matched to the domain: Legendre on finite [a,b]
// (affinely mapped), Hermite on the real line (weight exp(-x^2)),
// Laguerre on the half line (weight exp(-x)). Nodes and weights come from
// the symmetric tridiagonal eigenproblem of the recurrence coefficients.
// Exact for polynomials up to degree 2m-1 against the embedded weight.
// Requires 1 <= m <= 256.
QuadratureRule gauss_rule(const Interval& domain, int m);

// Plain-dx rule on the domain: identical to gauss_rule on finite
// intervals; on unbounded domains each Gauss-Hermite/Laguerre weight is
// divided by the weight function at its node, so decaying integrands are
// integrated literally against dx. Exact for w(x) * polynomial.
QuadratureRule lebesgue_rule(const Interval& domain, int m);

// Sum of w_i f(x_i). Throws NonFiniteIntegrandError naming the offending
// node if f is not finite somewhere.
double integrate_1d(const std::function<double(double)>& f,
                    const QuadratureRule& rule);

// Full tensor-product integral over rule^d, summed in lexicographic node
// order with compensated summation; deterministic and reproducible.
// f receives the d coordinates.
double integrate_nd(const std::function<double(const std::vector<double>&)>& f,
                    const QuadratureRule& rule, int d);

// Same traversal, but f receives the d node indices instead of the
// coordinates, so callers can evaluate from precomputed per-node tables.
double integrate_nd_indexed(
    const std::function<double(const std::vector<int>&)>& f,
    const QuadratureRule& rule, int d);

// Number of grid points integrate_nd would visit (m^d), the quantity
// checked against the cost guard.
double tensor_cost(const QuadratureRule& rule, int d);

}  // namespace detkern
