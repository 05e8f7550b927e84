#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "detkern/kernel.hpp"

namespace detkern {

// Cost guard on the number of coupled integration variables any
// brute-force oracle may open.
inline constexpr int kMaxOracleDims = 4;

// Default residual tolerances. Oracle-vs-formula comparisons are limited
// by quadrature accuracy; formula-vs-formula identities only by algebra.
inline constexpr double kOracleTol = 1e-8;
inline constexpr double kAlgebraTol = 1e-12;

// The integral identities the verification engine can exercise.
enum class TheoremId {
  // iterated integration of the orthonormal-wave kernel determinant
  classical_dyson,
  // (n-k)-fold integral of det_n[Q] reduces to (n-k)! det_k[K]
  kernel_reduction,
  // the k-point kernels contract onto themselves under integration
  self_contraction,
  // full trace of the k-point kernel equals binomial(n, k)
  kernel_normalization,
  // n-fold integral of a product of two determinants = n! det G
  andreief,
  // k = n, no integration: det_n[K] = det_n[Q] / det G
  pointwise_det_identity,
};

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& s);

// Outcome of one verification: both sides computed by independent means,
// their residuals, and the pass decision. Near-zero targets are compared
// absolutely against `scale`; everything else relatively.
struct TheoremReport {
  TheoremId id = TheoremId::kernel_reduction;
  std::string fixture;
  int n = 0;
  int k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tolerance = 0.0;
  double scale = 1.0;
  std::uint64_t oracle_cost = 0;  // quadrature grid points consumed
  std::uint64_t seed = 0;         // free-point sequence seed (when used)
  bool unnormalized = false;      // identity checked in detG-multiplied form
  bool pass = false;
};

// Assembles residuals and the pass flag from raw lhs/rhs values.
TheoremReport make_report(TheoremId id, std::string fixture, int n, int k,
                          double lhs, double rhs, double tolerance,
                          double scale, std::uint64_t oracle_cost,
                          std::uint64_t seed, bool unnormalized);

// Deterministic free evaluation points: a seed-offset bit-reversal
// (van der Corput) sequence mapped strictly inside the domain's core box.
// Reproducible, yet avoids special symmetry points.
std::vector<double> free_points(const Interval& domain, int count,
                                std::uint64_t seed);

// ---------------------------------------------------------------------------
// Determinant-reduction identity (free points p, q; the other n-k
// variables are integrated with row and column points set equal).
// In unnormalized mode both sides are multiplied through by detG^k.
// ---------------------------------------------------------------------------

double lhs_reduction(const GeneralizedKernel& kern, int k,
                    std::span<const double> p_free,
                    std::span<const double> q_free, const QuadratureRule& rule,
                    std::uint64_t* cost = nullptr);

double rhs_reduction(const GeneralizedKernel& kern, int k,
                    std::span<const double> p_free,
                    std::span<const double> q_free);

TheoremReport verify_reduction(const GeneralizedKernel& kern, int k,
                              std::span<const double> p_free,
                              std::span<const double> q_free,
                              const QuadratureRule& rule,
                              std::uint64_t seed = 0);

// Overload drawing k free points per side from the seeded sequence.
TheoremReport verify_reduction(const GeneralizedKernel& kern, int k,
                              const QuadratureRule& rule, std::uint64_t seed);

// n-fold integral of det[phi_j(x_i)] * det[psi_j(x_i)] vs n! detG.
TheoremReport verify_andreief(const FunctionSet& phi, const FunctionSet& psi,
                              const QuadratureRule& rule);

// Self-contraction of the k-point kernel at free points p, r.
TheoremReport verify_contraction_k(const GeneralizedKernel& kern, int k,
                                   std::span<const double> p,
                                   std::span<const double> r,
                                   const QuadratureRule& rule,
                                   std::uint64_t seed = 0);
TheoremReport verify_contraction_k(const GeneralizedKernel& kern, int k,
                                   const QuadratureRule& rule,
                                   std::uint64_t seed);

// Full k-fold trace of the k-point kernel vs binomial(n, k).
TheoremReport verify_knorm(const GeneralizedKernel& kern, int k,
                           const QuadratureRule& rule);

// Iterated-integration identity for the orthonormal wave-function kernel
// of a classical family (the self-contracting case with trace n).
TheoremReport verify_dyson_classical(Family family, int n, int k,
                                     int oracle_nodes, std::uint64_t seed);

// k = n member of the reduction identity: no integration, pure algebra.
TheoremReport verify_pointwise_identity(const GeneralizedKernel& kern,
                                        std::uint64_t seed);

}  // namespace detkern
