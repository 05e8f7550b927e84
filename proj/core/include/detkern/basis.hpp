#pragma once

#include <Eigen/Core>
#include <string>
#include <variant>
#include <vector>

#include "detkern/errors.hpp"
#include "detkern/interval.hpp"

namespace detkern {

// Hard cap on polynomial degree per member: the double-precision
// three-term recurrence keeps full accuracy comfortably up to here.
inline constexpr int kMaxDegree = 30;

// Classical orthogonal-polynomial families, identified by their weight:
//   legendre: weight 1 on [-1,1]
//   hermite : weight exp(-x^2) on the real line
//   laguerre: weight exp(-x) on [0,inf)
enum class Family { legendre, hermite, laguerre };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

Interval natural_domain(Family f);
double weight(Family f, double x);
double sqrt_weight(Family f, double x);

// Total mass of the weight over its natural domain (= squared norm h_0).
double weight_mass(Family f);

// Three-term recurrence for the monic polynomials:
//   p_{k+1}(x) = (x - alpha_k) p_k(x) - beta_k p_{k-1}(x),  p_0 = 1.
double recurrence_alpha(Family f, int k);  // k >= 0
double recurrence_beta(Family f, int k);   // k >= 1

double monic_eval(Family f, int degree, double x);
double monic_eval_derivative(Family f, int degree, double x);

// Squared norm h_k = integral of w * p_k^2; closed form h_k = h_0 * prod beta_i.
double monic_norm(Family f, int degree);
std::vector<double> monic_norms(Family f, int count);  // h_0 .. h_{count-1}

// Orthonormal weight-dressed function: h_k^{-1/2} * sqrt(w(x)) * p_k(x).
double wave_eval(Family f, int k, double x);

// ---------------------------------------------------------------------------
// Function-set member descriptors.
// ---------------------------------------------------------------------------

struct Monomial {
  int power = 0;  // x^power
  bool operator==(const Monomial&) const = default;
};

struct MonicPoly {
  Family family = Family::legendre;
  int degree = 0;
  bool operator==(const MonicPoly&) const = default;
};

struct WaveFunction {
  Family family = Family::legendre;
  int index = 0;
  bool operator==(const WaveFunction&) const = default;
};

using SimpleMember = std::variant<Monomial, MonicPoly, WaveFunction>;

struct CompositeTerm {
  double coeff = 1.0;
  SimpleMember part;
  bool operator==(const CompositeTerm&) const = default;
};

// Linear combination of simple members. Linear independence of sets that
// contain composites is the caller's responsibility (checked downstream
// through the overlap-matrix rank, not at construction).
struct Composite {
  std::vector<CompositeTerm> terms;
  bool operator==(const Composite&) const = default;
};

using Member = std::variant<Monomial, MonicPoly, WaveFunction, Composite>;

// Which sqrt-weight factor a member carries. Integration-rule selection
// must be consistent with this (see compute_gram).
enum class WeightClass { none, gaussian, exponential, mixed };

std::string to_string(WeightClass c);

double eval_member(const Member& m, double x);
WeightClass member_weight_class(const Member& m);
std::string describe(const Member& m);

// Ordered family of real-valued functions on a common domain. Immutable
// after construction; safe for concurrent reads.
class FunctionSet {
 public:
  FunctionSet(std::string name, Interval domain, std::vector<Member> members);

  const std::string& name() const { return name_; }
  const Interval& domain() const { return domain_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<Member>& members() const { return members_; }

  // Value of member j (0-based) at x. Throws on a bad index or x outside
  // the domain.
  double eval(int j, double x) const;

  // Aggregate weight class: the common member class, or mixed when the
  // members disagree.
  WeightClass weight_class() const { return weight_class_; }

  // False when the set contains composite members, whose linear
  // independence is not checked at construction.
  bool independence_asserted() const { return independence_asserted_; }

 private:
  std::string name_;
  Interval domain_;
  std::vector<Member> members_;
  WeightClass weight_class_;
  bool independence_asserted_;
};

// Values of every member at every point: table(j, t) = member_j(points[t]).
Eigen::MatrixXd eval_table(const FunctionSet& set,
                           const std::vector<double>& points);

}  // namespace detkern
