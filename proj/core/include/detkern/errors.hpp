#pragma once

#include <stdexcept>
#include <string>

namespace detkern {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation point or integration rule outside the set's domain,
// or two objects with incompatible domains.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Weight-embedded rule paired with sqrt-weight-dressed members (or a
// plain rule asked to integrate non-decaying members over an unbounded
// domain). The two conventions must never mix silently.
class WeightConventionError : public Error {
 public:
  using Error::Error;
};

class NonFiniteIntegrandError : public Error {
 public:
  NonFiniteIntegrandError(const std::string& msg, double node)
      : Error(msg), node_(node) {}
  double node() const { return node_; }

 private:
  double node_;
};

class CostGuardError : public Error {
 public:
  CostGuardError(const std::string& msg, double requested_cost)
      : Error(msg), cost_(requested_cost) {}
  double requested_cost() const { return cost_; }

 private:
  double cost_;
};

// Normalized-kernel operation requested on a singular overlap matrix.
class SingularNormalizationError : public Error {
 public:
  SingularNormalizationError(const std::string& msg, int rank)
      : Error(msg), rank_(rank) {}
  int rank() const { return rank_; }

 private:
  int rank_;
};

}  // namespace detkern
