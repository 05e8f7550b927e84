#pragma once

#include <string>
#include <vector>

#include "detkern/kernel.hpp"

namespace detkern {

// A named, ready-to-run pair of function sets with a matching plain-dx
// integration rule. These cover the verification matrix: plain monomials,
// deliberately non-orthogonal polynomial mixes, orthonormal wave sets on
// every supported domain, and rank-deficient pairs that exercise the
// unnormalized kernel modes.
struct Fixture {
  std::string name;
  std::string description;
  FunctionSet phi;
  FunctionSet psi;

  const Interval& domain() const { return phi.domain(); }

  // Plain-dx rule on the fixture domain with m nodes; valid for both the
  // overlap build and the brute-force oracles.
  QuadratureRule rule(int m) const { return lebesgue_rule(domain(), m); }

  // Overlap matrix + kernel built with rule(m).
  GeneralizedKernel kernel(int m) const {
    return build_kernel(phi, psi, rule(m));
  }
};

// All built-in fixture names, in a stable listing order.
std::vector<std::string> fixture_names();

bool has_fixture(const std::string& name);

// Throws with the list of valid names on an unknown fixture.
Fixture get_fixture(const std::string& name);

}  // namespace detkern
