#include "detkern/fixtures.hpp"

#include <sstream>

#include "detkern/errors.hpp"

namespace detkern {

namespace {

std::vector<Member> monomials(int n) {
  std::vector<Member> m;
  for (int j = 0; j < n; ++j) m.push_back(Monomial{j});
  return m;
}

std::vector<Member> waves(Family f, int n, int offset = 0) {
  std::vector<Member> m;
  for (int j = 0; j < n; ++j) m.push_back(WaveFunction{f, offset + j});
  return m;
}

// Non-orthogonal but well-conditioned mixes of orthonormal waves:
// phi_j = wave_j + 0.3 wave_{j-1}; psi_j = wave_j + 0.25 wave_{j-2}.
// The overlap matrix is identity plus sparse off-diagonal bands.
std::vector<Member> mixed_phi(Family f, int n) {
  std::vector<Member> m;
  m.push_back(WaveFunction{f, 0});
  for (int j = 1; j < n; ++j)
    m.push_back(Composite{{{1.0, WaveFunction{f, j}},
                           {0.3, WaveFunction{f, j - 1}}}});
  return m;
}

std::vector<Member> mixed_psi(Family f, int n) {
  std::vector<Member> m;
  m.push_back(WaveFunction{f, 0});
  if (n > 1) m.push_back(WaveFunction{f, 1});
  for (int j = 2; j < n; ++j)
    m.push_back(Composite{{{1.0, WaveFunction{f, j}},
                           {0.25, WaveFunction{f, j - 2}}}});
  return m;
}

struct Blueprint {
  std::string base;
  int n_min;
  int n_max;
  std::string description;
};

const std::vector<Blueprint>& blueprints() {
  static const std::vector<Blueprint> b = {
      {"monomials", 2, 5, "monomials 1..x^(n-1) on [0,1], both sets equal"},
      {"mixed-polys", 2, 6,
       "non-orthogonal banded mixes of orthonormal Legendre waves on [-1,1]"},
      {"legendre-wave", 2, 6, "orthonormal Legendre waves on [-1,1]"},
      {"hermite-wave", 2, 6, "orthonormal Hermite waves on the real line"},
      {"hermite-mixed", 2, 5,
       "non-orthogonal banded mixes of Hermite waves on the real line"},
      {"laguerre-wave", 2, 3, "orthonormal Laguerre waves on the half line"},
  };
  return b;
}

Fixture make_family_fixture(const std::string& base, int n) {
  const std::string name = base + "-n" + std::to_string(n);
  if (base == "monomials") {
    const Interval dom = Interval::finite(0.0, 1.0);
    FunctionSet s(name, dom, monomials(n));
    return Fixture{name, "monomials on [0,1]", s, s};
  }
  if (base == "mixed-polys") {
    const Interval dom = Interval::finite(-1.0, 1.0);
    return Fixture{name, "banded Legendre-wave mixes",
                   FunctionSet(name, dom, mixed_phi(Family::legendre, n)),
                   FunctionSet(name, dom, mixed_psi(Family::legendre, n))};
  }
  if (base == "legendre-wave") {
    const Interval dom = Interval::finite(-1.0, 1.0);
    FunctionSet s(name, dom, waves(Family::legendre, n));
    return Fixture{name, "orthonormal Legendre waves", s, s};
  }
  if (base == "hermite-wave") {
    FunctionSet s(name, Interval::real_line(), waves(Family::hermite, n));
    return Fixture{name, "orthonormal Hermite waves", s, s};
  }
  if (base == "hermite-mixed") {
    const Interval dom = Interval::real_line();
    return Fixture{name, "banded Hermite-wave mixes",
                   FunctionSet(name, dom, mixed_phi(Family::hermite, n)),
                   FunctionSet(name, dom, mixed_psi(Family::hermite, n))};
  }
  if (base == "laguerre-wave") {
    FunctionSet s(name, Interval::half_line(), waves(Family::laguerre, n));
    return Fixture{name, "orthonormal Laguerre waves", s, s};
  }
  throw Error("unknown fixture family: " + base);
}

Fixture make_degenerate(const std::string& name) {
  const Interval dom = Interval::finite(-1.0, 1.0);
  if (name == "degenerate-rank1") {
    // psi_0 is orthogonal to both phi members: one overlap column vanishes,
    // rank n-1 = 1, and the unnormalized kernel factorizes.
    return Fixture{name,
                   "rank-1 overlap (n=2): detG*K factorizes into f(p)g(q)",
                   FunctionSet(name, dom, {Monomial{0}, Monomial{1}}),
                   FunctionSet(name, dom,
                               {WaveFunction{Family::legendre, 2}, Monomial{0}})};
  }
  if (name == "degenerate-rank0") {
    // both psi members are orthogonal to both phi members: rank 0 = n-2,
    // every cofactor vanishes, detG*K is identically zero.
    return Fixture{name, "rank-0 overlap (n=2): detG*K vanishes identically",
                   FunctionSet(name, dom, {Monomial{0}, Monomial{1}}),
                   FunctionSet(name, dom,
                               {WaveFunction{Family::legendre, 2},
                                WaveFunction{Family::legendre, 3}})};
  }
  if (name == "degenerate-rank1-n3") {
    // two psi members orthogonal to all phi members: rank 1 = n-2 at n=3;
    // all 2x2 cofactors vanish, detG*K is identically zero.
    return Fixture{name, "rank-1 overlap (n=3): detG*K vanishes identically",
                   FunctionSet(name, dom,
                               {Monomial{0}, Monomial{1}, Monomial{2}}),
                   FunctionSet(name, dom,
                               {WaveFunction{Family::legendre, 3},
                                WaveFunction{Family::legendre, 4}, Monomial{0}})};
  }
  throw Error("unknown fixture: " + name);
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& b : blueprints())
    for (int n = b.n_min; n <= b.n_max; ++n)
      names.push_back(b.base + "-n" + std::to_string(n));
  names.push_back("degenerate-rank1");
  names.push_back("degenerate-rank0");
  names.push_back("degenerate-rank1-n3");
  return names;
}

bool has_fixture(const std::string& name) {
  for (const auto& k : fixture_names())
    if (k == name) return true;
  return false;
}

Fixture get_fixture(const std::string& name) {
  if (name.rfind("degenerate", 0) == 0) return make_degenerate(name);
  for (const auto& b : blueprints()) {
    const std::string prefix = b.base + "-n";
    if (name.rfind(prefix, 0) == 0) {
      const std::string tail = name.substr(prefix.size());
      int n = 0;
      try {
        n = std::stoi(tail);
      } catch (const std::exception&) {
        break;
      }
      if (std::to_string(n) != tail || n < b.n_min || n > b.n_max)
        throw Error("fixture " + b.base + " supports n in [" +
                    std::to_string(b.n_min) + ", " + std::to_string(b.n_max) +
                    "], got " + tail);
      return make_family_fixture(b.base, n);
    }
  }
  std::ostringstream os;
  os << "unknown fixture: " << name << "; valid names:";
  for (const auto& k : fixture_names()) os << " " << k;
  throw Error(os.str());
}

}  // namespace detkern
