#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "detkern/errors.hpp"

namespace detkern {

// Integration domain: a finite interval [a,b], the half-line [0,inf),
// or the real line. Unbounded endpoints are IEEE infinities.
struct Interval {
  double a = -1.0;
  double b = 1.0;

  static Interval finite(double a, double b) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
      throw DomainError("finite interval requires finite a < b");
    return Interval{a, b};
  }
  static Interval real_line() {
    return Interval{-std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity()};
  }
  static Interval half_line() {
    return Interval{0.0, std::numeric_limits<double>::infinity()};
  }

  bool is_finite() const { return std::isfinite(a) && std::isfinite(b); }
  bool is_real_line() const { return std::isinf(a) && std::isinf(b); }
  bool is_half_line() const { return a == 0.0 && std::isinf(b); }

  bool contains(double x) const { return x >= a && x <= b; }

  bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Interval& o) const { return !(*this == o); }

  std::string to_string() const;

  // Representative finite box used when picking "free" evaluation points
  // on unbounded domains (bulk of the Gaussian / exponential weight).
  Interval core_box() const {
    if (is_finite()) return *this;
    if (is_real_line()) return Interval{-2.5, 2.5};
    return Interval{0.0, 7.0};
  }
};

}  // namespace detkern
