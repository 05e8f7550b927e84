#include "detkern/basis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace detkern {

namespace {

void check_degree(int degree) {
  if (degree < 0) throw Error("polynomial degree must be >= 0");
  if (degree > kMaxDegree)
    throw Error("polynomial degree " + std::to_string(degree) +
                " exceeds the accuracy cap of " + std::to_string(kMaxDegree));
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::legendre: return "legendre";
    case Family::hermite: return "hermite";
    case Family::laguerre: return "laguerre";
  }
  throw Error("unknown family");
}

Family family_from_string(const std::string& s) {
  if (s == "legendre") return Family::legendre;
  if (s == "hermite") return Family::hermite;
  if (s == "laguerre") return Family::laguerre;
  throw Error("unsupported family name: " + s);
}

Interval natural_domain(Family f) {
  switch (f) {
    case Family::legendre: return Interval::finite(-1.0, 1.0);
    case Family::hermite: return Interval::real_line();
    case Family::laguerre: return Interval::half_line();
  }
  throw Error("unknown family");
}

double weight(Family f, double x) {
  switch (f) {
    case Family::legendre: return 1.0;
    case Family::hermite: return std::exp(-x * x);
    case Family::laguerre: return std::exp(-x);
  }
  throw Error("unknown family");
}

double sqrt_weight(Family f, double x) {
  switch (f) {
    case Family::legendre: return 1.0;
    case Family::hermite: return std::exp(-0.5 * x * x);
    case Family::laguerre: return std::exp(-0.5 * x);
  }
  throw Error("unknown family");
}

double weight_mass(Family f) {
  switch (f) {
    case Family::legendre: return 2.0;
    case Family::hermite: return std::sqrt(std::numbers::pi);
    case Family::laguerre: return 1.0;
  }
  throw Error("unknown family");
}

double recurrence_alpha(Family f, int k) {
  if (k < 0) throw Error("recurrence index must be >= 0");
  switch (f) {
    case Family::legendre: return 0.0;
    case Family::hermite: return 0.0;
    case Family::laguerre: return 2.0 * k + 1.0;
  }
  throw Error("unknown family");
}

double recurrence_beta(Family f, int k) {
  if (k < 1) throw Error("recurrence beta index must be >= 1");
  const double kd = k;
  switch (f) {
    case Family::legendre: return kd * kd / (4.0 * kd * kd - 1.0);
    case Family::hermite: return 0.5 * kd;
    case Family::laguerre: return kd * kd;
  }
  throw Error("unknown family");
}

double monic_eval(Family f, int degree, double x) {
  check_degree(degree);
  if (degree == 0) return 1.0;
  double pm1 = 1.0;
  double p = x - recurrence_alpha(f, 0);
  for (int k = 1; k < degree; ++k) {
    const double next =
        (x - recurrence_alpha(f, k)) * p - recurrence_beta(f, k) * pm1;
    pm1 = p;
    p = next;
  }
  return p;
}

double monic_eval_derivative(Family f, int degree, double x) {
  check_degree(degree);
  if (degree == 0) return 0.0;
  double pm1 = 1.0, dm1 = 0.0;
  double p = x - recurrence_alpha(f, 0), d = 1.0;
  for (int k = 1; k < degree; ++k) {
    const double a = recurrence_alpha(f, k);
    const double b = recurrence_beta(f, k);
    const double pn = (x - a) * p - b * pm1;
    const double dn = p + (x - a) * d - b * dm1;
    pm1 = p;
    dm1 = d;
    p = pn;
    d = dn;
  }
  return d;
}

double monic_norm(Family f, int degree) {
  check_degree(degree);
  double h = weight_mass(f);
  for (int k = 1; k <= degree; ++k) h *= recurrence_beta(f, k);
  return h;
}

std::vector<double> monic_norms(Family f, int count) {
  if (count < 1) throw Error("monic_norms requires count >= 1");
  check_degree(count - 1);
  std::vector<double> h(static_cast<std::size_t>(count));
  h[0] = weight_mass(f);
  for (int k = 1; k < count; ++k) h[k] = h[k - 1] * recurrence_beta(f, k);
  return h;
}

double wave_eval(Family f, int k, double x) {
  const double h = monic_norm(f, k);
  if (!(h > 0.0)) throw Error("corrupted norm table: h_k <= 0");
  return monic_eval(f, k, x) * sqrt_weight(f, x) / std::sqrt(h);
}

// ---------------------------------------------------------------------------
// Members
// ---------------------------------------------------------------------------

namespace {

double eval_simple(const SimpleMember& m, double x) {
  return std::visit(
      [x](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Monomial>) {
          return std::pow(x, v.power);
        } else if constexpr (std::is_same_v<T, MonicPoly>) {
          return monic_eval(v.family, v.degree, x);
        } else {
          return wave_eval(v.family, v.index, x);
        }
      },
      m);
}

WeightClass simple_weight_class(const SimpleMember& m) {
  if (const auto* w = std::get_if<WaveFunction>(&m)) {
    switch (w->family) {
      case Family::hermite: return WeightClass::gaussian;
      case Family::laguerre: return WeightClass::exponential;
      case Family::legendre: return WeightClass::none;
    }
  }
  return WeightClass::none;
}

std::string describe_simple(const SimpleMember& m) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, Monomial>) {
          os << "x^" << v.power;
        } else if constexpr (std::is_same_v<T, MonicPoly>) {
          os << "monic(" << to_string(v.family) << "," << v.degree << ")";
        } else {
          os << "wave(" << to_string(v.family) << "," << v.index << ")";
        }
        return os.str();
      },
      m);
}

void validate_simple(const SimpleMember& m) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Monomial>) {
          if (v.power < 0 || v.power > kMaxDegree)
            throw Error("monomial power out of range");
        } else if constexpr (std::is_same_v<T, MonicPoly>) {
          check_degree(v.degree);
        } else {
          check_degree(v.index);
        }
      },
      m);
}

}  // namespace

std::string to_string(WeightClass c) {
  switch (c) {
    case WeightClass::none: return "none";
    case WeightClass::gaussian: return "gaussian";
    case WeightClass::exponential: return "exponential";
    case WeightClass::mixed: return "mixed";
  }
  throw Error("unknown weight class");
}

double eval_member(const Member& m, double x) {
  return std::visit(
      [x](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Composite>) {
          double sum = 0.0;
          for (const auto& t : v.terms) sum += t.coeff * eval_simple(t.part, x);
          return sum;
        } else {
          return eval_simple(SimpleMember{v}, x);
        }
      },
      m);
}

WeightClass member_weight_class(const Member& m) {
  return std::visit(
      [](const auto& v) -> WeightClass {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Composite>) {
          if (v.terms.empty()) return WeightClass::none;
          WeightClass first = simple_weight_class(v.terms.front().part);
          for (const auto& t : v.terms)
            if (simple_weight_class(t.part) != first) return WeightClass::mixed;
          return first;
        } else {
          return simple_weight_class(SimpleMember{v});
        }
      },
      m);
}

std::string describe(const Member& m) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Composite>) {
          std::ostringstream os;
          for (std::size_t i = 0; i < v.terms.size(); ++i) {
            if (i) os << " + ";
            os << v.terms[i].coeff << "*" << describe_simple(v.terms[i].part);
          }
          return os.str();
        } else {
          return describe_simple(SimpleMember{v});
        }
      },
      m);
}

// ---------------------------------------------------------------------------
// FunctionSet
// ---------------------------------------------------------------------------

FunctionSet::FunctionSet(std::string name, Interval domain,
                         std::vector<Member> members)
    : name_(std::move(name)),
      domain_(domain),
      members_(std::move(members)),
      weight_class_(WeightClass::none),
      independence_asserted_(true) {
  if (members_.empty()) throw Error("function set must not be empty");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const Member& m = members_[i];
    std::visit(
        [this](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Composite>) {
            if (v.terms.empty()) throw Error("composite member has no terms");
            for (const auto& t : v.terms) {
              if (!std::isfinite(t.coeff))
                throw Error("non-finite composite coeff");
              validate_simple(t.part);
            }
            independence_asserted_ = false;
          } else {
            validate_simple(SimpleMember{v});
          }
        },
        m);
    for (std::size_t j = 0; j < i; ++j)
      if (members_[j] == m)
        throw Error("duplicate member descriptor in function set: " +
                    describe(m));
  }
  weight_class_ = member_weight_class(members_.front());
  for (const auto& m : members_)
    if (member_weight_class(m) != weight_class_) {
      weight_class_ = WeightClass::mixed;
      break;
    }
}

double FunctionSet::eval(int j, double x) const {
  if (j < 0 || j >= size())
    throw std::out_of_range("function-set member index out of range");
  if (!domain_.contains(x))
    throw DomainError("evaluation point " + std::to_string(x) +
                      " outside domain " + domain_.to_string());
  return eval_member(members_[static_cast<std::size_t>(j)], x);
}

Eigen::MatrixXd eval_table(const FunctionSet& set,
                           const std::vector<double>& points) {
  Eigen::MatrixXd table(set.size(), static_cast<Eigen::Index>(points.size()));
  for (int j = 0; j < set.size(); ++j)
    for (std::size_t t = 0; t < points.size(); ++t)
      table(j, static_cast<Eigen::Index>(t)) = set.eval(j, points[t]);
  return table;
}

}  // namespace detkern
