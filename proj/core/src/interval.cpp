#include "detkern/interval.hpp"

#include <sstream>

namespace detkern {

std::string Interval::to_string() const {
  if (is_real_line()) return "(-inf, inf)";
  if (is_half_line()) return "[0, inf)";
  std::ostringstream os;
  os << "[" << a << ", " << b << "]";
  return os.str();
}

}  // namespace detkern
