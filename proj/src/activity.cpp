#include "critpath/activity.hpp"

#include <stdexcept>

namespace critpath {

std::string_view mode_name(Mode mode) {
  return mode == Mode::cpm ? "cpm" : "pert";
}

Time expected_duration(const Time& a, const Time& m, const Time& b) {
  if (a < Time(0) || a > m || m > b) {
    throw std::invalid_argument(
        "three-point estimate out of order: requires 0 <= a <= m <= b, got a=" +
        format_time_exact(a) + " m=" + format_time_exact(m) + " b=" +
        format_time_exact(b));
  }
  return (a + 4 * m + b) / 6;
}

Time DurationSpec::effective() const {
  if (is_fixed()) {
    return fixed_value();
  }
  const ThreePoint& t = triple();
  return expected_duration(t.optimistic, t.most_likely, t.pessimistic);
}

}  // namespace critpath
