#pragma once

#include "critpath/time.hpp"

#include <string>
#include <variant>

namespace critpath {

enum class Mode { cpm, pert };

std::string_view mode_name(Mode mode);

// Optimistic / most likely / pessimistic estimate.
struct ThreePoint {
  Time optimistic;
  Time most_likely;
  Time pessimistic;

  bool operator==(const ThreePoint&) const = default;
};

// Mean duration of a three-point estimate: (a + 4m + b) / 6.
// Requires 0 <= a <= m <= b; throws std::invalid_argument otherwise.
Time expected_duration(const Time& a, const Time& m, const Time& b);

// A fixed duration (CPM) or a three-point estimate (PERT).
class DurationSpec {
 public:
  DurationSpec() : value_(Time(0)) {}
  static DurationSpec fixed(Time value) { return DurationSpec(std::move(value)); }
  static DurationSpec estimate(Time a, Time m, Time b) {
    return DurationSpec(ThreePoint{std::move(a), std::move(m), std::move(b)});
  }

  bool is_fixed() const { return std::holds_alternative<Time>(value_); }
  const Time& fixed_value() const { return std::get<Time>(value_); }
  const ThreePoint& triple() const { return std::get<ThreePoint>(value_); }

  // Fixed values pass through; estimates collapse via expected_duration.
  Time effective() const;

  bool operator==(const DurationSpec&) const = default;

 private:
  explicit DurationSpec(Time value) : value_(std::move(value)) {}
  explicit DurationSpec(ThreePoint triple) : value_(std::move(triple)) {}

  std::variant<Time, ThreePoint> value_;
};

// A named arc of an activity-on-arc network. Names are labels only and may
// repeat across arcs; arcs are keyed by (from, to).
struct Activity {
  std::string name;
  std::string from;
  std::string to;
  DurationSpec duration;

  bool operator==(const Activity&) const = default;
};

}  // namespace critpath
