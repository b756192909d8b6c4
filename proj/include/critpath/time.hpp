#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace critpath {

// Durations are exact rationals. Three-point estimates produce sixths that
// must survive sums and serialization unchanged; rounding happens only at
// display time.
using Time = boost::rational<long long>;

// Accepts "12", "2.5", "37/6" (optionally signed). Throws
// std::invalid_argument on malformed or oversized literals.
Time parse_time(std::string_view text);

// Canonical exact rendering: integer, finite decimal, or "p/q".
// parse_time(format_time_exact(t)) == t for every t.
std::string format_time_exact(const Time& t);

// Display rendering: rounded to two decimals (half away from zero),
// trailing zeros trimmed. "51", "6.17", "2.5".
std::string format_time(const Time& t);

double to_double(const Time& t);

}  // namespace critpath
