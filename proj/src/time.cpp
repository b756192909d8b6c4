#include "critpath/time.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace critpath {

namespace {

long long parse_integer(std::string_view text, std::string_view what) {
  if (text.empty()) {
    throw std::invalid_argument("empty " + std::string(what) + " in duration literal");
  }
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed duration literal: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Time parse_time(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw std::invalid_argument("empty duration literal");
  }
  if (text.size() > 19) {
    throw std::invalid_argument("duration literal too long: '" + std::string(text) + "'");
  }

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long num = parse_integer(text.substr(0, slash), "numerator");
    long long den = parse_integer(text.substr(slash + 1), "denominator");
    if (den == 0) {
      throw std::invalid_argument("zero denominator in duration literal: '" +
                                  std::string(text) + "'");
    }
    return Time(num, den);
  }

  bool negative = false;
  std::string_view digits = text;
  if (digits.front() == '+' || digits.front() == '-') {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  auto dot = digits.find('.');
  std::string_view whole = dot == std::string_view::npos ? digits : digits.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : digits.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    throw std::invalid_argument("malformed duration literal: '" + std::string(text) + "'");
  }
  if (frac.size() > 9) {
    throw std::invalid_argument("too many decimal places in duration literal: '" +
                                std::string(text) + "'");
  }
  long long num = whole.empty() ? 0 : parse_integer(whole, "integer part");
  long long den = 1;
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed duration literal: '" + std::string(text) + "'");
    }
    num = num * 10 + (c - '0');
    den *= 10;
  }
  if (negative) {
    num = -num;
  }
  return Time(num, den);
}

std::string format_time_exact(const Time& t) {
  long long num = t.numerator();
  long long den = t.denominator();
  if (den == 1) {
    return std::to_string(num);
  }
  // Finite decimal iff the denominator is 2^a * 5^b.
  long long d = den;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) {
    return std::to_string(num) + "/" + std::to_string(den);
  }
  int places = twos > fives ? twos : fives;
  long long scale = 1;
  for (int i = 0; i < places; ++i) {
    scale *= 10;
  }
  long long scaled = num * (scale / den);
  bool negative = scaled < 0;
  unsigned long long magnitude =
      negative ? -static_cast<unsigned long long>(scaled) : scaled;
  std::string digits = std::to_string(magnitude);
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, ".");
  while (digits.back() == '0') {
    digits.pop_back();
  }
  if (digits.back() == '.') {
    digits.pop_back();
  }
  return negative ? "-" + digits : digits;
}

std::string format_time(const Time& t) {
  // Round to hundredths, half away from zero.
  long long num = t.numerator();
  long long den = t.denominator();
  bool negative = num < 0;
  if (negative) {
    num = -num;
  }
  long long hundredths = (200 * num + den) / (2 * den);
  long long whole = hundredths / 100;
  long long frac = hundredths % 100;
  std::string out = std::to_string(whole);
  if (frac != 0) {
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    if (frac % 10 != 0) {
      out += static_cast<char>('0' + frac % 10);
    }
  }
  return negative && hundredths != 0 ? "-" + out : out;
}

double to_double(const Time& t) { return boost::rational_cast<double>(t); }

}  // namespace critpath
