#pragma once

#include "critpath/network.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

inline critpath::Activity act(std::string name, std::string from, std::string to,
                              long long duration) {
  return {std::move(name), std::move(from), std::move(to),
          critpath::DurationSpec::fixed(critpath::Time(duration))};
}

inline critpath::Activity pact(std::string name, std::string from, std::string to,
                               long long a, long long m, long long b) {
  return {std::move(name), std::move(from), std::move(to),
          critpath::DurationSpec::estimate(critpath::Time(a), critpath::Time(m),
                                           critpath::Time(b))};
}

// The 11-node demo project: two natural sources (D1, D10), sink D11, longest
// path D1-D3-D4-D6-D8-D11 with duration 51.
inline std::vector<critpath::Activity> demo_activities() {
  return {
      act("A", "D1", "D2", 3),  act("B", "D1", "D4", 4),   act("C", "D1", "D3", 5),
      act("D", "D2", "D5", 6),  act("E", "D4", "D5", 7),   act("F", "D3", "D4", 8),
      act("G", "D3", "D7", 9),  act("H", "D4", "D6", 10),  act("I", "D5", "D11", 11),
      act("i", "D6", "D9", 12), act("J", "D6", "D8", 13),  act("K", "D7", "D11", 14),
      act("L", "D8", "D11", 15), act("M", "D9", "D11", 15), act("N", "D10", "D11", 17),
  };
}

inline critpath::ProjectNetwork demo_network() {
  auto built = critpath::build_network(demo_activities());
  if (!built.ok()) throw std::logic_error("demo fixture failed to build");
  return *built.network;
}

inline critpath::ProjectNetwork demo_network_normalized() {
  return critpath::normalize_terminals(demo_network());
}

inline critpath::ProjectNetwork tiny_network(const std::vector<critpath::Activity>& acts) {
  auto built = critpath::build_network(acts);
  if (!built.ok()) {
    throw std::logic_error("fixture failed to build: " + built.report.errors.front());
  }
  return *built.network;
}

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep = "-") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace testutil
