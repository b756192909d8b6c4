#pragma once

#include "critpath/network.hpp"
#include "critpath/schedule.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace critpath {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedProject {
  Mode mode = Mode::cpm;
  std::vector<Activity> activities;

  bool operator==(const ParsedProject&) const = default;
};

// Project file grammar (v1):
//   critpath v1 <cpm|pert>
//   name from to duration          # cpm arcs, and pert dummy arcs
//   name from to a m b             # pert three-point estimates
// '#' starts a comment, blank lines are ignored, durations are nonnegative
// decimals or rationals "p/q". Throws ParseError with the offending line.
ParsedProject parse_project(const std::string& text);

// Reads and parses a project file; throws std::runtime_error when the file
// cannot be read.
ParsedProject load_project(const std::string& path);

// Inverse of parse_project: parse_project(emit_project(p)) == p.
std::string emit_project(const ParsedProject& project);

// The network's arcs as a cpm document of effective durations; re-parsing
// and rebuilding reproduces an identical duration matrix.
std::string network_document(const ProjectNetwork& network);

// Fixed-width activity table: critical arcs starred, project duration footer,
// critical path and activity lines. Durations display to two decimals.
std::string emit_table(const ProjectNetwork& network, const ScheduleResult& result);

// Graphviz digraph: arcs labeled "name:duration", critical-path arcs dashed
// and bold, virtual terminals dotted. Byte-deterministic. Throws
// std::invalid_argument when the result does not belong to the network.
std::string emit_dot(const ProjectNetwork& network, const ScheduleResult& result);

}  // namespace critpath
