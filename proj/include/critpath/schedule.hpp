#pragma once

#include "critpath/network.hpp"

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace critpath {

struct NodeSchedule {
  std::string node;
  Time earliest;  // E_i
  Time latest;    // L_i
  Time slack;     // L_i - E_i; zero on critical nodes
};

enum class Engine { exact, ga, brute_force };

std::string_view engine_name(Engine engine);

struct ScheduleResult {
  Engine engine = Engine::exact;
  // Per-node schedules; filled by the exact engine, empty for ga and
  // brute-force results.
  std::vector<NodeSchedule> schedules;
  // Longest source-to-sink path, virtual terminals stripped.
  std::vector<std::string> critical_path;
  // Labels of the arcs along the path, virtual arcs excluded.
  std::vector<std::string> critical_activities;
  Time project_duration;
};

// Earliest event times, E_source = 0, in topological order. Requires a
// terminal-normalized network; throws std::invalid_argument otherwise.
std::vector<Time> forward_pass(const ProjectNetwork& network);

// Latest event times against the given horizon (normally E_sink), in reverse
// topological order. Same precondition as forward_pass.
std::vector<Time> backward_pass(const ProjectNetwork& network, const Time& horizon);

// Longest source-to-sink path via the forward/backward dynamic program with
// predecessor tracking. Equal-duration ties resolve to the lexicographically
// smallest node sequence. Unnormalized networks are normalized internally.
ScheduleResult critical_path_exact(const ProjectNetwork& network);

struct PathRecord {
  std::vector<std::string> nodes;
  Time total;
};

inline constexpr std::size_t kDefaultMaxPaths = 1'000'000;

class EnumerationOverflow : public std::runtime_error {
 public:
  explicit EnumerationOverflow(std::size_t bound);
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

// Exhaustive depth-first enumeration of all source-to-sink paths in
// lexicographic node order. A test instrument, not the production engine:
// throws EnumerationOverflow when more than max_paths paths exist.
std::vector<PathRecord> enumerate_paths(const ProjectNetwork& network,
                                        std::size_t max_paths = kDefaultMaxPaths);

// Brute-force oracle: argmax over enumerate_paths with the same tie rule as
// critical_path_exact.
ScheduleResult critical_path_brute_force(const ProjectNetwork& network,
                                         std::size_t max_paths = kDefaultMaxPaths);

}  // namespace critpath
