#pragma once

#include "critpath/project_io.hpp"

#include <cstdint>

namespace critpath {

struct RandomProjectParams {
  int min_nodes = 5;
  int max_nodes = 12;
  int min_arcs = 6;
  int max_arcs = 25;
  int min_duration = 1;
  int max_duration = 100;
};

// Seeded random activity-on-arc DAG. Nodes are labeled D1..Dn in topological
// position, every node lies on some path (a random spine guarantees it), and
// arc durations are uniform integers. Deterministic for a fixed seed.
ParsedProject random_project(const RandomProjectParams& params, std::uint64_t seed);

}  // namespace critpath
