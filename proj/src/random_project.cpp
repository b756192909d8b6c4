#include "critpath/random_project.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace critpath {

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % n;
}

int uniform_range(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// A, B, ..., Z, AA, AB, ... in creation order.
std::string letter_name(int index) {
  std::string name;
  ++index;
  while (index > 0) {
    --index;
    name.insert(name.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return name;
}

}  // namespace

ParsedProject random_project(const RandomProjectParams& params, std::uint64_t seed) {
  if (params.min_nodes < 2 || params.max_nodes < params.min_nodes ||
      params.max_arcs < params.min_arcs || params.min_duration < 0 ||
      params.max_duration < params.min_duration) {
    throw std::invalid_argument("invalid random project parameters");
  }

  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0x9E3779B9u};
  std::mt19937_64 rng(seq);

  const int nodes = uniform_range(rng, params.min_nodes, params.max_nodes);
  const int max_pairs = nodes * (nodes - 1) / 2;
  const int lo = std::min(std::max(params.min_arcs, nodes - 1), max_pairs);
  const int hi = std::min(params.max_arcs, max_pairs);
  const int arcs = uniform_range(rng, std::min(lo, hi), hi);

  // Spine first: every node i > 1 hangs off a random predecessor, so each
  // node lies on some source-to-sink path after normalization.
  std::vector<std::pair<int, int>> chosen;
  std::vector<bool> taken(static_cast<std::size_t>(nodes) * nodes, false);
  for (int i = 2; i <= nodes && static_cast<int>(chosen.size()) < arcs; ++i) {
    int pred = uniform_range(rng, 1, i - 1);
    chosen.emplace_back(pred, i);
    taken[static_cast<std::size_t>(pred - 1) * nodes + (i - 1)] = true;
  }

  std::vector<std::pair<int, int>> extras;
  for (int i = 1; i <= nodes; ++i) {
    for (int j = i + 1; j <= nodes; ++j) {
      if (!taken[static_cast<std::size_t>(i - 1) * nodes + (j - 1)]) {
        extras.emplace_back(i, j);
      }
    }
  }
  // Fisher-Yates with the same bounded-draw helper keeps the shuffle
  // reproducible across standard libraries.
  for (std::size_t k = extras.size(); k > 1; --k) {
    std::swap(extras[k - 1], extras[uniform_below(rng, k)]);
  }
  for (std::size_t k = 0; k < extras.size() && static_cast<int>(chosen.size()) < arcs; ++k) {
    chosen.push_back(extras[k]);
  }

  std::sort(chosen.begin(), chosen.end());
  ParsedProject project;
  project.mode = Mode::cpm;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    Activity act;
    act.name = letter_name(static_cast<int>(k));
    act.from = "D" + std::to_string(chosen[k].first);
    act.to = "D" + std::to_string(chosen[k].second);
    act.duration = DurationSpec::fixed(
        Time(uniform_range(rng, params.min_duration, params.max_duration)));
    project.activities.push_back(std::move(act));
  }
  return project;
}

}  // namespace critpath
