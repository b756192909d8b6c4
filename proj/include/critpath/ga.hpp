#pragma once

#include "critpath/schedule.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace critpath {

using Rng = std::mt19937_64;

// Recorded in GAResult so seeded runs can be reproduced.
inline constexpr std::string_view kGeneratorId = "mt19937_64/seed_seq";

// A complete source-to-sink node path; each node is a gene.
struct Chromosome {
  std::vector<int> genes;  // node indices, genes.front() = source
  Time fitness;            // cached sum of arc durations along the path
};

struct GAConfig {
  int population_size = 32;
  double elitism_rate = 0.25;  // in (0, 1]
  int generations = 20;        // evolution steps per run
  int iterations = 2;          // independent restarts
  std::uint64_t seed = 1;
};

struct GAResult {
  Chromosome best;
  // Best fitness per generation of the winning run; entry 0 is the initial
  // population. Non-decreasing (elites always survive).
  std::vector<Time> history;
  std::uint64_t seed_used = 0;
  std::string generator;
  // Filled by the runner when the exact engine result is available.
  std::optional<bool> converged_to_exact;
};

// Uniform random walk over present arcs from the source until the sink.
// Throws std::logic_error if the walk dead-ends on a non-sink node (cannot
// happen on a terminal-normalized network).
Chromosome random_walk_path(const ProjectNetwork& network, Rng& rng);

// population_size random walks. Unseen paths are preferred while a
// deterministic attempt budget lasts; duplicates fill the remainder, so small
// path spaces never stall the loop.
std::vector<Chromosome> init_population(const ProjectNetwork& network,
                                        const GAConfig& config, Rng& rng);

// Sum of arc durations along genes. Throws std::invalid_argument when genes
// is not a source-to-sink path over present arcs.
Time fitness(const ProjectNetwork& network, const std::vector<int>& genes);

// Single-point crossover. Keeps the first ceil(len(parent1)/3) genes of
// parent1, then splices the first parent2 suffix that attaches through a
// present arc and reuses no node; when no suffix attaches, repairs by
// continuing a random walk to the sink. The offspring is always valid.
Chromosome crossover(const Chromosome& parent1, const Chromosome& parent2,
                     const ProjectNetwork& network, Rng& rng);

// Top ceil(elitism_rate * population_size) chromosomes by fitness,
// descending; ties break on the lexicographically smaller gene sequence.
std::vector<Chromosome> select_elites(const std::vector<Chromosome>& population,
                                      const GAConfig& config);

// `iterations` independent runs: init_population, then per generation keep
// the elites and refill with crossover offspring of uniformly chosen elite
// pairs. No mutation operator. Deterministic for a fixed (network, config).
// Requires a terminal-normalized network.
GAResult evolve(const ProjectNetwork& network, const GAConfig& config);

// Maps the best chromosome onto a ScheduleResult (engine = ga): virtual
// terminals are stripped from the path and virtual arcs from the activities.
ScheduleResult extract_result(const ProjectNetwork& network, const GAResult& ga);

}  // namespace critpath
