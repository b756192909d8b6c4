#include "critpath/ga.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

namespace critpath {

namespace {

// Unbiased draw in [0, n). Rejection sampling on raw engine output keeps
// seeded sequences identical across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % n;
}

std::vector<int> walk_to_sink(const ProjectNetwork& net, int start, Rng& rng) {
  std::vector<int> nodes{start};
  int cur = start;
  while (cur != net.sink()) {
    const auto& succ = net.successors(cur);
    if (succ.empty()) {
      throw std::logic_error("random walk dead-ends at " + net.label(cur) +
                             ", which has no outgoing arcs and is not the sink " +
                             net.label(net.sink()));
    }
    cur = succ[uniform_below(rng, succ.size())];
    nodes.push_back(cur);
  }
  return nodes;
}

int elite_count(const GAConfig& config) {
  double raw = config.elitism_rate * config.population_size;
  double nearest = std::round(raw);
  if (std::abs(raw - nearest) < 1e-9) raw = nearest;  // absorb binary noise
  int count = static_cast<int>(std::ceil(raw));
  return std::max(1, std::min(count, config.population_size));
}

void validate_config(const GAConfig& config) {
  if (config.population_size < 2) {
    throw std::invalid_argument("population_size must be at least 2");
  }
  if (!(config.elitism_rate > 0.0) || config.elitism_rate > 1.0) {
    throw std::invalid_argument("elitism_rate must be in (0, 1]");
  }
  if (config.generations < 1) {
    throw std::invalid_argument("generations must be at least 1");
  }
  if (config.iterations < 1) {
    throw std::invalid_argument("iterations must be at least 1");
  }
}

bool better(const Chromosome& a, const Chromosome& b) {
  if (a.fitness != b.fitness) return a.fitness > b.fitness;
  return a.genes < b.genes;
}

const Chromosome& best_of(const std::vector<Chromosome>& population) {
  const Chromosome* best = &population.front();
  for (const Chromosome& c : population) {
    if (better(c, *best)) best = &c;
  }
  return *best;
}

Rng run_rng(std::uint64_t seed, int run) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(run)};
  return Rng(seq);
}

}  // namespace

Chromosome random_walk_path(const ProjectNetwork& network, Rng& rng) {
  Chromosome c;
  c.genes = walk_to_sink(network, network.source(), rng);
  c.fitness = fitness(network, c.genes);
  return c;
}

std::vector<Chromosome> init_population(const ProjectNetwork& network,
                                        const GAConfig& config, Rng& rng) {
  validate_config(config);
  // Prefer unseen paths while the budget lasts; duplicates fill the
  // remainder so path spaces smaller than the population never stall.
  long long attempts = 64LL * config.population_size;
  std::vector<Chromosome> population;
  population.reserve(config.population_size);
  std::set<std::vector<int>> seen;
  while (static_cast<int>(population.size()) < config.population_size) {
    Chromosome c = random_walk_path(network, rng);
    --attempts;
    if (seen.insert(c.genes).second || attempts <= 0) {
      population.push_back(std::move(c));
    }
  }
  return population;
}

Time fitness(const ProjectNetwork& network, const std::vector<int>& genes) {
  if (genes.size() < 2) {
    throw std::invalid_argument("invalid chromosome: fewer than two genes");
  }
  if (genes.front() != network.source()) {
    throw std::invalid_argument("invalid chromosome: must start at source " +
                                network.label(network.source()));
  }
  if (genes.back() != network.sink()) {
    throw std::invalid_argument("invalid chromosome: must end at sink " +
                                network.label(network.sink()));
  }
  Time total(0);
  for (std::size_t k = 0; k + 1 < genes.size(); ++k) {
    auto duration = network.arc(genes[k], genes[k + 1]);
    if (!duration) {
      throw std::invalid_argument("invalid chromosome: no arc " +
                                  network.label(genes[k]) + " -> " +
                                  network.label(genes[k + 1]));
    }
    total += *duration;
  }
  return total;
}

Chromosome crossover(const Chromosome& parent1, const Chromosome& parent2,
                     const ProjectNetwork& network, Rng& rng) {
  const std::size_t len = parent1.genes.size();
  const std::size_t cut = (len + 2) / 3;  // ceil(len / 3) genes kept
  std::vector<int> genes(parent1.genes.begin(), parent1.genes.begin() + cut);
  const int joint = genes.back();

  std::set<int> used(genes.begin(), genes.end());
  bool spliced = false;
  for (std::size_t k = 0; k < parent2.genes.size(); ++k) {
    if (!network.arc(joint, parent2.genes[k])) continue;
    bool clash = false;
    for (std::size_t j = k; j < parent2.genes.size(); ++j) {
      if (used.count(parent2.genes[j])) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    genes.insert(genes.end(), parent2.genes.begin() + k, parent2.genes.end());
    spliced = true;
    break;
  }
  if (!spliced) {
    // Repair: continue a random walk from the end of the prefix.
    std::vector<int> tail = walk_to_sink(network, joint, rng);
    genes.insert(genes.end(), tail.begin() + 1, tail.end());
  }

  Chromosome child;
  child.genes = std::move(genes);
  child.fitness = fitness(network, child.genes);
  return child;
}

std::vector<Chromosome> select_elites(const std::vector<Chromosome>& population,
                                      const GAConfig& config) {
  if (population.empty()) {
    throw std::invalid_argument("select_elites on an empty population");
  }
  std::vector<Chromosome> sorted = population;
  std::sort(sorted.begin(), sorted.end(), better);
  std::size_t keep = std::min<std::size_t>(elite_count(config), sorted.size());
  sorted.resize(keep);
  return sorted;
}

GAResult evolve(const ProjectNetwork& network, const GAConfig& config) {
  validate_config(config);
  if (!network.is_normalized()) {
    throw std::invalid_argument(
        "evolve requires a terminal-normalized network; call normalize_terminals");
  }

  GAResult result;
  result.seed_used = config.seed;
  result.generator = std::string(kGeneratorId);
  bool have_best = false;

  for (int run = 0; run < config.iterations; ++run) {
    Rng rng = run_rng(config.seed, run);
    std::vector<Chromosome> population = init_population(network, config, rng);
    std::vector<Time> history{best_of(population).fitness};

    for (int gen = 0; gen < config.generations; ++gen) {
      std::vector<Chromosome> next = select_elites(population, config);
      const std::size_t parents = next.size();
      while (next.size() < static_cast<std::size_t>(config.population_size)) {
        const Chromosome& p1 = next[uniform_below(rng, parents)];
        const Chromosome& p2 = next[uniform_below(rng, parents)];
        next.push_back(crossover(p1, p2, network, rng));
      }
      population = std::move(next);
      history.push_back(best_of(population).fitness);
    }

    const Chromosome& run_best = best_of(population);
    if (!have_best || better(run_best, result.best)) {
      result.best = run_best;
      result.history = std::move(history);
      have_best = true;
    }
  }
  return result;
}

ScheduleResult extract_result(const ProjectNetwork& network, const GAResult& ga) {
  // Recomputing the sum also validates the chromosome against this network.
  Time check = fitness(network, ga.best.genes);
  if (check != ga.best.fitness) {
    throw std::invalid_argument("GA result does not belong to this network");
  }

  ScheduleResult result;
  result.engine = Engine::ga;
  result.project_duration = ga.best.fitness;
  for (int v : ga.best.genes) {
    if (!network.is_virtual_node(v)) {
      result.critical_path.push_back(network.label(v));
    }
  }
  for (std::size_t k = 0; k + 1 < ga.best.genes.size(); ++k) {
    if (!network.is_virtual_arc(ga.best.genes[k], ga.best.genes[k + 1])) {
      result.critical_activities.push_back(
          network.arc_name(ga.best.genes[k], ga.best.genes[k + 1]));
    }
  }
  return result;
}

}  // namespace critpath
