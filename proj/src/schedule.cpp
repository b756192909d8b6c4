#include "critpath/schedule.hpp"

#include <algorithm>
#include <stdexcept>

namespace critpath {

namespace {

std::string terminal_summary(const ProjectNetwork& net) {
  auto describe = [&net](const std::vector<int>& nodes) {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i > 0) out += ", ";
      out += net.label(nodes[i]);
    }
    return out;
  };
  return "sources: " + describe(net.source_nodes()) +
         "; sinks: " + describe(net.sink_nodes());
}

void require_normalized(const ProjectNetwork& net, const char* op) {
  if (!net.is_normalized()) {
    throw std::invalid_argument(std::string(op) +
                                " requires a terminal-normalized network (" +
                                terminal_summary(net) + ")");
  }
}

}  // namespace

std::string_view engine_name(Engine engine) {
  switch (engine) {
    case Engine::exact:
      return "exact";
    case Engine::ga:
      return "ga";
    case Engine::brute_force:
      return "brute-force";
  }
  return "unknown";
}

std::vector<Time> forward_pass(const ProjectNetwork& network) {
  require_normalized(network, "forward_pass");
  std::vector<Time> earliest(network.node_count(), Time(0));
  for (int v : network.topological_order()) {
    Time best(0);
    for (int p : network.predecessors(v)) {
      Time candidate = earliest[p] + *network.arc(p, v);
      if (candidate > best) best = candidate;
    }
    earliest[v] = best;
  }
  return earliest;
}

std::vector<Time> backward_pass(const ProjectNetwork& network, const Time& horizon) {
  require_normalized(network, "backward_pass");
  std::vector<Time> latest(network.node_count(), horizon);
  auto order = network.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (network.successors(v).empty()) {
      latest[v] = horizon;
      continue;
    }
    bool first = true;
    Time best(0);
    for (int s : network.successors(v)) {
      Time candidate = latest[s] - *network.arc(v, s);
      if (first || candidate < best) {
        best = candidate;
        first = false;
      }
    }
    latest[v] = best;
  }
  return latest;
}

namespace {

// Shared by the exact, brute-force and GA paths: strips virtual terminals
// from the node sequence and virtual arcs from the activity labels.
ScheduleResult make_result(const ProjectNetwork& net, const std::vector<int>& path,
                           Engine engine, std::vector<NodeSchedule> schedules,
                           Time duration) {
  ScheduleResult result;
  result.engine = engine;
  result.schedules = std::move(schedules);
  result.project_duration = duration;
  for (int v : path) {
    if (!net.is_virtual_node(v)) {
      result.critical_path.push_back(net.label(v));
    }
  }
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!net.is_virtual_arc(path[k], path[k + 1])) {
      result.critical_activities.push_back(net.arc_name(path[k], path[k + 1]));
    }
  }
  return result;
}

}  // namespace

ScheduleResult critical_path_exact(const ProjectNetwork& network) {
  if (!network.is_normalized()) {
    return critical_path_exact(normalize_terminals(network));
  }
  std::vector<Time> earliest = forward_pass(network);
  const Time horizon = earliest[network.sink()];
  std::vector<Time> latest = backward_pass(network, horizon);

  // Walk critical arcs from the source, smallest successor first, which
  // yields the lexicographically smallest maximum path.
  std::vector<int> path{network.source()};
  int cur = network.source();
  while (cur != network.sink()) {
    int next = -1;
    for (int s : network.successors(cur)) {
      if (earliest[cur] + *network.arc(cur, s) == latest[s]) {
        next = s;
        break;
      }
    }
    if (next < 0) {
      throw std::logic_error("critical path reconstruction stalled at " +
                             network.label(cur));
    }
    path.push_back(next);
    cur = next;
  }

  std::vector<NodeSchedule> schedules;
  schedules.reserve(network.node_count());
  for (int i = 0; i < network.node_count(); ++i) {
    schedules.push_back(
        {network.label(i), earliest[i], latest[i], latest[i] - earliest[i]});
  }
  return make_result(network, path, Engine::exact, std::move(schedules), horizon);
}

EnumerationOverflow::EnumerationOverflow(std::size_t bound)
    : std::runtime_error("path enumeration exceeded the configured bound of " +
                         std::to_string(bound) + " paths"),
      bound_(bound) {}

namespace {

std::vector<std::vector<int>> enumerate_index_paths(const ProjectNetwork& net,
                                                    std::size_t max_paths) {
  std::vector<std::vector<int>> paths;
  std::vector<int> path{net.source()};
  // (node, index of the next successor to try)
  std::vector<std::pair<int, std::size_t>> stack{{net.source(), 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (node == net.sink()) {
      if (paths.size() == max_paths) throw EnumerationOverflow(max_paths);
      paths.push_back(path);
      stack.pop_back();
      path.pop_back();
      continue;
    }
    const auto& succ = net.successors(node);
    if (next >= succ.size()) {
      stack.pop_back();
      path.pop_back();
      continue;
    }
    int child = succ[next++];
    path.push_back(child);
    stack.emplace_back(child, 0);
  }
  return paths;
}

Time path_total(const ProjectNetwork& net, const std::vector<int>& path) {
  Time total(0);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    total += *net.arc(path[k], path[k + 1]);
  }
  return total;
}

}  // namespace

std::vector<PathRecord> enumerate_paths(const ProjectNetwork& network,
                                        std::size_t max_paths) {
  std::vector<PathRecord> records;
  for (const auto& path : enumerate_index_paths(network, max_paths)) {
    PathRecord record;
    record.nodes.reserve(path.size());
    for (int v : path) record.nodes.push_back(network.label(v));
    record.total = path_total(network, path);
    records.push_back(std::move(record));
  }
  return records;
}

ScheduleResult critical_path_brute_force(const ProjectNetwork& network,
                                         std::size_t max_paths) {
  auto paths = enumerate_index_paths(network, max_paths);
  if (paths.empty()) {
    throw std::invalid_argument("no source-to-sink path to maximize over");
  }
  // Paths arrive in lexicographic order, so the first strict maximum is also
  // the tie-rule winner.
  std::size_t best = 0;
  Time best_total = path_total(network, paths[0]);
  for (std::size_t k = 1; k < paths.size(); ++k) {
    Time total = path_total(network, paths[k]);
    if (total > best_total) {
      best = k;
      best_total = total;
    }
  }
  return make_result(network, paths[best], Engine::brute_force, {}, best_total);
}

}  // namespace critpath
