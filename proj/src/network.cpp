#include "critpath/network.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace critpath {

namespace {

std::string arrow(const std::string& from, const std::string& to) {
  return from + " -> " + to;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i0 = i;
      std::size_t j0 = j;
      while (i < a.size() && digit(a[i])) ++i;
      while (j < b.size() && digit(b[j])) ++j;
      std::string_view da = a.substr(i0, i - i0);
      std::string_view db = b.substr(j0, j - j0);
      std::string_view ta = da.substr(std::min(da.find_first_not_of('0'), da.size() - 1));
      std::string_view tb = db.substr(std::min(db.find_first_not_of('0'), db.size() - 1));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      if (da != db) return da < db;  // equal value, distinct spelling: "01" < "1"
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

int ProjectNetwork::index_of(std::string_view label) const {
  for (int i = 0; i < node_count(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw std::out_of_range("unknown node id: " + std::string(label));
}

std::optional<Time> ProjectNetwork::arc(int from, int to) const {
  if (from < 0 || to < 0 || from >= node_count() || to >= node_count()) {
    throw std::out_of_range("node index out of range");
  }
  return matrix_[static_cast<std::size_t>(from) * node_count() + to];
}

std::optional<Time> ProjectNetwork::arc(std::string_view from, std::string_view to) const {
  return arc(index_of(from), index_of(to));
}

const std::string& ProjectNetwork::arc_name(int from, int to) const {
  int idx = arc_activity_.at(static_cast<std::size_t>(from) * node_count() + to);
  if (idx < 0) {
    throw std::out_of_range("no arc " + arrow(label(from), label(to)));
  }
  return activities_[idx].name;
}

std::vector<int> ProjectNetwork::source_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i) {
    if (pred_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<int> ProjectNetwork::sink_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i) {
    if (succ_[i].empty()) out.push_back(i);
  }
  return out;
}

bool ProjectNetwork::is_normalized() const {
  return source_nodes().size() == 1 && sink_nodes().size() == 1;
}

bool ProjectNetwork::is_virtual_arc(int from, int to) const {
  return virtual_node_.at(from) || virtual_node_.at(to);
}

std::vector<int> ProjectNetwork::topological_order() const {
  const int n = node_count();
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i) {
    indegree[i] = static_cast<int>(pred_[i].size());
  }
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (!placed[i] && indegree[i] == 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) {
      throw std::logic_error("topological_order on a cyclic network");
    }
    placed[pick] = true;
    order.push_back(pick);
    for (int j : succ_[pick]) {
      --indegree[j];
    }
  }
  return order;
}

class NetworkBuilder {
 public:
  static BuildResult build(const std::vector<Activity>& activities,
                           const std::set<std::string>& virtual_labels);
};

BuildResult NetworkBuilder::build(const std::vector<Activity>& activities,
                                  const std::set<std::string>& virtual_labels) {
  BuildResult result;
  ValidationReport& report = result.report;

  if (activities.empty()) {
    report.errors.push_back("empty activity list");
    return result;
  }

  // Per-activity checks; effective durations collapse three-point estimates.
  std::vector<Time> effective(activities.size(), Time(0));
  for (std::size_t k = 0; k < activities.size(); ++k) {
    const Activity& act = activities[k];
    std::string where = "activity " + std::to_string(k + 1) +
                        (act.name.empty() ? "" : " (" + act.name + ")");
    if (act.name.empty()) {
      report.errors.push_back(where + ": empty name");
    }
    if (act.from == act.to) {
      report.errors.push_back(where + ": self-loop " + arrow(act.from, act.to));
      continue;
    }
    if (act.duration.is_fixed()) {
      if (act.duration.fixed_value() < Time(0)) {
        report.errors.push_back(where + ": negative duration " +
                                format_time_exact(act.duration.fixed_value()));
        continue;
      }
      effective[k] = act.duration.fixed_value();
    } else {
      const ThreePoint& t = act.duration.triple();
      if (t.optimistic < Time(0) || t.optimistic > t.most_likely ||
          t.most_likely > t.pessimistic) {
        report.errors.push_back(
            where + ": three-point estimate out of order (0 <= a <= m <= b): a=" +
            format_time_exact(t.optimistic) + " m=" + format_time_exact(t.most_likely) +
            " b=" + format_time_exact(t.pessimistic));
        continue;
      }
      effective[k] = expected_duration(t.optimistic, t.most_likely, t.pessimistic);
    }
  }

  ProjectNetwork net;
  std::set<std::string, bool (*)(std::string_view, std::string_view)> labels(natural_less);
  for (const Activity& act : activities) {
    labels.insert(act.from);
    labels.insert(act.to);
  }
  net.labels_.assign(labels.begin(), labels.end());
  const int n = net.node_count();
  std::map<std::string, int, bool (*)(std::string_view, std::string_view)> index(natural_less);
  for (int i = 0; i < n; ++i) {
    index[net.labels_[i]] = i;
  }

  net.matrix_.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  net.arc_activity_.assign(static_cast<std::size_t>(n) * n, -1);
  net.succ_.assign(n, {});
  net.pred_.assign(n, {});
  net.virtual_node_.assign(n, false);
  for (int i = 0; i < n; ++i) {
    net.virtual_node_[i] = virtual_labels.count(net.labels_[i]) > 0;
  }

  for (std::size_t k = 0; k < activities.size(); ++k) {
    const Activity& act = activities[k];
    if (act.from == act.to) continue;  // already reported
    int i = index[act.from];
    int j = index[act.to];
    std::size_t cell = static_cast<std::size_t>(i) * n + j;
    if (net.arc_activity_[cell] >= 0) {
      report.errors.push_back("duplicate arc " + arrow(act.from, act.to) + " (activities " +
                              activities[net.arc_activity_[cell]].name + " and " +
                              act.name + ")");
      continue;
    }
    net.matrix_[cell] = effective[k];
    net.arc_activity_[cell] = static_cast<int>(k);
    net.succ_[i].push_back(j);
    net.pred_[j].push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    std::sort(net.succ_[i].begin(), net.succ_[i].end());
    std::sort(net.pred_[i].begin(), net.pred_[i].end());
  }

  // Cycle detection via Kahn's algorithm.
  {
    std::vector<int> indegree(n);
    for (int i = 0; i < n; ++i) indegree[i] = static_cast<int>(net.pred_[i].size());
    std::vector<int> queue;
    for (int i = 0; i < n; ++i) {
      if (indegree[i] == 0) queue.push_back(i);
    }
    int processed = 0;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++processed;
      for (int j : net.succ_[v]) {
        if (--indegree[j] == 0) queue.push_back(j);
      }
    }
    if (processed < n) {
      // Every leftover node keeps a leftover predecessor, so walking
      // predecessors must close a cycle.
      int start = 0;
      while (indegree[start] == 0) ++start;
      std::vector<int> walk{start};
      std::vector<int> position(n, -1);
      position[start] = 0;
      int repeat_at = -1;
      int cur = start;
      while (repeat_at < 0) {
        int prev = -1;
        for (int p : net.pred_[cur]) {
          if (indegree[p] > 0) {
            prev = p;
            break;
          }
        }
        if (position[prev] >= 0) {
          repeat_at = position[prev];
          walk.push_back(prev);
          break;
        }
        position[prev] = static_cast<int>(walk.size());
        walk.push_back(prev);
        cur = prev;
      }
      std::vector<int> cycle(walk.begin() + repeat_at, walk.end());
      std::reverse(cycle.begin(), cycle.end());
      std::string text = "cycle detected: ";
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (k > 0) text += " -> ";
        text += net.labels_[cycle[k]];
      }
      report.errors.push_back(text);
    }
  }

  if (!report.ok()) {
    return result;
  }

  auto sources = net.source_nodes();
  auto sinks = net.sink_nodes();
  net.source_ = sources.front();
  net.sink_ = sinks.front();

  // Reachability warnings relative to the canonical terminals.
  {
    std::vector<bool> reach(n, false);
    std::vector<int> stack{net.source_};
    reach[net.source_] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j : net.succ_[v]) {
        if (!reach[j]) {
          reach[j] = true;
          stack.push_back(j);
        }
      }
    }
    std::vector<bool> coreach(n, false);
    stack.assign(1, net.sink_);
    coreach[net.sink_] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j : net.pred_[v]) {
        if (!coreach[j]) {
          coreach[j] = true;
          stack.push_back(j);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!reach[i]) {
        report.warnings.push_back("node " + net.labels_[i] + " unreachable from source " +
                                  net.labels_[net.source_]);
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!coreach[i]) {
        report.warnings.push_back("node " + net.labels_[i] + " cannot reach sink " +
                                  net.labels_[net.sink_]);
      }
    }
  }

  net.activities_ = activities;
  result.network = std::move(net);
  return result;
}

BuildResult build_network(const std::vector<Activity>& activities) {
  return NetworkBuilder::build(activities, {});
}

namespace {

std::string fresh_label(const std::vector<std::string>& taken, const std::string& base) {
  auto used = [&taken](const std::string& candidate) {
    return std::find(taken.begin(), taken.end(), candidate) != taken.end();
  };
  if (!used(base)) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!used(candidate)) return candidate;
  }
}

}  // namespace

ProjectNetwork normalize_terminals(const ProjectNetwork& network) {
  if (network.is_normalized()) {
    return network;
  }

  std::set<std::string> virtual_labels;
  for (int i = 0; i < network.node_count(); ++i) {
    if (network.is_virtual_node(i)) virtual_labels.insert(network.label(i));
  }

  std::vector<Activity> start_arcs;
  std::vector<Activity> finish_arcs;
  auto sources = network.source_nodes();
  auto sinks = network.sink_nodes();
  if (sources.size() > 1) {
    std::string label = fresh_label(network.node_labels(), "START");
    virtual_labels.insert(label);
    for (int s : sources) {
      start_arcs.push_back(
          {label, label, network.label(s), DurationSpec::fixed(Time(0))});
    }
  }
  if (sinks.size() > 1) {
    std::string label = fresh_label(network.node_labels(), "FINISH");
    virtual_labels.insert(label);
    for (int t : sinks) {
      finish_arcs.push_back(
          {label, network.label(t), label, DurationSpec::fixed(Time(0))});
    }
  }

  std::vector<Activity> activities = start_arcs;
  activities.insert(activities.end(), network.activities().begin(),
                    network.activities().end());
  activities.insert(activities.end(), finish_arcs.begin(), finish_arcs.end());

  BuildResult rebuilt = NetworkBuilder::build(activities, virtual_labels);
  if (!rebuilt.ok()) {
    throw std::logic_error("normalize_terminals rebuilt an invalid network: " +
                           rebuilt.report.errors.front());
  }
  return std::move(*rebuilt.network);
}

}  // namespace critpath
