#pragma once

#include "critpath/activity.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critpath {

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

// Validated activity-on-arc DAG with an n x n duration matrix. A cell is
// either absent (no direct connection) or holds the effective duration of the
// arc; 0 is a legal duration reserved for dummy and virtual arcs. Immutable
// after construction and safe to share across threads.
class ProjectNetwork {
 public:
  int node_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& node_labels() const { return labels_; }
  const std::string& label(int node) const { return labels_.at(node); }
  // Throws std::out_of_range for unknown labels.
  int index_of(std::string_view label) const;

  // Duration of arc from->to; nullopt when not directly connected
  // (including the diagonal).
  std::optional<Time> arc(int from, int to) const;
  std::optional<Time> arc(std::string_view from, std::string_view to) const;
  // Label of the activity on arc from->to; throws std::out_of_range if the
  // arc is absent.
  const std::string& arc_name(int from, int to) const;

  const std::vector<int>& successors(int node) const { return succ_.at(node); }
  const std::vector<int>& predecessors(int node) const { return pred_.at(node); }

  // Canonical terminals: the first node (in natural label order) without
  // incoming / outgoing arcs. Unique after normalize_terminals.
  int source() const { return source_; }
  int sink() const { return sink_; }
  std::vector<int> source_nodes() const;
  std::vector<int> sink_nodes() const;
  bool is_normalized() const;

  bool is_virtual_node(int node) const { return virtual_node_.at(node); }
  bool is_virtual_arc(int from, int to) const;

  // Input order; after normalization virtual START arcs come first and
  // virtual FINISH arcs last.
  const std::vector<Activity>& activities() const { return activities_; }

  // Node indices in a deterministic topological order.
  std::vector<int> topological_order() const;

 private:
  friend class NetworkBuilder;

  std::vector<std::string> labels_;  // natural-sorted
  std::vector<std::optional<Time>> matrix_;  // n x n, row-major
  std::vector<int> arc_activity_;            // n x n, -1 when absent
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<bool> virtual_node_;
  std::vector<Activity> activities_;
  int source_ = 0;
  int sink_ = 0;
};

struct BuildResult {
  std::optional<ProjectNetwork> network;  // engaged iff report.ok()
  ValidationReport report;

  bool ok() const { return report.ok(); }
};

// Collapses three-point estimates to expected durations, builds the duration
// matrix and validates the result. Rejects cycles, duplicate arcs, self-loops,
// negative durations and out-of-order estimates; warns about nodes that are
// unreachable from the source or cannot reach the sink.
BuildResult build_network(const std::vector<Activity>& activities);

// Inserts a virtual START (FINISH) node joined by zero-duration arcs to every
// source (sink) when more than one exists. Idempotent on single-terminal
// networks.
ProjectNetwork normalize_terminals(const ProjectNetwork& network);

// Natural-order string comparison: "D2" sorts before "D10".
bool natural_less(std::string_view a, std::string_view b);

}  // namespace critpath
