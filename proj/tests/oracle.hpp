#pragma once

// Test-only oracle: exhaustive path enumeration straight over a raw activity
// list. Deliberately independent of ProjectNetwork so the library's
// enumerate_paths and critical_path_exact can be checked against it.

#include "critpath/activity.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

struct RawPath {
  std::vector<std::string> nodes;
  critpath::Time total;
};

// Every simple directed path source -> sink, depth-first over the arcs in
// list order.
inline std::vector<RawPath> enumerate_raw(const std::vector<critpath::Activity>& acts,
                                          const std::string& source,
                                          const std::string& sink) {
  std::vector<RawPath> out;
  std::vector<std::string> path{source};
  critpath::Time total(0);
  std::function<void(const std::string&)> visit = [&](const std::string& node) {
    if (node == sink) {
      out.push_back({path, total});
      return;
    }
    for (const critpath::Activity& a : acts) {
      if (a.from != node) continue;
      if (std::find(path.begin(), path.end(), a.to) != path.end()) continue;
      path.push_back(a.to);
      total += a.duration.effective();
      visit(a.to);
      total -= a.duration.effective();
      path.pop_back();
    }
  };
  visit(source);
  return out;
}

inline critpath::Time max_total(const std::vector<RawPath>& paths) {
  critpath::Time best = paths.front().total;
  for (const RawPath& p : paths) {
    if (p.total > best) best = p.total;
  }
  return best;
}

}  // namespace testutil
