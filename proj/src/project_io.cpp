#include "critpath/project_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace critpath {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::vector<std::string> tokens;
  std::istringstream stream(body);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

Time parse_field(const std::string& token, const char* field, int line_no) {
  try {
    return parse_time(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, std::string("field '") + field + "': " + e.what());
  }
}

}  // namespace

ParsedProject parse_project(const std::string& text) {
  ParsedProject project;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;

  while (std::getline(stream, line)) {
    ++line_no;
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "critpath" || tokens[1] != "v1") {
        throw ParseError(line_no, "expected header 'critpath v1 <cpm|pert>'");
      }
      if (tokens[2] == "cpm") {
        project.mode = Mode::cpm;
      } else if (tokens[2] == "pert") {
        project.mode = Mode::pert;
      } else {
        throw ParseError(line_no, "unknown mode '" + tokens[2] + "' (expected cpm or pert)");
      }
      have_header = true;
      continue;
    }

    if (tokens.size() != 4 && tokens.size() != 6) {
      throw ParseError(line_no, "expected 'name from to duration' or 'name from to a m b', found " +
                                    std::to_string(tokens.size()) + " fields");
    }
    if (tokens.size() == 6 && project.mode == Mode::cpm) {
      throw ParseError(line_no, "three-point estimate not allowed in cpm mode");
    }

    Activity act;
    act.name = tokens[0];
    act.from = tokens[1];
    act.to = tokens[2];
    if (tokens.size() == 4) {
      act.duration = DurationSpec::fixed(parse_field(tokens[3], "duration", line_no));
    } else {
      act.duration = DurationSpec::estimate(parse_field(tokens[3], "a", line_no),
                                            parse_field(tokens[4], "m", line_no),
                                            parse_field(tokens[5], "b", line_no));
    }
    project.activities.push_back(std::move(act));
  }

  if (!have_header) {
    throw ParseError(line_no, "missing header 'critpath v1 <cpm|pert>'");
  }
  if (project.activities.empty()) {
    throw ParseError(line_no, "no activities");
  }
  return project;
}

ParsedProject load_project(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot read project file: " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_project(buffer.str());
}

std::string emit_project(const ParsedProject& project) {
  std::ostringstream out;
  out << "critpath v1 " << mode_name(project.mode) << "\n";
  for (const Activity& act : project.activities) {
    out << act.name << " " << act.from << " " << act.to;
    if (act.duration.is_fixed()) {
      out << " " << format_time_exact(act.duration.fixed_value());
    } else {
      const ThreePoint& t = act.duration.triple();
      out << " " << format_time_exact(t.optimistic) << " "
          << format_time_exact(t.most_likely) << " "
          << format_time_exact(t.pessimistic);
    }
    out << "\n";
  }
  return out.str();
}

std::string network_document(const ProjectNetwork& network) {
  ParsedProject flattened;
  flattened.mode = Mode::cpm;
  for (const Activity& act : network.activities()) {
    flattened.activities.push_back(
        {act.name, act.from, act.to, DurationSpec::fixed(act.duration.effective())});
  }
  return emit_project(flattened);
}

namespace {

// Arc (from, to) sits on the result's critical path. Virtual arcs count as
// critical when they adjoin the stripped path's endpoints.
bool on_critical_path(const ProjectNetwork& net, const ScheduleResult& result,
                      const Activity& act) {
  const auto& path = result.critical_path;
  if (path.empty()) return false;
  int from = net.index_of(act.from);
  int to = net.index_of(act.to);
  if (net.is_virtual_node(from)) return act.to == path.front();
  if (net.is_virtual_node(to)) return act.from == path.back();
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (path[k] == act.from && path[k + 1] == act.to) return true;
  }
  return false;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

void check_result_matches(const ProjectNetwork& network, const ScheduleResult& result) {
  const auto& path = result.critical_path;
  if (path.empty()) {
    throw std::invalid_argument("result has an empty critical path");
  }
  Time total(0);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    auto duration = network.arc(path[k], path[k + 1]);  // throws on unknown label
    if (!duration) {
      throw std::invalid_argument("result does not belong to this network: no arc " +
                                  path[k] + " -> " + path[k + 1]);
    }
    total += *duration;
  }
  if (total != result.project_duration) {
    throw std::invalid_argument(
        "result does not belong to this network: path sums to " +
        format_time_exact(total) + ", result claims " +
        format_time_exact(result.project_duration));
  }
}

}  // namespace

std::string emit_table(const ProjectNetwork& network, const ScheduleResult& result) {
  struct Row {
    std::string no;
    std::string name;
    std::string from;
    std::string to;
    std::string duration;
  };
  std::vector<Row> rows;
  int no = 0;
  for (const Activity& act : network.activities()) {
    std::string name = act.name;
    if (on_critical_path(network, result, act)) name += "*";
    rows.push_back({std::to_string(++no), name, act.from, act.to,
                    format_time(act.duration.effective())});
  }

  Row header{"No", "Activity", "From", "To", "Duration"};
  auto width = [&rows, &header](auto field) {
    std::size_t w = (header.*field).size();
    for (const Row& r : rows) w = std::max(w, (r.*field).size());
    return w;
  };
  const std::size_t w_no = width(&Row::no);
  const std::size_t w_name = width(&Row::name);
  const std::size_t w_from = width(&Row::from);
  const std::size_t w_to = width(&Row::to);
  const std::size_t w_dur = width(&Row::duration);

  std::ostringstream out;
  out << "Engine: " << engine_name(result.engine) << "\n\n";
  auto emit_row = [&](const Row& r) {
    out << std::string(w_no - r.no.size(), ' ') << r.no << "  ";
    out << r.name << std::string(w_name - r.name.size(), ' ') << "  ";
    out << r.from << std::string(w_from - r.from.size(), ' ') << "  ";
    out << r.to << std::string(w_to - r.to.size(), ' ') << "  ";
    out << std::string(w_dur - r.duration.size(), ' ') << r.duration << "\n";
  };
  emit_row(header);
  for (const Row& r : rows) emit_row(r);
  out << "\n";
  out << "Project duration: " << format_time(result.project_duration) << "\n";
  out << "Critical path: " << join(result.critical_path, " - ") << "\n";
  out << "Critical activities: " << join(result.critical_activities, " - ") << "\n";
  return out.str();
}

std::string emit_dot(const ProjectNetwork& network, const ScheduleResult& result) {
  check_result_matches(network, result);

  const auto& path = result.critical_path;
  auto critical_arc = [&path](const std::string& from, const std::string& to) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      if (path[k] == from && path[k + 1] == to) return true;
    }
    return false;
  };

  std::ostringstream out;
  out << "digraph project {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (int i = 0; i < network.node_count(); ++i) {
    out << "  \"" << network.label(i) << "\"";
    if (network.is_virtual_node(i)) {
      out << " [shape=Mdiamond, style=dotted]";
    }
    out << ";\n";
  }
  for (int i = 0; i < network.node_count(); ++i) {
    for (int j : network.successors(i)) {
      out << "  \"" << network.label(i) << "\" -> \"" << network.label(j) << "\"";
      out << " [label=\"" << network.arc_name(i, j) << ":"
          << format_time(*network.arc(i, j)) << "\"";
      if (network.is_virtual_arc(i, j)) {
        out << ", style=dotted";
      } else if (critical_arc(network.label(i), network.label(j))) {
        out << ", style=\"dashed,bold\", penwidth=2";
      }
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace critpath
