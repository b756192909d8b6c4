#include "critpath/runner.hpp"

#include "json.hpp"

#include <chrono>
#include <sstream>

namespace critpath {

namespace {

using nlohmann::json;

std::string describe(const ValidationReport& report) {
  std::string out = "validation failed:";
  for (const std::string& e : report.errors) {
    out += "\n  " + e;
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

}  // namespace

ValidationFailure::ValidationFailure(ValidationReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

RunOutput run_project(const ParsedProject& project, const RunSpec& spec) {
  BuildResult built = build_network(project.activities);
  if (!built.ok()) {
    throw ValidationFailure(built.report);
  }

  RunOutput output;
  output.mode = project.mode;
  output.report = built.report;
  output.network = normalize_terminals(*built.network);

  const bool want_exact =
      spec.engine == EngineChoice::exact || spec.engine == EngineChoice::both;
  const bool want_ga =
      spec.engine == EngineChoice::ga || spec.engine == EngineChoice::both;

  std::optional<Time> exact_duration;
  std::optional<Time> ga_duration;
  BenchmarkRecord record;

  if (want_exact) {
    auto start = std::chrono::steady_clock::now();
    ScheduleResult result = critical_path_exact(output.network);
    record.exact_ms = elapsed_ms(start);
    exact_duration = result.project_duration;
    output.results.push_back(std::move(result));
  }
  if (want_ga) {
    auto start = std::chrono::steady_clock::now();
    GAResult ga = evolve(output.network, spec.ga);
    ScheduleResult result = extract_result(output.network, ga);
    record.ga_ms = elapsed_ms(start);
    ga_duration = result.project_duration;
    if (exact_duration) {
      ga.converged_to_exact = *exact_duration == *ga_duration;
    }
    output.ga = std::move(ga);
    output.results.push_back(std::move(result));
  }

  if (spec.oracle_check) {
    ScheduleResult oracle_result =
        critical_path_brute_force(output.network, spec.max_paths);
    OracleInfo info;
    info.path_count = enumerate_paths(output.network, spec.max_paths).size();
    info.max_duration = oracle_result.project_duration;
    info.agreement = true;
    for (const ScheduleResult& r : output.results) {
      if (r.project_duration != info.max_duration) info.agreement = false;
    }
    output.oracle = info;
  }

  if (spec.engine == EngineChoice::both) {
    record.label = spec.label.empty() ? spec.input_path : spec.label;
    record.nodes = output.network.node_count();
    record.activities = static_cast<int>(project.activities.size());
    record.exact_duration = exact_duration;
    record.ga_duration = ga_duration;
    record.agreement = exact_duration && ga_duration && *exact_duration == *ga_duration;
    const ScheduleResult& exact = output.results.front();
    std::string path;
    for (std::size_t i = 0; i < exact.critical_path.size(); ++i) {
      if (i > 0) path += " - ";
      path += exact.critical_path[i];
    }
    std::string acts;
    for (std::size_t i = 0; i < exact.critical_activities.size(); ++i) {
      if (i > 0) acts += " - ";
      acts += exact.critical_activities[i];
    }
    record.critical_path = path;
    record.critical_activities = acts;
    output.benchmark = record;
  }

  return output;
}

RunOutput run(const RunSpec& spec) {
  if (spec.project) {
    return run_project(*spec.project, spec);
  }
  return run_project(load_project(spec.input_path), spec);
}

namespace {

json time_json(const Time& t) {
  return json{{"value", to_double(t)}, {"exact", format_time_exact(t)}};
}

json result_json(const ScheduleResult& result) {
  json r;
  r["engine"] = std::string(engine_name(result.engine));
  r["project_duration"] = to_double(result.project_duration);
  r["project_duration_exact"] = format_time_exact(result.project_duration);
  r["critical_path"] = result.critical_path;
  r["critical_activities"] = result.critical_activities;
  json schedules = json::array();
  for (const NodeSchedule& s : result.schedules) {
    schedules.push_back({{"node", s.node},
                         {"earliest", time_json(s.earliest)},
                         {"latest", time_json(s.latest)},
                         {"slack", time_json(s.slack)}});
  }
  r["schedules"] = std::move(schedules);
  return r;
}

}  // namespace

std::string emit_structured(const RunSpec& spec, const RunOutput& output) {
  json doc;
  doc["format"] = "critpath.result.v1";
  doc["input"] = spec.input_path;
  doc["mode"] = std::string(mode_name(output.mode));
  doc["warnings"] = output.report.warnings;

  json results = json::array();
  for (const ScheduleResult& r : output.results) {
    results.push_back(result_json(r));
  }
  doc["results"] = std::move(results);

  if (output.ga) {
    json ga;
    ga["seed"] = output.ga->seed_used;
    ga["generator"] = output.ga->generator;
    ga["population_size"] = spec.ga.population_size;
    ga["elitism_rate"] = spec.ga.elitism_rate;
    ga["generations"] = spec.ga.generations;
    ga["iterations"] = spec.ga.iterations;
    json history = json::array();
    for (const Time& t : output.ga->history) history.push_back(to_double(t));
    ga["history"] = std::move(history);
    if (output.ga->converged_to_exact) {
      ga["converged_to_exact"] = *output.ga->converged_to_exact;
    }
    doc["ga"] = std::move(ga);
  }

  if (output.oracle) {
    doc["oracle"] = {{"path_count", output.oracle->path_count},
                     {"max_duration", to_double(output.oracle->max_duration)},
                     {"max_duration_exact", format_time_exact(output.oracle->max_duration)},
                     {"agreement", output.oracle->agreement}};
  }
  if (output.benchmark) {
    doc["agreement"] = output.benchmark->agreement;
  }
  return doc.dump(2) + "\n";
}

BenchmarkOutput benchmark(const std::vector<RunSpec>& specs) {
  if (specs.empty()) {
    throw std::invalid_argument("benchmark requires at least one project");
  }
  for (const RunSpec& spec : specs) {
    if (spec.engine != EngineChoice::both) {
      throw std::invalid_argument("benchmark requires engine=both for every project");
    }
  }

  BenchmarkOutput out;
  for (const RunSpec& spec : specs) {
    try {
      RunOutput run_output = run(spec);
      out.records.push_back(*run_output.benchmark);
    } catch (const std::exception& e) {
      BenchmarkRecord failed;
      failed.label = spec.label.empty() ? spec.input_path : spec.label;
      failed.error = e.what();
      out.records.push_back(std::move(failed));
    }
  }

  struct Column {
    std::string header;
    std::vector<std::string> cells;
  };
  auto fmt_ms = [](double ms) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", ms);
    return std::string(buf);
  };
  std::vector<Column> columns{{"project", {}}, {"nodes", {}},  {"arcs", {}},
                              {"exact", {}},   {"ga", {}},     {"agree", {}},
                              {"t_exact_ms", {}}, {"t_ga_ms", {}},
                              {"critical_path", {}}, {"critical_activities", {}}};
  double total_exact = 0.0;
  double total_ga = 0.0;
  int agreed = 0;
  for (const BenchmarkRecord& r : out.records) {
    if (!r.error.empty()) {
      columns[0].cells.push_back(r.label);
      columns[1].cells.push_back("-");
      columns[2].cells.push_back("-");
      columns[3].cells.push_back("error");
      columns[4].cells.push_back("error");
      columns[5].cells.push_back("no");
      columns[6].cells.push_back("-");
      columns[7].cells.push_back("-");
      columns[8].cells.push_back(r.error);
      columns[9].cells.push_back("-");
      continue;
    }
    columns[0].cells.push_back(r.label);
    columns[1].cells.push_back(std::to_string(r.nodes));
    columns[2].cells.push_back(std::to_string(r.activities));
    columns[3].cells.push_back(format_time(*r.exact_duration));
    columns[4].cells.push_back(format_time(*r.ga_duration));
    columns[5].cells.push_back(r.agreement ? "yes" : "no");
    columns[6].cells.push_back(fmt_ms(r.exact_ms));
    columns[7].cells.push_back(fmt_ms(r.ga_ms));
    columns[8].cells.push_back(r.critical_path);
    columns[9].cells.push_back(r.critical_activities);
    total_exact += r.exact_ms;
    total_ga += r.ga_ms;
    if (r.agreement) ++agreed;
  }

  std::ostringstream text;
  for (Column& c : columns) {
    std::size_t w = c.header.size();
    for (const std::string& cell : c.cells) w = std::max(w, cell.size());
    c.header.resize(w, ' ');
    for (std::string& cell : c.cells) cell.resize(w, ' ');
  }
  auto emit_line = [&text, &columns](std::size_t row, bool header) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) text << "  ";
      text << (header ? columns[c].header : columns[c].cells[row]);
    }
    text << "\n";
  };
  emit_line(0, true);
  for (std::size_t row = 0; row < out.records.size(); ++row) emit_line(row, false);
  text << "\n";
  text << "agreement: " << agreed << "/" << out.records.size()
       << "  total t_exact_ms: " << fmt_ms(total_exact)
       << "  total t_ga_ms: " << fmt_ms(total_ga) << "\n";
  out.summary = text.str();
  return out;
}

}  // namespace critpath
