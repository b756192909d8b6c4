#pragma once

#include "critpath/ga.hpp"
#include "critpath/project_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace critpath {

enum class EngineChoice { exact, ga, both };
enum class OutputFormat { table, structured, dot };

struct RunSpec {
  std::string input_path;
  // When set, used instead of reading input_path (random benchmark projects).
  std::optional<ParsedProject> project;
  EngineChoice engine = EngineChoice::exact;
  GAConfig ga;
  OutputFormat format = OutputFormat::table;
  bool oracle_check = false;
  std::size_t max_paths = kDefaultMaxPaths;
  std::string label;  // defaults to input_path
};

struct OracleInfo {
  std::size_t path_count = 0;
  Time max_duration;
  bool agreement = true;  // every engine matched the enumeration maximum
};

struct BenchmarkRecord {
  std::string label;
  int nodes = 0;
  int activities = 0;
  std::optional<Time> exact_duration;
  std::optional<Time> ga_duration;
  bool agreement = false;  // ga duration equals exact duration
  double exact_ms = 0.0;   // measured wall-clock
  double ga_ms = 0.0;
  std::string critical_path;
  std::string critical_activities;
  std::string error;  // nonempty when the project failed
};

// Thrown by run() when build_network rejects the input.
class ValidationFailure : public std::runtime_error {
 public:
  explicit ValidationFailure(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct RunOutput {
  Mode mode = Mode::cpm;
  ValidationReport report;  // warnings from the build
  ProjectNetwork network;   // terminal-normalized
  std::vector<ScheduleResult> results;  // exact first when engine = both
  std::optional<GAResult> ga;
  std::optional<OracleInfo> oracle;
  std::optional<BenchmarkRecord> benchmark;  // filled when engine = both
};

// Parse, build, normalize, run the requested engine(s); with oracle_check the
// results are verified against enumerate_paths (EnumerationOverflow
// propagates when the path count exceeds spec.max_paths).
RunOutput run(const RunSpec& spec);
RunOutput run_project(const ParsedProject& project, const RunSpec& spec);

// Machine-readable JSON document: every ScheduleResult field plus seed and
// generator identifier. Contains no wall-clock fields, so identical inputs
// and flags produce identical bytes.
std::string emit_structured(const RunSpec& spec, const RunOutput& output);

struct BenchmarkOutput {
  std::vector<BenchmarkRecord> records;
  std::string summary;
};

// Runs every spec with both engines and tabulates durations, agreement and
// measured per-engine wall-clock. Per-project failures are recorded and the
// harness continues. Output order follows input order.
BenchmarkOutput benchmark(const std::vector<RunSpec>& specs);

}  // namespace critpath
