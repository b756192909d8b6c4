#include "critpath/cli.hpp"

#include "critpath/random_project.hpp"
#include "critpath/runner.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace critpath {

namespace {

void add_ga_options(CLI::App* cmd, GAConfig& ga) {
  cmd->add_option("--pop-size", ga.population_size, "GA population size")
      ->capture_default_str();
  cmd->add_option("--elitism-rate", ga.elitism_rate, "fraction of survivors in (0,1]")
      ->capture_default_str();
  cmd->add_option("--generations", ga.generations, "evolution steps per run")
      ->capture_default_str();
  cmd->add_option("--iterations", ga.iterations, "independent GA restarts")
      ->capture_default_str();
  cmd->add_option("--seed", ga.seed, "random seed")->capture_default_str();
}

int do_run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  RunOutput output = run(spec);
  for (const std::string& w : output.report.warnings) {
    err << "warning: " << w << "\n";
  }

  switch (spec.format) {
    case OutputFormat::table: {
      for (std::size_t i = 0; i < output.results.size(); ++i) {
        if (i > 0) out << "\n";
        out << emit_table(output.network, output.results[i]);
      }
      if (output.oracle) {
        out << "\nOracle: " << output.oracle->path_count << " paths, maximum duration "
            << format_time(output.oracle->max_duration) << ", agreement: "
            << (output.oracle->agreement ? "yes" : "no") << "\n";
      }
      if (output.benchmark) {
        out << "Engines agree on project duration: "
            << (output.benchmark->agreement ? "yes" : "no") << "\n";
      }
      break;
    }
    case OutputFormat::structured:
      out << emit_structured(spec, output);
      break;
    case OutputFormat::dot:
      out << emit_dot(output.network, output.results.front());
      break;
  }

  if (output.benchmark) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "exact %.2f ms, ga %.2f ms",
                  output.benchmark->exact_ms, output.benchmark->ga_ms);
    err << "timing: " << buf << "\n";
  }

  if (output.oracle && !output.oracle->agreement) {
    for (const ScheduleResult& r : output.results) {
      if (r.project_duration != output.oracle->max_duration) {
        err << "oracle disagreement: engine " << engine_name(r.engine) << " found "
            << format_time(r.project_duration) << ", enumeration maximum is "
            << format_time(output.oracle->max_duration) << "\n";
      }
    }
    return 2;
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"critical-path analysis on CPM and PERT activity networks"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string engine = "exact";
  std::string format = "table";
  CLI::App* run_cmd = app.add_subcommand("run", "analyze one project file");
  run_cmd->add_option("input", spec.input_path, "project file (critpath v1)")
      ->required();
  run_cmd->add_option("--engine", engine, "exact | ga | both")
      ->check(CLI::IsMember({"exact", "ga", "both"}))
      ->capture_default_str();
  run_cmd->add_option("--format", format, "table | structured | dot")
      ->check(CLI::IsMember({"table", "structured", "dot"}))
      ->capture_default_str();
  run_cmd->add_flag("--oracle-check", spec.oracle_check,
                    "verify engine results against exhaustive path enumeration");
  run_cmd->add_option("--max-paths", spec.max_paths, "path enumeration cap")
      ->capture_default_str();
  add_ga_options(run_cmd, spec.ga);

  std::vector<std::string> bench_files;
  int bench_random = 0;
  RandomProjectParams bench_params{9, 14, 12, 28, 1, 100};
  GAConfig bench_ga;
  CLI::App* bench_cmd =
      app.add_subcommand("benchmark", "exact-vs-GA comparison over several projects");
  bench_cmd->add_option("inputs", bench_files, "project files");
  bench_cmd->add_option("--random", bench_random,
                        "append N seeded random projects to the set");
  bench_cmd->add_option("--min-nodes", bench_params.min_nodes, "random project minimum nodes")
      ->capture_default_str();
  bench_cmd->add_option("--max-nodes", bench_params.max_nodes, "random project maximum nodes")
      ->capture_default_str();
  bench_cmd->add_option("--min-arcs", bench_params.min_arcs, "random project minimum arcs")
      ->capture_default_str();
  bench_cmd->add_option("--max-arcs", bench_params.max_arcs, "random project maximum arcs")
      ->capture_default_str();
  add_ga_options(bench_cmd, bench_ga);

  std::vector<const char*> argv;
  argv.push_back("critpath");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      spec.engine = engine == "exact"  ? EngineChoice::exact
                    : engine == "ga"   ? EngineChoice::ga
                                       : EngineChoice::both;
      spec.format = format == "table"        ? OutputFormat::table
                    : format == "structured" ? OutputFormat::structured
                                             : OutputFormat::dot;
      return do_run(spec, out, err);
    }

    // benchmark
    std::vector<RunSpec> specs;
    for (const std::string& file : bench_files) {
      RunSpec s;
      s.input_path = file;
      s.label = file;
      s.engine = EngineChoice::both;
      s.ga = bench_ga;
      specs.push_back(std::move(s));
    }
    for (int k = 0; k < bench_random; ++k) {
      RunSpec s;
      s.label = "P" + std::to_string(k + 1);
      s.input_path = s.label;
      s.project = random_project(bench_params, bench_ga.seed + static_cast<std::uint64_t>(k));
      s.engine = EngineChoice::both;
      s.ga = bench_ga;
      specs.push_back(std::move(s));
    }
    if (specs.empty()) {
      err << "benchmark: no projects (pass files or --random N)\n";
      return 1;
    }
    BenchmarkOutput result = benchmark(specs);
    out << result.summary;
    bool any_ok = false;
    for (const BenchmarkRecord& r : result.records) {
      if (r.error.empty()) any_ok = true;
    }
    return any_ok ? 0 : 1;
  } catch (const EnumerationOverflow& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace critpath
