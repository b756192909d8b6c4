#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "critpath/random_project.hpp"
#include "critpath/runner.hpp"

#include <cstdio>
#include <string>

namespace py = pybind11;
using namespace critpath;

namespace {

Time to_time(py::handle value) {
  if (py::isinstance<py::str>(value)) {
    return parse_time(value.cast<std::string>());
  }
  if (py::isinstance<py::int_>(value)) {
    return Time(value.cast<long long>());
  }
  if (py::isinstance<py::float_>(value)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value.cast<double>());
    return parse_time(buf);
  }
  throw py::type_error("expected a number or a duration string");
}

DurationSpec to_duration(py::handle value) {
  if (py::isinstance<py::tuple>(value) || py::isinstance<py::list>(value)) {
    auto seq = value.cast<py::sequence>();
    if (seq.size() != 3) {
      throw py::value_error("three-point estimate needs exactly (a, m, b)");
    }
    return DurationSpec::estimate(to_time(seq[0]), to_time(seq[1]), to_time(seq[2]));
  }
  return DurationSpec::fixed(to_time(value));
}

py::object duration_out(const DurationSpec& spec) {
  if (spec.is_fixed()) {
    return py::float_(to_double(spec.fixed_value()));
  }
  const ThreePoint& t = spec.triple();
  return py::make_tuple(to_double(t.optimistic), to_double(t.most_likely),
                        to_double(t.pessimistic));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "critical-path analysis on CPM and PERT activity networks";
  m.attr("__version__") = "0.1.0";

  py::class_<Activity>(m, "Activity")
      .def(py::init([](std::string name, std::string from, std::string to,
                       py::handle duration) {
             return Activity{std::move(name), std::move(from), std::move(to),
                             to_duration(duration)};
           }),
           py::arg("name"), py::arg("from_node"), py::arg("to_node"),
           py::arg("duration"))
      .def_readonly("name", &Activity::name)
      .def_readonly("from_node", &Activity::from)
      .def_readonly("to_node", &Activity::to)
      .def_property_readonly(
          "duration", [](const Activity& a) { return duration_out(a.duration); })
      .def_property_readonly(
          "effective_duration",
          [](const Activity& a) { return to_double(a.duration.effective()); })
      .def("__repr__", [](const Activity& a) {
        return "Activity(" + a.name + ", " + a.from + " -> " + a.to + ")";
      });

  py::class_<ParsedProject>(m, "ParsedProject")
      .def_property_readonly(
          "mode", [](const ParsedProject& p) { return std::string(mode_name(p.mode)); })
      .def_readonly("activities", &ParsedProject::activities);

  py::class_<ProjectNetwork>(m, "ProjectNetwork")
      .def_property_readonly("node_labels", &ProjectNetwork::node_labels)
      .def_property_readonly(
          "source", [](const ProjectNetwork& n) { return n.label(n.source()); })
      .def_property_readonly(
          "sink", [](const ProjectNetwork& n) { return n.label(n.sink()); })
      .def_property_readonly("is_normalized", &ProjectNetwork::is_normalized)
      .def_property_readonly("activities", &ProjectNetwork::activities)
      .def(
          "adjacency",
          [](const ProjectNetwork& n, const std::string& from,
             const std::string& to) -> py::object {
            auto d = n.arc(from, to);
            if (!d) return py::none();
            return py::float_(to_double(*d));
          },
          py::arg("from_node"), py::arg("to_node"),
          "Arc duration, or None when the nodes are not directly connected.")
      .def("__repr__", [](const ProjectNetwork& n) {
        return "ProjectNetwork(" + std::to_string(n.node_count()) + " nodes, " +
               std::to_string(n.activities().size()) + " activities)";
      });

  py::class_<NodeSchedule>(m, "NodeSchedule")
      .def_readonly("node", &NodeSchedule::node)
      .def_property_readonly(
          "earliest", [](const NodeSchedule& s) { return to_double(s.earliest); })
      .def_property_readonly(
          "latest", [](const NodeSchedule& s) { return to_double(s.latest); })
      .def_property_readonly(
          "slack", [](const NodeSchedule& s) { return to_double(s.slack); });

  py::class_<ScheduleResult>(m, "ScheduleResult")
      .def_property_readonly(
          "engine",
          [](const ScheduleResult& r) { return std::string(engine_name(r.engine)); })
      .def_readonly("schedules", &ScheduleResult::schedules)
      .def_readonly("critical_path", &ScheduleResult::critical_path)
      .def_readonly("critical_activities", &ScheduleResult::critical_activities)
      .def_property_readonly(
          "project_duration",
          [](const ScheduleResult& r) { return to_double(r.project_duration); })
      .def_property_readonly("project_duration_exact", [](const ScheduleResult& r) {
        return format_time_exact(r.project_duration);
      });

  py::class_<GAConfig>(m, "GAConfig")
      .def(py::init([](int population_size, double elitism_rate, int generations,
                       int iterations, std::uint64_t seed) {
             GAConfig c;
             c.population_size = population_size;
             c.elitism_rate = elitism_rate;
             c.generations = generations;
             c.iterations = iterations;
             c.seed = seed;
             return c;
           }),
           py::arg("population_size") = 32, py::arg("elitism_rate") = 0.25,
           py::arg("generations") = 20, py::arg("iterations") = 2,
           py::arg("seed") = 1)
      .def_readwrite("population_size", &GAConfig::population_size)
      .def_readwrite("elitism_rate", &GAConfig::elitism_rate)
      .def_readwrite("generations", &GAConfig::generations)
      .def_readwrite("iterations", &GAConfig::iterations)
      .def_readwrite("seed", &GAConfig::seed);

  py::class_<GAResult>(m, "GAResult")
      .def_property_readonly(
          "best_fitness", [](const GAResult& r) { return to_double(r.best.fitness); })
      .def_property_readonly("history",
                             [](const GAResult& r) {
                               std::vector<double> out;
                               for (const Time& t : r.history) out.push_back(to_double(t));
                               return out;
                             })
      .def_readonly("seed_used", &GAResult::seed_used)
      .def_readonly("generator", &GAResult::generator);

  m.def(
      "expected_duration",
      [](py::handle a, py::handle m_, py::handle b) {
        return to_double(expected_duration(to_time(a), to_time(m_), to_time(b)));
      },
      py::arg("a"), py::arg("m"), py::arg("b"),
      "Mean of a three-point estimate: (a + 4m + b) / 6.");

  m.def("parse_project", &parse_project, py::arg("text"));
  m.def("load_project", &load_project, py::arg("path"));
  m.def("emit_project", &emit_project, py::arg("project"));

  m.def(
      "validate",
      [](const std::vector<Activity>& activities) {
        BuildResult built = build_network(activities);
        return py::make_tuple(built.report.errors, built.report.warnings);
      },
      py::arg("activities"), "Returns (errors, warnings) without building.");

  m.def(
      "build_network",
      [](const std::vector<Activity>& activities) {
        BuildResult built = build_network(activities);
        if (!built.ok()) {
          std::string text = "invalid network:";
          for (const std::string& e : built.report.errors) text += "\n  " + e;
          throw py::value_error(text);
        }
        return *built.network;
      },
      py::arg("activities"));

  m.def("normalize_terminals", &normalize_terminals, py::arg("network"));
  m.def("critical_path_exact", &critical_path_exact, py::arg("network"));
  m.def("critical_path_brute_force", &critical_path_brute_force, py::arg("network"),
        py::arg("max_paths") = kDefaultMaxPaths);

  m.def(
      "enumerate_paths",
      [](const ProjectNetwork& network, std::size_t max_paths) {
        py::list out;
        for (const PathRecord& p : enumerate_paths(network, max_paths)) {
          out.append(py::make_tuple(p.nodes, to_double(p.total)));
        }
        return out;
      },
      py::arg("network"), py::arg("max_paths") = kDefaultMaxPaths);

  m.def("evolve", &evolve, py::arg("network"), py::arg("config") = GAConfig{});
  m.def("extract_result", &extract_result, py::arg("network"), py::arg("ga"));

  m.def("emit_table", &emit_table, py::arg("network"), py::arg("result"));
  m.def("emit_dot", &emit_dot, py::arg("network"), py::arg("result"));

  m.def(
      "random_project",
      [](int min_nodes, int max_nodes, int min_arcs, int max_arcs, int min_duration,
         int max_duration, std::uint64_t seed) {
        return random_project(
            {min_nodes, max_nodes, min_arcs, max_arcs, min_duration, max_duration},
            seed);
      },
      py::arg("min_nodes") = 5, py::arg("max_nodes") = 12, py::arg("min_arcs") = 6,
      py::arg("max_arcs") = 25, py::arg("min_duration") = 1,
      py::arg("max_duration") = 100, py::arg("seed") = 1);

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EnumerationOverflow>(m, "EnumerationOverflow",
                                              PyExc_RuntimeError);
}
