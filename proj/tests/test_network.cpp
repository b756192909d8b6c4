#include "critpath/network.hpp"

#include "critpath/project_io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

#include <random>
#include <stdexcept>

using namespace critpath;
using testutil::act;
using testutil::pact;

TEST_CASE("expected_duration follows (a + 4m + b) / 6") {
  CHECK(expected_duration(Time(7), Time(7), Time(7)) == Time(7));
  CHECK(expected_duration(Time(4), Time(5), Time(12)) == Time(6));
  CHECK(expected_duration(Time(0), Time(0), Time(0)) == Time(0));
  CHECK(expected_duration(Time(10), Time(12), Time(14)) == Time(12));
  CHECK(expected_duration(Time(0), Time(1), Time(3)) == Time(7, 6));
}

TEST_CASE("expected_duration rejects out-of-order estimates") {
  CHECK_THROWS_AS(expected_duration(Time(5), Time(4), Time(6)), std::invalid_argument);
  CHECK_THROWS_AS(expected_duration(Time(1), Time(2), Time(1)), std::invalid_argument);
  CHECK_THROWS_AS(expected_duration(Time(-1), Time(0), Time(1)), std::invalid_argument);
}

TEST_CASE("expected_duration stays within [a, b] and is exact on m=m=m") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    long long a = static_cast<long long>(rng() % 50);
    long long m = a + static_cast<long long>(rng() % 50);
    long long b = m + static_cast<long long>(rng() % 50);
    Time t = expected_duration(Time(a), Time(m), Time(b));
    CHECK(Time(a) <= t);
    CHECK(t <= Time(b));
    CHECK(expected_duration(Time(m), Time(m), Time(m)) == Time(m));
  }
}

TEST_CASE("natural_less orders numeric suffixes by value") {
  CHECK(natural_less("D1", "D2"));
  CHECK(natural_less("D2", "D10"));
  CHECK(natural_less("D9", "D10"));
  CHECK(!natural_less("D10", "D2"));
  CHECK(natural_less("A", "B"));
  CHECK(!natural_less("D1", "D1"));
}

TEST_CASE("build_network on the demo arcs") {
  BuildResult built = build_network(testutil::demo_activities());
  REQUIRE(built.ok());
  const ProjectNetwork& net = *built.network;

  CHECK(net.node_count() == 11);
  CHECK(net.label(net.source()) == "D1");
  CHECK(net.label(net.sink()) == "D11");
  REQUIRE(built.report.warnings.size() == 1);
  CHECK(built.report.warnings[0] == "node D10 unreachable from source D1");

  SUBCASE("adjacency lookups") {
    CHECK(net.arc("D1", "D3") == Time(5));
    CHECK(net.arc("D1", "D5") == std::nullopt);
    CHECK(net.arc("D3", "D3") == std::nullopt);
    CHECK(net.arc("D10", "D11") == Time(17));
    CHECK_THROWS_AS(net.arc("D1", "D99"), std::out_of_range);
  }

  SUBCASE("matrix is strictly upper-triangular under a topological order") {
    auto order = net.topological_order();
    std::vector<int> position(net.node_count());
    for (int k = 0; k < net.node_count(); ++k) position[order[k]] = k;
    for (int i = 0; i < net.node_count(); ++i) {
      for (int j = 0; j < net.node_count(); ++j) {
        if (net.arc(i, j)) CHECK(position[i] < position[j]);
      }
    }
  }

  SUBCASE("two natural sources before normalization") {
    auto sources = net.source_nodes();
    REQUIRE(sources.size() == 2);
    CHECK(net.label(sources[0]) == "D1");
    CHECK(net.label(sources[1]) == "D10");
    CHECK(!net.is_normalized());
  }
}

TEST_CASE("build_network accepts a single arc") {
  BuildResult built = build_network({act("A", "1", "2", 5)});
  REQUIRE(built.ok());
  CHECK(built.network->label(built.network->source()) == "1");
  CHECK(built.network->label(built.network->sink()) == "2");
  CHECK(built.report.warnings.empty());
}

TEST_CASE("build_network rejects bad inputs") {
  SUBCASE("two-node cycle") {
    BuildResult built = build_network({act("A", "1", "2", 1), act("B", "2", "1", 1)});
    REQUIRE(!built.ok());
    CHECK(built.report.errors[0] == "cycle detected: 1 -> 2 -> 1");
  }
  SUBCASE("longer cycle") {
    BuildResult built = build_network(
        {act("A", "1", "2", 1), act("B", "2", "3", 1), act("C", "3", "1", 1)});
    REQUIRE(!built.ok());
    CHECK(built.report.errors[0].find("cycle detected") == 0);
  }
  SUBCASE("duplicate arc") {
    BuildResult built = build_network({act("A", "1", "2", 1), act("B", "1", "2", 2)});
    REQUIRE(!built.ok());
    CHECK(built.report.errors[0] == "duplicate arc 1 -> 2 (activities A and B)");
  }
  SUBCASE("negative duration") {
    BuildResult built = build_network({act("A", "1", "2", -1)});
    REQUIRE(!built.ok());
    CHECK(built.report.errors[0] == "activity 1 (A): negative duration -1");
  }
  SUBCASE("self loop") {
    BuildResult built = build_network({act("A", "1", "1", 1)});
    REQUIRE(!built.ok());
    CHECK(built.report.errors[0] == "activity 1 (A): self-loop 1 -> 1");
  }
  SUBCASE("estimate out of order") {
    BuildResult built = build_network({pact("A", "1", "2", 5, 4, 6)});
    REQUIRE(!built.ok());
    CHECK(built.report.errors[0].find("three-point estimate out of order") !=
          std::string::npos);
  }
  SUBCASE("empty name") {
    BuildResult built = build_network({act("", "1", "2", 1)});
    REQUIRE(!built.ok());
    CHECK(built.report.errors[0] == "activity 1: empty name");
  }
  SUBCASE("empty list") {
    BuildResult built = build_network({});
    REQUIRE(!built.ok());
    CHECK(built.report.errors[0] == "empty activity list");
  }
}

TEST_CASE("build_network collapses three-point estimates in the matrix") {
  BuildResult built = build_network({pact("A", "1", "2", 4, 5, 12)});
  REQUIRE(built.ok());
  CHECK(built.network->arc("1", "2") == Time(6));
}

TEST_CASE("normalize_terminals adds a START feeding both demo sources") {
  ProjectNetwork net = testutil::demo_network_normalized();
  CHECK(net.is_normalized());
  CHECK(net.label(net.source()) == "START");
  CHECK(net.is_virtual_node(net.source()));
  CHECK(net.arc("START", "D1") == Time(0));
  CHECK(net.arc("START", "D10") == Time(0));
  CHECK(net.successors(net.source()).size() == 2);
  CHECK(net.label(net.sink()) == "D11");
  CHECK(!net.is_virtual_node(net.sink()));

  SUBCASE("idempotent on a normalized network") {
    ProjectNetwork again = normalize_terminals(net);
    CHECK(again.node_labels() == net.node_labels());
    CHECK(again.activities() == net.activities());
  }

  SUBCASE("original arc durations preserved") {
    ProjectNetwork before = testutil::demo_network();
    for (const Activity& a : before.activities()) {
      CHECK(net.arc(a.from, a.to) == before.arc(a.from, a.to));
    }
  }
}

TEST_CASE("normalize_terminals leaves single-terminal networks unchanged") {
  ProjectNetwork net = testutil::tiny_network(
      {act("A", "1", "2", 5), act("B", "2", "3", 4)});
  ProjectNetwork normalized = normalize_terminals(net);
  CHECK(normalized.node_labels() == net.node_labels());
  CHECK(normalized.activities() == net.activities());
}

TEST_CASE("normalize_terminals joins isolated chains through START") {
  ProjectNetwork net =
      testutil::tiny_network({act("A", "1", "3", 2), act("B", "2", "3", 4)});
  ProjectNetwork normalized = normalize_terminals(net);
  CHECK(normalized.is_normalized());
  CHECK(normalized.arc("START", "1") == Time(0));
  CHECK(normalized.arc("START", "2") == Time(0));
  CHECK(normalized.label(normalized.sink()) == "3");
}

TEST_CASE("normalize_terminals adds FINISH for multiple sinks") {
  ProjectNetwork net =
      testutil::tiny_network({act("A", "1", "2", 2), act("B", "1", "3", 4)});
  ProjectNetwork normalized = normalize_terminals(net);
  CHECK(normalized.is_normalized());
  CHECK(normalized.arc("2", "FINISH") == Time(0));
  CHECK(normalized.arc("3", "FINISH") == Time(0));
  CHECK(normalized.is_virtual_node(normalized.sink()));
}

TEST_CASE("normalize_terminals avoids label collisions") {
  ProjectNetwork net = testutil::tiny_network(
      {act("A", "START", "Z", 1), act("B", "Q", "Z", 2)});
  ProjectNetwork normalized = normalize_terminals(net);
  CHECK(normalized.is_normalized());
  CHECK(normalized.label(normalized.source()) == "START_2");
  CHECK(normalized.arc("START_2", "START") == Time(0));
  CHECK(normalized.arc("START_2", "Q") == Time(0));
}

TEST_CASE("network documents round-trip to an identical matrix") {
  auto matrices_equal = [](const ProjectNetwork& a, const ProjectNetwork& b) {
    REQUIRE(a.node_labels() == b.node_labels());
    for (int i = 0; i < a.node_count(); ++i) {
      for (int j = 0; j < a.node_count(); ++j) {
        CHECK(a.arc(i, j) == b.arc(i, j));
      }
    }
  };

  SUBCASE("demo network") {
    ProjectNetwork net = testutil::demo_network();
    BuildResult rebuilt = build_network(parse_project(network_document(net)).activities);
    REQUIRE(rebuilt.ok());
    matrices_equal(net, *rebuilt.network);
  }

  SUBCASE("estimates that collapse to sixths") {
    ProjectNetwork net = testutil::tiny_network(
        {pact("A", "1", "2", 0, 1, 3), pact("B", "2", "3", 4, 5, 12)});
    CHECK(net.arc("1", "2") == Time(7, 6));
    BuildResult rebuilt = build_network(parse_project(network_document(net)).activities);
    REQUIRE(rebuilt.ok());
    matrices_equal(net, *rebuilt.network);
  }
}
