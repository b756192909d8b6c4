"""Smoke tests for the python bindings against the demo data files."""

import os

import pytest

import critpath as cp


def data_path(name):
    return os.path.join(os.environ.get("CRITPATH_DATA", "data"), name)


def demo_network():
    project = cp.load_project(data_path("demo_project.cpm"))
    return cp.normalize_terminals(cp.build_network(project.activities))


def test_exact_engine_on_demo():
    net = demo_network()
    assert net.is_normalized
    assert net.source == "START"
    result = cp.critical_path_exact(net)
    assert result.engine == "exact"
    assert result.project_duration == 51.0
    assert result.project_duration_exact == "51"
    assert result.critical_path == ["D1", "D3", "D4", "D6", "D8", "D11"]
    assert result.critical_activities == ["C", "F", "H", "J", "L"]
    by_node = {s.node: s for s in result.schedules}
    assert by_node["D6"].earliest == 23.0
    assert by_node["D7"].latest == 37.0
    assert by_node["D8"].slack == 0.0


def test_pert_demo_matches_cpm():
    project = cp.load_project(data_path("demo_project.pert"))
    assert project.mode == "pert"
    net = cp.normalize_terminals(cp.build_network(project.activities))
    assert cp.critical_path_exact(net).project_duration == 51.0


def test_expected_duration():
    assert cp.expected_duration(4, 5, 12) == 6.0
    assert cp.expected_duration(7, 7, 7) == 7.0
    with pytest.raises(ValueError):
        cp.expected_duration(5, 4, 6)


def test_adjacency():
    project = cp.load_project(data_path("demo_project.cpm"))
    net = cp.build_network(project.activities)
    assert net.adjacency("D1", "D3") == 5.0
    assert net.adjacency("D1", "D5") is None
    assert net.adjacency("D3", "D3") is None


def test_enumerate_paths_pre_normalization():
    project = cp.load_project(data_path("demo_project.cpm"))
    net = cp.build_network(project.activities)
    paths = cp.enumerate_paths(net)
    assert len(paths) == 8
    assert sorted(total for _, total in paths) == [20, 22, 28, 31, 41, 42, 50, 51]


def test_ga_engine_is_deterministic():
    net = demo_network()
    config = cp.GAConfig(population_size=8, elitism_rate=0.25, generations=10,
                         iterations=1, seed=7)
    first = cp.evolve(net, config)
    second = cp.evolve(net, config)
    assert first.best_fitness == 51.0
    assert first.best_fitness == second.best_fitness
    assert first.history == second.history
    assert first.generator == "mt19937_64/seed_seq"
    result = cp.extract_result(net, first)
    assert result.engine == "ga"
    assert result.critical_path == ["D1", "D3", "D4", "D6", "D8", "D11"]


def test_build_network_raises_on_cycles():
    acts = [cp.Activity("A", "1", "2", 1), cp.Activity("B", "2", "1", 1)]
    errors, _ = cp.validate(acts)
    assert any("cycle" in e for e in errors)
    with pytest.raises(ValueError):
        cp.build_network(acts)


def test_activities_accept_estimates_and_strings():
    acts = [cp.Activity("A", "1", "2", (4, 5, 12)),
            cp.Activity("B", "2", "3", "37/6")]
    net = cp.build_network(acts)
    assert net.adjacency("1", "2") == 6.0
    assert abs(net.adjacency("2", "3") - 37 / 6) < 1e-12


def test_emitters():
    net = demo_network()
    result = cp.critical_path_exact(net)
    table = cp.emit_table(net, result)
    assert "C*" in table and "Project duration: 51" in table
    dot = cp.emit_dot(net, result)
    assert dot.startswith("digraph project {")
    assert 'style="dashed,bold"' in dot


def test_random_project_round_trip():
    project = cp.random_project(seed=3)
    text = cp.emit_project(project)
    again = cp.parse_project(text)
    assert [a.name for a in again.activities] == [a.name for a in project.activities]
    net = cp.normalize_terminals(cp.build_network(project.activities))
    exact = cp.critical_path_exact(net)
    brute = cp.critical_path_brute_force(net)
    assert exact.project_duration == brute.project_duration
