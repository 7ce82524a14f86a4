import random

import pytest

from edgeband.families import complete, complete_bipartite, cycle, path, star, theta
from edgeband.graph import Graph, GraphError, line_graph, make_graph
from edgeband.labeling import edge_stretch, vertex_stretch
from edgeband.solver import (
    SolverConfig,
    brute_force_bandwidth,
    exact_bandwidth,
    exact_edge_bandwidth,
)
from edgeband.sweep import atlas_graphs


def test_brute_force_examples():
    assert brute_force_bandwidth(path(4))[0] == 1
    assert brute_force_bandwidth(cycle(5))[0] == 2
    assert brute_force_bandwidth(complete_bipartite(2, 3))[0] == 3


def test_brute_force_cap():
    with pytest.raises(GraphError):
        brute_force_bandwidth(path(10))


def test_exact_bandwidth_examples():
    assert exact_bandwidth(line_graph(complete(4))[0]).value == 4
    assert exact_bandwidth(line_graph(theta([1, 3, 3]))[0]).value == 3
    assert exact_bandwidth(Graph(4)).value == 0


def test_exact_edge_bandwidth_examples():
    assert exact_edge_bandwidth(complete(4)).value == 4
    assert exact_edge_bandwidth(complete_bipartite(2, 2)).value == 2
    assert exact_edge_bandwidth(star(4)).value == 3


def test_certificate_achieves_value():
    res = exact_edge_bandwidth(theta([1, 3, 3]))
    assert res.optimal
    assert edge_stretch(theta([1, 3, 3]), res.labeling) == res.value
    value, labeling = res
    assert value == 3


def test_exact_matches_brute_force_with_same_certificate():
    for g in atlas_graphs(6):
        value, labeling = brute_force_bandwidth(g)
        res = exact_bandwidth(g)
        assert res.value == value
        assert res.labeling == labeling


def test_exact_matches_brute_force_on_random_seven_vertex_graphs():
    rng = random.Random(7)
    for _ in range(40):
        pairs = [(a, b) for a in range(7) for b in range(a + 1, 7) if rng.random() < 0.4]
        g = make_graph(7, pairs)
        assert exact_bandwidth(g).value == brute_force_bandwidth(g)[0]


def test_disconnected_value_is_max_over_components():
    a, b = cycle(5), complete(4)
    joined = make_graph(a.n + b.n, list(a.edges) + [(x + a.n, y + a.n) for x, y in b.edges])
    assert exact_edge_bandwidth(joined).value == max(exact_edge_bandwidth(a).value,
                                                      exact_edge_bandwidth(b).value)


def test_budget_gives_unsolved_result():
    res = exact_edge_bandwidth(complete(7), SolverConfig(vertex_budget=16))
    assert not res.optimal and res.value is None
    assert "budget" in res.reason


def test_time_budget_gives_bracket():
    res = exact_bandwidth(line_graph(complete(7))[0], SolverConfig(vertex_budget=30, time_budget=0.01))
    if not res.optimal:
        assert res.lower <= (res.upper if res.upper is not None else res.lower)
        if res.labeling is not None:
            assert vertex_stretch(line_graph(complete(7))[0], res.labeling) == res.upper


def test_seed_upper_bound_does_not_change_answer():
    g = line_graph(theta([1, 3, 3, 3]))[0]
    for seed in (3, 5, 8, 100):
        assert exact_bandwidth(g, SolverConfig(initial_upper_bound=seed)).value == 5


def test_config_rejects_non_positive_budgets():
    with pytest.raises(ValueError):
        SolverConfig(vertex_budget=0)
    with pytest.raises(ValueError):
        SolverConfig(time_budget=0)
