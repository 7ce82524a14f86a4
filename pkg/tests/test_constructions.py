import pytest

from edgeband.constructions import (
    ConstructionError,
    _finish,
    biclique_labeling,
    biclique_order,
    caterpillar_labeling,
    caterpillar_spine,
    clique_labeling,
    clique_order,
    clique_value,
    construct,
    theta_labeling,
    theta_value,
)
from edgeband.families import FamilySpec, caterpillar, complete, cycle, double_star, path, star
from edgeband.graph import GraphError
from edgeband.bounds import degree_bound
from edgeband.solver import exact_edge_bandwidth

K8_DISPLAY = "12,13,23,14,24,34,51,52,53,61,62,71,81,72,82,63,73,83,54,64,74,84,56,57,58,67,68,78"
K66_DISPLAY_PREFIX = ["11", "21", "12", "22", "31", "32", "13", "23", "33", "41", "42", "43", "14", "24"]


def test_clique_order_matches_k8_display():
    assert ",".join(f"{a}{b}" for a, b in clique_order(8)) == K8_DISPLAY
    assert clique_labeling(8).stretch == 18


@pytest.mark.parametrize("n, value", [(2, 0), (3, 2), (4, 4), (5, 7)])
def test_clique_small_values(n, value):
    assert clique_value(n) == value
    assert clique_labeling(n).stretch == value


def test_clique_needs_two_vertices():
    with pytest.raises(GraphError):
        clique_labeling(1)


def test_biclique_order_matches_display_prefix():
    order = [f"{a}{b}" for a, b in biclique_order(6)]
    assert order[:len(K66_DISPLAY_PREFIX)] == K66_DISPLAY_PREFIX
    assert biclique_labeling(6).stretch == 20


@pytest.mark.parametrize("n, value", [(1, 0), (2, 2), (3, 5)])
def test_biclique_small_values(n, value):
    assert biclique_labeling(n).stretch == value


@pytest.mark.parametrize("n", [2, 3])
def test_biclique_agrees_with_solver(n):
    from edgeband.families import complete_bipartite
    assert exact_edge_bandwidth(complete_bipartite(n, n)).value == biclique_labeling(n).claimed_value


def test_caterpillar_examples():
    assert caterpillar_labeling(star(5)).stretch == 4
    assert caterpillar_labeling(double_star(3)).stretch == 3
    assert caterpillar_labeling(path(6)).stretch == 1
    assert caterpillar_labeling(FamilySpec.parse("caterpillar:3,2,3")).claimed_value == 3


def test_caterpillar_value_meets_degree_bound():
    g = caterpillar([0, 4, 1, 0, 2])
    assert caterpillar_labeling(g).claimed_value == degree_bound(g).value


def test_caterpillar_rejects_other_trees_and_cycles():
    from edgeband.graph import make_graph
    spider = make_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    with pytest.raises(GraphError):
        caterpillar_spine(spider)
    with pytest.raises(GraphError):
        caterpillar_labeling(cycle(4))


def test_theta_values():
    assert theta_labeling([1, 3, 3, 3]).stretch == 5
    assert theta_labeling([1, 3, 3]).claimed_value == 3
    assert exact_edge_bandwidth(theta_labeling([1, 3, 3]).graph).value == 3
    assert theta_value(4) == 5


def test_theta_upper_bound_shapes():
    r = theta_labeling([2, 3, 3])
    assert r.upper_bound_only and r.claimed_value == 3 and r.stretch <= 3
    r = theta_labeling([1, 2, 2, 2])
    assert r.upper_bound_only and r.stretch <= 4


def test_theta_shape_in_any_order():
    assert theta_labeling([3, 1, 3, 3]).stretch == 5


def test_unsupported_theta_shape():
    with pytest.raises(GraphError):
        theta_labeling([2, 2, 3])


def test_self_verification_catches_a_wrong_claim():
    with pytest.raises(ConstructionError):
        _finish(complete(4), list(range(6)), 3, "bogus")


def test_construct_dispatch():
    assert construct(FamilySpec.parse("clique:6")).claimed_value == 10
    assert construct(FamilySpec.parse("biclique:4")).claimed_value == 9
    assert construct(FamilySpec.parse("theta:1,3,3,3")).claimed_value == 5
    assert construct(FamilySpec.parse("doublestar:2")).claimed_value == 2
    with pytest.raises(GraphError):
        construct(FamilySpec.parse("cycle:5"))
