import pytest
from hypothesis import given, settings, strategies as st

from edgeband.families import complete, double_star, path, theta
from edgeband.graph import (
    Graph,
    GraphError,
    components,
    degree,
    diameter,
    is_connected,
    is_tree,
    line_graph,
    make_graph,
    max_degree,
    peel_degree_one,
)


def test_make_graph_keeps_edge_order():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4
    assert g.edges[3] == (3, 0)


def test_single_edge():
    assert make_graph(2, [(0, 1)]).m == 1


def test_parallel_edges_are_distinct():
    g = make_graph(3, [(0, 1), (0, 1)])
    assert g.m == 2
    assert not g.is_simple()
    assert g.incidence[0] == (0, 1)


def test_out_of_range_endpoint_names_the_edge():
    with pytest.raises(GraphError, match="edge 1"):
        make_graph(3, [(0, 1), (1, 3)])


def test_loop_counts_twice_in_degree_once_in_incidence():
    g = make_graph(2, [(0, 0), (0, 1)])
    assert degree(g, 0) == 3
    assert g.incidence[0] == (0, 1)


def test_line_graph_of_path_is_shorter_path():
    lg, mapping = line_graph(path(4))
    assert mapping == [0, 1, 2]
    assert lg.edges == ((0, 1), (1, 2))


def test_line_graph_of_triangle_is_triangle():
    lg, _ = line_graph(complete(3))
    assert lg.m == 3 and lg.n == 3


def test_line_graph_of_k4_is_octahedron():
    lg, _ = line_graph(complete(4))
    assert lg.n == 6
    assert all(len(a) == 4 for a in lg.adjacency)


def test_line_graph_multigraph_conventions():
    # parallel pair plus a loop at vertex 0: all three edges pairwise incident,
    # and the line graph stays simple
    g = make_graph(2, [(0, 1), (0, 1), (0, 0)])
    lg, _ = line_graph(g)
    assert lg.edges == ((0, 1), (0, 2), (1, 2))
    assert lg.is_simple()


def test_diameter_examples():
    assert diameter(path(4)) == 3
    assert diameter(line_graph(theta([1, 3, 3]))[0]) == 3


def test_diameter_of_disconnected_graph_raises():
    with pytest.raises(GraphError):
        diameter(make_graph(4, [(0, 1), (2, 3)]))


def test_max_degree_double_star():
    assert max_degree(double_star(3)) == 4


def test_components_ordered_by_least_vertex():
    g = make_graph(5, [(3, 4), (0, 2)])
    assert components(g) == [[0, 2], [1], [3, 4]]
    assert not is_connected(g)


def test_peel_a_tree_removes_everything():
    core, order = peel_degree_one(path(4))
    assert core.graph.m == 0
    assert sorted(v for v, _ in order) == [0, 1, 2, 3]


def test_peel_triangle_with_pendant():
    g = make_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    core, order = peel_degree_one(g)
    assert order == [(3, 3)]
    assert core.vertices == (0, 1, 2)
    assert core.edge_ids == (0, 1, 2)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 7))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    return Graph(n, tuple(draw(st.lists(pairs, max_size=10))))


@settings(max_examples=200, deadline=None)
@given(small_graphs())
def test_peeled_core_has_min_degree_two(g):
    core, order = peel_degree_one(g)
    h = core.graph
    assert all(h.degree(v) >= 2 for v in range(h.n) if h.incidence[v])
    # every peeled vertex is gone from the core, and every core edge is untouched
    peeled = {v for v, _ in order}
    assert not peeled & set(core.vertices)
    assert set(core.edge_ids).isdisjoint(e for _, e in order)


@settings(max_examples=200, deadline=None)
@given(small_graphs())
def test_line_graph_adjacency_is_incidence(g):
    lg, _ = line_graph(g)
    for e in range(g.m):
        for f in range(g.m):
            if e != f:
                assert (f in lg.adjacency[e]) == g.edges_incident(e, f)


def test_is_tree():
    assert is_tree(path(5))
    assert not is_tree(complete(3))
    assert not is_tree(make_graph(2, [(0, 1), (0, 1)]))
