import pytest

from edgeband.bounds import (
    boundary_bound,
    degree_bound,
    density_bound,
    density_of,
    edge_boundary,
    lower_bound_report,
    star_bound,
)
from edgeband.families import caterpillar, complete, complete_bipartite, cycle, double_star, path, star, theta
from edgeband.graph import Graph, GraphError, diameter, line_graph, make_graph
from edgeband.solver import exact_edge_bandwidth


def test_degree_bound_examples():
    assert degree_bound(star(5)).value == 4
    assert degree_bound(theta([1, 3, 3, 3])).value == 3
    assert degree_bound(path(5)).value == 1
    assert degree_bound(Graph(3)).value == 0


def test_degree_bound_counts_a_loop_once():
    g = make_graph(2, [(0, 0), (0, 1)])
    assert degree_bound(g).value == 1
    assert exact_edge_bandwidth(g).value == 1


def test_star_bound_examples():
    assert star_bound(complete(4)).value == 4
    assert star_bound(double_star(3)).value == 3
    assert star_bound(cycle(7)).value == 2
    with pytest.raises(GraphError):
        star_bound(Graph(2))


def test_density_of_whole_theta():
    g = theta([1, 3, 3, 3])
    assert diameter(line_graph(g)[0]) == 3
    assert density_of(g, range(g.m)) == 3


def test_density_of_whole_caterpillar():
    g = caterpillar([3, 2, 3])
    assert density_of(g, range(g.m)) == -(-(g.n - 2) // diameter(line_graph(g)[0]))


def test_density_bound_on_paths_is_one():
    assert density_bound(path(4)).value == 1


def test_density_bound_certificate_recomputes():
    g = theta([1, 3, 3, 3])
    b = density_bound(g)
    assert b.value == 4
    assert density_of(g, b.certificate["edges"]) == b.value


def test_density_without_exhaustive_search_still_sound():
    g = complete(6)
    b = density_bound(g, subgraph_budget=0)
    assert 0 < b.value <= 10


def test_boundary_bound_examples():
    assert boundary_bound(complete_bipartite(2, 2)).value == 2
    assert boundary_bound(path(2)).value == 0
    assert boundary_bound(theta([1, 3, 3, 3])).value <= 4


def test_boundary_certificate_recomputes():
    g = theta([1, 3, 3])
    b = boundary_bound(g)
    assert len(b.certificate["F"]) == b.certificate["k"]
    assert len(edge_boundary(g, b.certificate["F"])) == b.value


def test_boundary_over_budget_is_skipped():
    b = boundary_bound(complete(7))
    assert b.skipped
    report = lower_bound_report(complete(7))
    assert report.to_json()["boundary"] == "skipped"
    assert report.overall == max(e.value for e in report.entries if not e.skipped)


def test_report_examples():
    assert lower_bound_report(complete(5)).overall >= 6
    assert lower_bound_report(Graph(4)).overall == 0
    report = lower_bound_report(theta([1, 3, 3, 3]))
    assert report.overall == 4


@pytest.mark.parametrize("m", [3, 4, 5])
def test_report_falls_short_on_theta(m):
    target = -(-(3 * m - 3) // 2)
    overall = lower_bound_report(theta([1] + [3] * (m - 1))).overall
    assert overall <= target
    if m >= 4:
        assert overall < target


def test_report_takes_max_over_components():
    g = make_graph(7, [(0, 1), (0, 2), (0, 3), (4, 5), (5, 6)])
    report = lower_bound_report(g)
    assert report.degree.value == 2
    assert report.degree.certificate["vertex"] == 0
    # K_{1,3} edges each touch 2 others; the path component only reaches 1
    assert report.star.value == 2
    assert report.star.certificate["edge"] == 0
    lifted = lower_bound_report(make_graph(7, [(4, 5), (5, 6), (0, 1), (0, 2), (0, 3)]))
    assert lifted.star.certificate["edge"] == 2


def test_report_json_shape():
    data = lower_bound_report(cycle(5)).to_json()
    assert set(data) == {"degree", "star", "density", "boundary", "overall", "certificates"}
