import pytest

from edgeband.sweep import PROPERTIES, atlas_graphs, verify_sweep


def test_atlas_counts():
    # connected graphs on 1..n vertices: 1, 1, 2, 6, 21, 112
    assert [len(atlas_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 10, 31, 143]


def test_atlas_rejects_large_caps():
    with pytest.raises(ValueError):
        atlas_graphs(7)


def test_sweep_four_vertices():
    report = verify_sweep(4)
    assert report.graph_count == 10
    props = report.properties
    for name in PROPERTIES:
        assert props[name].passed + props[name].failed > 0
    # the single edge has edge-bandwidth 0 but bandwidth 1, which is the only
    # failure of the vertex/edge comparison and of the contraction upper bound
    for name in ("vertex_bandwidth_below_edge_bandwidth", "edge_to_vertex_within_edge_bandwidth",
                 "contract_sandwich"):
        assert props[name].failed == 1
        assert props[name].first_counterexample["edges"] == [[0, 1]]
    for name in ("line_graph_incidence", "stretch_matches_line_graph", "exact_matches_brute_force",
                 "bounds_below_edge_bandwidth", "forest_numbering_bound", "add_edge_sandwich",
                 "subdivide_sandwich", "transform_guarantees", "edge_deletion_monotone",
                 "clique_formula"):
        assert props[name].failed == 0, name
    assert not report.ok


def test_sweep_includes_k5_formula():
    report = verify_sweep(5)
    assert report.properties["clique_formula"].passed == 4
    assert report.properties["clique_formula"].failed == 0


def test_sweep_is_seed_independent():
    assert verify_sweep(4, seed=1).to_json() == verify_sweep(4, seed=99).to_json()


@pytest.mark.slow
def test_sweep_six_vertices_finds_add_edge_counterexample():
    report = verify_sweep(6)
    prop = report.properties["add_edge_sandwich"]
    assert prop.failed == 1
    assert prop.first_counterexample["before"] == 1
    assert prop.first_counterexample["after"] == 3
