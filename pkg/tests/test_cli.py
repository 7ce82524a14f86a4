import json
import subprocess
import sys

import pytest

from edgeband.cli import main
from edgeband.io import format_edge_list
from edgeband.families import path
from edgeband.graph import Graph
from edgeband.labeling import revalidate


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


@pytest.fixture
def p4(tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("p 4 3\ne 0 1\ne 1 2\ne 2 3\n")
    return f


def test_bounds(capsys):
    code, data = run(capsys, "bounds", "--family", "theta:1,3,3,3")
    assert code == 0
    assert data["overall"] == 4
    assert data["boundary"] == 4


def test_bounds_skipped_boundary(capsys):
    code, data = run(capsys, "bounds", "--family", "clique:7")
    assert data["boundary"] == "skipped"


def test_exact_edge_and_vertex(capsys):
    code, data = run(capsys, "exact", "--family", "clique:5")
    assert code == 0 and data["value"] == 7
    assert revalidate(Graph(5, tuple((i, j) for i in range(5) for j in range(i + 1, 5))), data["labeling"])
    code, data = run(capsys, "exact", "--family", "star:6", "--kind", "vertex")
    assert data["value"] == 3


def test_exact_over_budget_exits_nonzero(capsys):
    code, data = run(capsys, "exact", "--family", "clique:7", "--vertex-budget", "16")
    assert code == 1
    assert data["optimal"] is False and data["value"] is None


def test_exact_flags(capsys):
    code, data = run(capsys, "exact", "--family", "theta:1,3,3,3", "--seed-upper-bound", "5",
                     "--time-budget-seconds", "30")
    assert code == 0 and data["value"] == 5


def test_construct(capsys):
    code, data = run(capsys, "construct", "--family", "clique:8")
    assert code == 0
    assert data["claimed_value"] == 18 == data["labeling"]["stretch"]
    g = Graph(data["vertex_count"], tuple(map(tuple, data["edges"])))
    assert revalidate(g, data["labeling"])


def test_construct_unknown_family(capsys):
    assert main(["construct", "--family", "cycle:5"]) == 2


def test_exactly_one_input_required(p4, capsys):
    with pytest.raises(SystemExit):
        main(["bounds", "--graph", str(p4), "--family", "clique:3"])
    with pytest.raises(SystemExit):
        main(["bounds"])


def test_transform_add_edge_with_labeling_file(p4, tmp_path, capsys):
    lab = tmp_path / "f.txt"
    lab.write_text("0 1\n1 2\n2 3\n")
    code, data = run(capsys, "transform", "--graph", str(p4), "--op", "add-edge", "--new-edge", "0", "3",
                     "--labeling", str(lab))
    assert code == 0
    assert data["within_bound"] and data["stretch"] <= data["guaranteed_bound"]
    assert len(data["labels"]) == 4


@pytest.mark.parametrize("op, extra", [
    ("subdivide", ["--edge", "1"]),
    ("contract", ["--edge", "1"]),
    ("expand", ["--edge", "1"]),
    ("collapse", ["--edges", "0", "1"]),
    ("to-edge", []),
])
def test_transform_ops_with_optimal_input(p4, capsys, op, extra):
    code, data = run(capsys, "transform", "--graph", str(p4), "--op", op, *extra)
    assert code == 0
    assert data["op"] == op and data["within_bound"]


def test_transform_to_vertex_on_single_edge_fails(tmp_path, capsys):
    f = tmp_path / "k2.txt"
    f.write_text(format_edge_list(path(2)))
    code, data = run(capsys, "transform", "--graph", str(f), "--op", "to-vertex")
    assert code == 1 and data["within_bound"] is False


def test_transform_missing_argument(p4, capsys):
    assert main(["transform", "--graph", str(p4), "--op", "subdivide"]) == 2
    assert "needs --edge" in capsys.readouterr().err


def test_transform_json_labeling(p4, tmp_path, capsys):
    lab = tmp_path / "f.json"
    lab.write_text(json.dumps({"kind": "vertex", "labels": [4, 3, 2, 1], "stretch": 1}))
    code, data = run(capsys, "transform", "--graph", str(p4), "--op", "to-edge", "--labeling", str(lab))
    assert code == 0 and data["kind"] == "edge"
    assert main(["transform", "--graph", str(p4), "--op", "to-vertex", "--labeling", str(lab)]) == 2


def test_verify(capsys):
    code, data = run(capsys, "verify", "--max-vertices", "3")
    assert data["graphs"] == 4
    # the single edge breaks the vertex/edge comparison
    assert code == 1 and data["ok"] is False
    assert data["properties"]["line_graph_incidence"]["failed"] == 0


def test_permute_matrix(tmp_path, capsys):
    m = tmp_path / "m.mtx"
    m.write_text("%%MatrixMarket matrix coordinate pattern symmetric\n4 4 4\n3 1\n4 3\n2 4\n2 2\n")
    code, data = run(capsys, "permute-matrix", "--matrix", str(m))
    assert code == 0
    assert data["band"] == 1 and data["original_band"] == 2
    assert data["warnings"]["diagonal"] == 1


def test_output_file(tmp_path, capsys):
    out = tmp_path / "out.json"
    assert main(["--output", str(out), "construct", "--family", "star:4"]) == 0
    assert json.loads(out.read_text())["claimed_value"] == 3


def test_bad_graph_file(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("p 3 1\ne 0 5\n")
    assert main(["bounds", "--graph", str(f)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "edgeband", "construct", "--family", "biclique:3"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["claimed_value"] == 5
