"""Command-line interface.  Every subcommand prints one JSON document."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .bounds import BOUNDARY_BUDGET, DENSITY_BUDGET, lower_bound_report
from .constructions import ConstructionError, construct
from .families import FamilySpec, generate
from .graph import Graph, GraphError
from .io import FormatError, parse_edge_list, parse_matrix_pattern, permute_matrix
from .labeling import LabelingError, VertexLabeling, from_json, parse_records, to_json, vertex_stretch
from .solver import SolverConfig, bfs_order, exact_bandwidth, exact_edge_bandwidth
from .sweep import MAX_SWEEP_VERTICES, verify_sweep
from . import transforms as tf

OPS = ("add-edge", "subdivide", "collapse", "contract", "expand", "to-vertex", "to-edge")


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _add_input(p: argparse.ArgumentParser, family_only: bool = False) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="generator spec, e.g. clique:8, theta:1,3,3,3, caterpillar:3,2,3")
    if family_only:
        return
    group.add_argument("--graph", type=Path, help="edge-list file ('p n m' then 'e u v' lines)")
    group.add_argument("--matrix", type=Path, help="Matrix Market symmetric pattern file")
    p.add_argument("--loops", action="store_true", help="keep diagonal matrix entries as loops")
    p.add_argument("--multigraph", action="store_true", help="keep repeated matrix entries as parallel edges")


def _add_solver(p: argparse.ArgumentParser) -> None:
    p.add_argument("--vertex-budget", type=_positive_int, default=16,
                   help="largest graph (line graph for edge-bandwidth) the exact solver accepts")
    p.add_argument("--time-budget-seconds", type=_positive_float, default=None)
    p.add_argument("--seed-upper-bound", type=int, default=None,
                   help="a known achievable stretch to try first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgeband", description="Bandwidth and edge-bandwidth of graphs.")
    parser.add_argument("--output", "-o", type=Path, help="write JSON here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="lower bounds on edge-bandwidth")
    _add_input(p)
    p.add_argument("--density-budget", type=int, default=DENSITY_BUDGET)
    p.add_argument("--boundary-budget", type=int, default=BOUNDARY_BUDGET)

    p = sub.add_parser("exact", help="exact bandwidth or edge-bandwidth")
    _add_input(p)
    _add_solver(p)
    p.add_argument("--kind", choices=("edge", "vertex"), default="edge")

    p = sub.add_parser("construct", help="closed-form optimal numbering of a family")
    _add_input(p, family_only=True)

    p = sub.add_parser("transform", help="carry a numbering through a graph operation")
    _add_input(p)
    _add_solver(p)
    p.add_argument("--op", choices=OPS, required=True)
    p.add_argument("--labeling", type=Path,
                   help="labeling file ('<index> <label>' lines or JSON); default: an optimal one")
    p.add_argument("--edge", type=int, help="edge id for subdivide, contract and expand")
    p.add_argument("--new-edge", type=int, nargs=2, metavar=("U", "V"), help="endpoints for add-edge")
    p.add_argument("--edges", type=int, nargs=2, metavar=("E1", "E2"), help="edge pair for collapse")

    p = sub.add_parser("verify", help="exhaustive property sweep over small connected graphs")
    p.add_argument("--max-vertices", type=int, default=5, choices=range(1, MAX_SWEEP_VERTICES + 1))
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("permute-matrix", help="reorder a sparse pattern by a vertex numbering")
    _add_input(p)
    _add_solver(p)
    p.add_argument("--labeling", type=Path, help="vertex labeling file; default: an optimal one")
    return parser


class CommandError(Exception):
    pass


def _load_graph(args) -> tuple[Graph, dict]:
    if args.family:
        return generate(FamilySpec.parse(args.family)), {}
    if args.graph:
        return parse_edge_list(args.graph.read_text()), {}
    return parse_matrix_pattern(args.matrix.read_text(), loops=args.loops, multigraph=args.multigraph)


def _load_labeling(path: Optional[Path], kind: str):
    text = path.read_text()
    if text.lstrip().startswith("{"):
        lab = from_json(text)
        if lab.kind != kind:
            raise CommandError(f"{path}: expected a {kind} labeling, got {lab.kind}")
        return lab
    return parse_records(text, kind)


def _config(args) -> SolverConfig:
    return SolverConfig(args.vertex_budget, args.time_budget_seconds, args.seed_upper_bound)


def _optimal(g: Graph, kind: str, cfg: SolverConfig):
    res = exact_edge_bandwidth(g, cfg) if kind == "edge" else exact_bandwidth(g, cfg)
    if not res.optimal:
        raise CommandError(f"no optimal {kind} labeling to start from: {res.reason}; pass --labeling")
    return res.labeling


def _graph_json(g: Graph) -> dict:
    return {"vertex_count": g.n, "edges": [list(e) for e in g.edges]}


def cmd_bounds(args) -> tuple[dict, bool]:
    g, warnings = _load_graph(args)
    report = lower_bound_report(g, args.density_budget, args.boundary_budget)
    return {**report.to_json(), "warnings": warnings}, True


def cmd_exact(args) -> tuple[dict, bool]:
    g, warnings = _load_graph(args)
    cfg = _config(args)
    res = exact_edge_bandwidth(g, cfg) if args.kind == "edge" else exact_bandwidth(g, cfg)
    out = {"kind": args.kind, "value": res.value, "optimal": res.optimal,
           "lower": res.lower, "upper": res.upper, "reason": res.reason, "warnings": warnings}
    if res.labeling is not None:
        out["labeling"] = to_json(g, res.labeling)
    return out, res.optimal


def cmd_construct(args) -> tuple[dict, bool]:
    result = construct(FamilySpec.parse(args.family))
    out = {
        "family": args.family,
        **_graph_json(result.graph),
        "labeling": to_json(result.graph, result.labeling),
        "claimed_value": result.claimed_value,
        "formula": result.formula_name,
        "upper_bound_only": result.upper_bound_only,
    }
    return out, True


def cmd_transform(args) -> tuple[dict, bool]:
    g, _ = _load_graph(args)
    cfg = _config(args)
    op = args.op
    in_kind = "vertex" if op == "to-edge" else "edge"

    def need(name):
        value = getattr(args, name)
        if value is None:
            raise CommandError(f"--op {op} needs --{name.replace('_', '-')}")
        return value

    if op == "expand":
        # the labeling belongs to the contraction of the input graph at --edge
        h, _, _ = tf.contract(g, need("edge"))
        labels = _load_labeling(args.labeling, "edge") if args.labeling else _optimal(h, "edge", cfg)
        outcome = tf.contract_insert(g, args.edge, labels)
    else:
        labels = _load_labeling(args.labeling, in_kind) if args.labeling else _optimal(g, in_kind, cfg)
        if op == "add-edge":
            u, v = need("new_edge")
            outcome = tf.add_edge_fold(g, labels, (u, v), multigraph=args.multigraph)
        elif op == "subdivide":
            outcome = tf.subdivide_lift(g, labels, need("edge"))
        elif op == "collapse":
            e1, e2 = need("edges")
            outcome = tf.subdivision_collapse(g, labels, e1, e2)
        elif op == "contract":
            outcome = tf.contract_delete(g, labels, need("edge"))
        elif op == "to-vertex":
            outcome = tf.to_vertex_outcome(g, labels)
        else:
            outcome = tf.to_edge_outcome(g, labels)
    return {"op": op, **outcome.to_json()}, outcome.within_bound


def cmd_verify(args) -> tuple[dict, bool]:
    report = verify_sweep(args.max_vertices, args.seed)
    return report.to_json(), report.ok


def cmd_permute_matrix(args) -> tuple[dict, bool]:
    g, warnings = _load_graph(args)
    if args.labeling:
        labels = _load_labeling(args.labeling, "vertex")
    else:
        res = exact_bandwidth(g, _config(args))
        labels = res.labeling if res.labeling is not None else VertexLabeling.from_order(bfs_order(g))
    permuted = permute_matrix(g, labels)
    original = vertex_stretch(g, range(g.n))
    return {**permuted.to_json(), "original_band": original, "warnings": warnings}, True


COMMANDS = {
    "bounds": cmd_bounds,
    "exact": cmd_exact,
    "construct": cmd_construct,
    "transform": cmd_transform,
    "verify": cmd_verify,
    "permute-matrix": cmd_permute_matrix,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, ok = COMMANDS[args.command](args)
    except (CommandError, GraphError, FormatError, LabelingError, OSError) as exc:
        print(f"edgeband: error: {exc}", file=sys.stderr)
        return 2
    except (ConstructionError, tf.TransformError) as exc:
        # a numbering broke its own guarantee
        print(f"edgeband: check failed: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(payload, indent=2) + "\n"
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1
