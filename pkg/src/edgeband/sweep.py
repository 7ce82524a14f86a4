"""Exhaustive cross-checks over all small connected simple graphs.

Each property is run on every connected graph with at most
``max_vertices`` vertices (taken from the networkx graph atlas) and
tallied separately; the first failing graph is kept as a counterexample.
Exact values are cached by edge list, so the many derived graphs
(additions, subdivisions, contractions) are solved once each.
"""

from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Callable, Optional

import networkx as nx

from .bounds import lower_bound_report
from .constructions import clique_value
from .graph import Graph, line_graph
from .labeling import edge_stretch, vertex_stretch
from .solver import SolverConfig, brute_force_bandwidth, exact_bandwidth, exact_edge_bandwidth
from .transforms import (
    TransformError,
    add_edge,
    add_edge_fold,
    contract,
    contract_delete,
    contract_insert,
    edge_to_vertex,
    forest_bound,
    subdivide,
    subdivide_lift,
    subdivision_collapse,
    to_edge_outcome,
    vertex_to_edge_forests,
)

MAX_SWEEP_VERTICES = 6
_CONFIG = SolverConfig(vertex_budget=21)


@lru_cache(maxsize=None)
def atlas_graphs(max_vertices: int) -> tuple[Graph, ...]:
    """Connected simple graphs on 1..max_vertices vertices, one per isomorphism class."""
    if not 1 <= max_vertices <= MAX_SWEEP_VERTICES:
        raise ValueError(f"max_vertices must be in 1..{MAX_SWEEP_VERTICES}")
    out = []
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= max_vertices and nx.is_connected(h):
            edges = tuple(sorted((min(a, b), max(a, b)) for a, b in h.edges()))
            out.append(Graph(h.number_of_nodes(), edges))
    return tuple(out)


class ExactCache:
    def __init__(self):
        self._edge: dict = {}
        self._vertex: dict = {}

    def edge(self, g: Graph):
        key = (g.n, g.edges)
        if key not in self._edge:
            res = exact_edge_bandwidth(g, _CONFIG)
            assert res.optimal, res.reason
            self._edge[key] = res
        return self._edge[key]

    def vertex(self, g: Graph):
        key = (g.n, g.edges)
        if key not in self._vertex:
            res = exact_bandwidth(g, _CONFIG)
            assert res.optimal, res.reason
            self._vertex[key] = res
        return self._vertex[key]


@dataclass
class PropertyResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_counterexample: Optional[dict] = None

    def record(self, ok: bool, detail: Callable[[], dict]):
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.first_counterexample is None:
            self.first_counterexample = detail()

    def to_json(self) -> dict:
        return {"passed": self.passed, "failed": self.failed,
                "first_counterexample": self.first_counterexample}


@dataclass
class SweepReport:
    max_vertices: int
    graph_count: int
    properties: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(p.failed == 0 for p in self.properties.values())

    def to_json(self) -> dict:
        return {
            "max_vertices": self.max_vertices,
            "graphs": self.graph_count,
            "ok": self.ok,
            "properties": {k: v.to_json() for k, v in self.properties.items()},
        }


PROPERTIES = (
    "line_graph_incidence",
    "stretch_matches_line_graph",
    "exact_matches_brute_force",
    "bounds_below_edge_bandwidth",
    "vertex_bandwidth_below_edge_bandwidth",
    "edge_to_vertex_within_edge_bandwidth",
    "forest_numbering_bound",
    "add_edge_sandwich",
    "subdivide_sandwich",
    "contract_sandwich",
    "add_edge_fold_doubles_at_most",
    "transform_guarantees",
    "edge_deletion_monotone",
    "clique_formula",
)


def _desc(g: Graph, **extra) -> dict:
    return {"vertex_count": g.n, "edges": [list(e) for e in g.edges], **extra}


def _non_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adjacency[u]]


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _check_graph(g: Graph, cache: ExactCache, rng: random.Random, props: dict) -> None:
    rec = {name: props[name].record for name in PROPERTIES}
    lg, _ = line_graph(g)
    incident = all(
        (v in lg.adjacency[u]) == bool(set(g.edges[u]) & set(g.edges[v]))
        for u in range(g.m) for v in range(g.m) if u != v
    )
    rec["line_graph_incidence"](incident, lambda: _desc(g))

    f = list(range(1, g.m + 1))
    rng.shuffle(f)
    rec["stretch_matches_line_graph"](edge_stretch(g, f) == vertex_stretch(lg, f),
                                      lambda: _desc(g, labels=f))

    vb = cache.vertex(g)
    eb = cache.edge(g)
    brute_v, _ = brute_force_bandwidth(g)
    same = vb.value == brute_v
    if lg.n <= 9:
        same = same and eb.value == brute_force_bandwidth(lg)[0]
    rec["exact_matches_brute_force"](same, lambda: _desc(g, exact=eb.value, vertex_exact=vb.value))

    if g.m:
        report = lower_bound_report(g)
        worst = {b.name: b.value for b in report.entries if b.value is not None and b.value > eb.value}
        rec["bounds_below_edge_bandwidth"](not worst, lambda: _desc(g, exact=eb.value, exceeded=worst))

    rec["vertex_bandwidth_below_edge_bandwidth"](vb.value <= eb.value,
                                                 lambda: _desc(g, vertex=vb.value, edge=eb.value))
    if g.m:
        gl = edge_to_vertex(g, eb.labeling)
        got = vertex_stretch(g, gl)
        rec["edge_to_vertex_within_edge_bandwidth"](
            got <= eb.value, lambda: _desc(g, edge_labels=list(eb.labeling), vertex_labels=list(gl),
                                           stretch=got, edge_bandwidth=eb.value))

        fl, t = vertex_to_edge_forests(g, vb.labeling)
        got = edge_stretch(g, fl)
        rec["forest_numbering_bound"](got <= forest_bound(t, vb.value),
                                      lambda: _desc(g, forests=t, stretch=got, vertex_bandwidth=vb.value))

    # one added edge between existing non-adjacent vertices
    for u, v in _non_edges(g):
        h = add_edge(g, u, v)
        bh = cache.edge(h).value
        rec["add_edge_sandwich"](eb.value <= bh <= 2 * eb.value,
                                 lambda: _desc(g, added=[u, v], before=eb.value, after=bh))
        try:
            out = add_edge_fold(g, eb.labeling, (u, v))
            rec["transform_guarantees"](True, dict)
            rec["add_edge_fold_doubles_at_most"](
                out.stretch <= 2 * eb.value,
                lambda: _desc(g, labels=list(eb.labeling), added=[u, v], stretch=out.stretch,
                              input_stretch=eb.value))
        except TransformError as exc:
            rec["transform_guarantees"](False, lambda: _desc(g, op="add-edge", added=[u, v], error=str(exc)))

    for e in range(g.m):
        # subdivision: G -> H, and the collapse back
        h = subdivide(g, e)
        bh_res = cache.edge(h)
        bh = bh_res.value
        delta = bh % 2
        lower = -(-(2 * eb.value + delta) // 3)
        rec["subdivide_sandwich"](lower <= bh <= eb.value + 1,
                                  lambda: _desc(g, subdivided=e, before=eb.value, after=bh))
        # contraction: G -> H
        c, _, _ = contract(g, e)
        bc_res = cache.edge(c)
        bc = bc_res.value
        rec["contract_sandwich"](eb.value - 1 <= bc <= 2 * eb.value - 1,
                                 lambda: _desc(g, contracted=e, before=eb.value, after=bc))
        # deleting an edge never increases edge-bandwidth
        rest = Graph(g.n, g.edges[:e] + g.edges[e + 1:])
        br = cache.edge(rest).value
        rec["edge_deletion_monotone"](br <= eb.value, lambda: _desc(g, deleted=e, before=eb.value, after=br))

        steps = (
            ("subdivide", lambda: subdivide_lift(g, eb.labeling, e)),
            ("collapse", lambda: subdivision_collapse(h, bh_res.labeling, e, h.m - 1)),
            ("contract", lambda: contract_delete(g, eb.labeling, e)),
            ("expand", lambda: contract_insert(g, e, bc_res.labeling)),
        )
        for op, run in steps:
            try:
                run()
                rec["transform_guarantees"](True, dict)
            except TransformError as exc:
                rec["transform_guarantees"](False, lambda: _desc(g, op=op, edge=e, error=str(exc)))
    if g.m:
        try:
            to_edge_outcome(g, vb.labeling)
            rec["transform_guarantees"](True, dict)
        except TransformError as exc:
            rec["transform_guarantees"](False, lambda: _desc(g, op="to-edge", error=str(exc)))

    # the closed form gives -1 on K_1, which has no edges to number
    if _is_complete(g) and g.n >= 2:
        rec["clique_formula"](eb.value == clique_value(g.n),
                              lambda: _desc(g, exact=eb.value, formula=clique_value(g.n)))


def verify_sweep(max_vertices: int = 5, seed: int = 0, cache: Optional[ExactCache] = None) -> SweepReport:
    """Run every property on every connected graph up to ``max_vertices``.

    The seed only drives the random numberings used for the stretch
    comparison, and every graph draws from its own generator seeded by
    its position in the atlas, so the tallies do not depend on it.
    """
    graphs = atlas_graphs(max_vertices)
    cache = cache or ExactCache()
    props = {name: PropertyResult(name) for name in PROPERTIES}
    for i, g in enumerate(graphs):
        _check_graph(g, cache, random.Random(f"{seed}:{i}"), props)
    return SweepReport(max_vertices, len(graphs), props)
