"""Lower bounds on edge-bandwidth, each with the witness that certifies it.

All four bounds are computed on the line graph implicitly, using bitmasks
over edge ids:

* degree: the edges at one vertex are pairwise incident, so the
  labels at a vertex with d edges span at least d - 1.
* star: whichever edge gets the smallest label, every edge incident
  to it sits above it.
* density: for a connected edge set H, the extreme labels of H are
  joined by a path of at most diam(L(H)) incident steps.
* boundary: the k smallest labels form some set F, and the edges just
  outside F must come right after it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError, component_subgraphs

DENSITY_BUDGET = 12
BOUNDARY_BUDGET = 16


@dataclass(frozen=True)
class Bound:
    name: str
    value: Optional[int]
    certificate: dict = field(default_factory=dict)

    @property
    def skipped(self) -> bool:
        return self.value is None


def _line_masks(g: Graph) -> list[int]:
    masks = [0] * g.m
    for inc in g.incidence:
        bits = 0
        for e in inc:
            bits |= 1 << e
        for e in inc:
            masks[e] |= bits
    for e in range(g.m):
        masks[e] &= ~(1 << e)
    return masks


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def degree_bound(g: Graph) -> Bound:
    """Most edges at a single vertex, minus one.

    Counts distinct edges, so a loop adds one (not two) to the clique it
    forms with the other edges at its vertex.
    """
    if g.m == 0:
        return Bound("degree", 0, {"vertex": None})
    v = max(range(g.n), key=lambda x: (len(g.incidence[x]), -x))
    return Bound("degree", max(len(g.incidence[v]) - 1, 0), {"vertex": v})


def star_bound(g: Graph) -> Bound:
    """Least number of edges incident to a single edge.

    On simple graphs this is min over uv of d(u) + d(v) - 2; parallel edges
    are counted once.
    """
    if g.m == 0:
        raise GraphError("star bound needs at least one edge")
    masks = _line_masks(g)
    e = min(range(g.m), key=lambda i: (masks[i].bit_count(), i))
    return Bound("star", masks[e].bit_count(), {"edge": e})


def _eccentricity(start: int, subset: int, masks: list[int]) -> Optional[int]:
    """Eccentricity of ``start`` inside the line subgraph on ``subset``; None if disconnected."""
    seen = 1 << start
    frontier = seen
    depth = 0
    while True:
        nxt = 0
        for e in _bits(frontier):
            nxt |= masks[e]
        nxt &= subset & ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
        depth += 1
    return depth if seen == subset else None


def _line_diameter(subset: int, masks: list[int]) -> Optional[int]:
    best = 0
    for e in _bits(subset):
        ecc = _eccentricity(e, subset, masks)
        if ecc is None:
            return None
        best = max(best, ecc)
    return best


def _density_value(size: int, diam: int) -> int:
    if size <= 1:
        return 0
    return -(-(size - 1) // diam)


def density_bound(g: Graph, subgraph_budget: int = DENSITY_BUDGET) -> Bound:
    """Best ceil((e(H) - 1) / diam(L(H))) over a searched family of edge sets H.

    The family always holds each component, the edges at each vertex, and
    each edge together with its incident edges.  Components with at most
    ``subgraph_budget`` edges are searched over every connected edge set.
    Every H tried is a genuine subgraph, so the result is a valid bound.
    """
    best = Bound("density", 0, {"edges": [], "diameter": 0})
    for comp in component_subgraphs(g):
        h = comp.graph
        if h.m == 0:
            continue
        masks = _line_masks(h)
        candidates = []
        if h.m <= subgraph_budget:
            candidates = range(1, 1 << h.m)
        else:
            candidates = [(1 << h.m) - 1]
            for inc in h.incidence:
                candidates.append(sum(1 << e for e in inc))
            for e in range(h.m):
                candidates.append(masks[e] | 1 << e)
        for subset in candidates:
            size = subset.bit_count()
            if size <= 1:
                continue
            diam = _line_diameter(subset, masks)
            if diam is None:
                continue
            value = _density_value(size, diam)
            if value > best.value:
                best = Bound("density", value, {
                    "edges": [comp.edge_ids[e] for e in _bits(subset)],
                    "diameter": diam,
                })
    return best


def density_of(g: Graph, edge_ids) -> int:
    """ceil((e(H) - 1) / diam(L(H))) for one connected edge set H of ``g``."""
    masks = _line_masks(g)
    subset = sum(1 << e for e in set(edge_ids))
    diam = _line_diameter(subset, masks)
    if diam is None:
        raise GraphError("edge set is not connected")
    return _density_value(subset.bit_count(), diam)


def edge_boundary(g: Graph, edge_ids) -> list[int]:
    """Edges outside ``edge_ids`` that share an endpoint with one inside."""
    inside = set(edge_ids)
    verts = {v for e in inside for v in g.edges[e]}
    return sorted({e for v in verts for e in g.incidence[v]} - inside)


def boundary_bound(g: Graph, size_budget: int = BOUNDARY_BUDGET) -> Bound:
    """max over k of min over |F| = k of |boundary(F)|, by full enumeration.

    Graphs with more than ``size_budget`` edges are not attempted and get a
    skipped bound (value None); a heuristic minimum could overshoot and
    make the bound unsound.
    """
    m = g.m
    if m > size_budget:
        return Bound("boundary", None, {"reason": f"{m} edges exceed the budget of {size_budget}"})
    if m == 0:
        return Bound("boundary", 0, {"k": 0, "F": []})
    masks = _line_masks(g)
    reach = [0] * (1 << m)
    best_by_k = [None] * (m + 1)
    arg_by_k = [0] * (m + 1)
    best_by_k[0] = 0
    for mask in range(1, 1 << m):
        low = mask & -mask
        reach[mask] = reach[mask ^ low] | masks[low.bit_length() - 1]
        size = (reach[mask] & ~mask).bit_count()
        k = mask.bit_count()
        if best_by_k[k] is None or size < best_by_k[k]:
            best_by_k[k] = size
            arg_by_k[k] = mask
    k = max(range(m + 1), key=lambda j: (best_by_k[j], -j))
    return Bound("boundary", best_by_k[k], {"k": k, "F": _bits(arg_by_k[k])})


@dataclass(frozen=True)
class BoundReport:
    degree: Bound
    star: Bound
    density: Bound
    boundary: Bound

    @property
    def entries(self) -> list[Bound]:
        return [self.degree, self.star, self.density, self.boundary]

    @property
    def overall(self) -> int:
        return max((b.value for b in self.entries if b.value is not None), default=0)

    def to_json(self) -> dict:
        out = {b.name: ("skipped" if b.skipped else b.value) for b in self.entries}
        out["overall"] = self.overall
        out["certificates"] = {b.name: b.certificate for b in self.entries}
        return out


def _lift(bound: Bound, comp) -> Bound:
    """Rewrite a component-local certificate in the parent's ids."""
    cert = dict(bound.certificate)
    if cert.get("vertex") is not None:
        cert["vertex"] = comp.vertices[cert["vertex"]]
    if "edge" in cert and cert["edge"] is not None:
        cert["edge"] = comp.edge_ids[cert["edge"]]
    if "F" in cert:
        cert["F"] = [comp.edge_ids[e] for e in cert["F"]]
    return Bound(bound.name, bound.value, cert)


def lower_bound_report(g: Graph, density_budget: int = DENSITY_BUDGET,
                       boundary_budget: int = BOUNDARY_BUDGET) -> BoundReport:
    """All bounds, each maximised over the components of ``g``."""
    comps = [c for c in component_subgraphs(g) if c.graph.m > 0]
    if not comps:
        zero = {name: Bound(name, 0, {}) for name in ("degree", "star", "density", "boundary")}
        return BoundReport(**zero)

    def best(bounds: list[Bound], name: str) -> Bound:
        done = [b for b in bounds if b.value is not None]
        if not done:
            return bounds[0]
        top = max(done, key=lambda b: b.value)
        if len(done) < len(bounds):
            cert = dict(top.certificate, skipped_components=len(bounds) - len(done))
            return Bound(name, top.value, cert)
        return top

    return BoundReport(
        degree=best([_lift(degree_bound(c.graph), c) for c in comps], "degree"),
        star=best([_lift(star_bound(c.graph), c) for c in comps], "star"),
        density=density_bound(g, density_budget),
        boundary=best([_lift(boundary_bound(c.graph, boundary_budget), c) for c in comps], "boundary"),
    )
