"""Explicit edge numberings for cliques, bicliques, caterpillars and theta graphs.

Every result is evaluated before it is returned; a numbering whose stretch
disagrees with its claimed value raises :class:`ConstructionError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .families import FamilySpec, complete, complete_bipartite, generate, theta_paths
from .graph import Graph, GraphError, is_tree
from .labeling import EdgeLabeling, edge_stretch


class ConstructionError(AssertionError):
    pass


@dataclass(frozen=True)
class ConstructionResult:
    graph: Graph
    labeling: EdgeLabeling
    claimed_value: int
    formula_name: str
    upper_bound_only: bool = False

    @property
    def stretch(self) -> int:
        return edge_stretch(self.graph, self.labeling)

    @property
    def order(self) -> list[int]:
        return self.labeling.order()


def _finish(graph, order, claimed, name, upper_only=False) -> ConstructionResult:
    labeling = EdgeLabeling.from_order(order)
    got = edge_stretch(graph, labeling)
    if got > claimed or (not upper_only and got != claimed):
        raise ConstructionError(f"{name}: evaluated stretch {got}, claimed {claimed}")
    return ConstructionResult(graph, labeling, claimed, name, upper_only)


def clique_value(n: int) -> int:
    return n * n // 4 + (n + 1) // 2 - 2


def biclique_value(n: int) -> int:
    return n * (n + 1) // 2 - 1


def theta_value(m: int) -> int:
    """Edge-bandwidth of the theta graph with one direct edge and m - 1 paths of length 3."""
    return -(-(3 * m - 3) // 2)


def clique_order(n: int) -> list[tuple[int, int]]:
    """Optimal edge order of K_n as pairs of 1-based vertices.

    X = 1..ceil(n/2) takes the lowest labels in reverse lexicographic order
    (12, 13, 23, 14, ...); Y takes the highest in lexicographic order.
    Cross edges are placed by finishing vertices from the middle out: the
    edges of ceil(n/2) go to the top of the gap, the remaining edges of
    ceil(n/2)+1 to the bottom, then ceil(n/2)-1 on top, ceil(n/2)+2 at the
    bottom, and so on.  Top groups list Y ends in increasing order, bottom
    groups X ends in increasing order; pairs are written (larger, smaller).
    """
    if n < 2:
        raise GraphError("clique construction needs n >= 2")
    c = (n + 1) // 2
    xs = range(1, c + 1)
    ys = range(c + 1, n + 1)
    low = sorted(combinations(xs, 2), key=lambda e: (e[1], e[0]))
    high = sorted(combinations(ys, 2))
    placed = set()
    bottom: list[tuple[int, int]] = []
    top: list[tuple[int, int]] = []
    top_queue = list(range(c, 0, -1))
    bottom_queue = list(ys)
    to_top = True
    while top_queue or bottom_queue:
        if (to_top and top_queue) or not bottom_queue:
            x = top_queue.pop(0)
            group = [(y, x) for y in ys if (y, x) not in placed]
            top = group + top
        else:
            y = bottom_queue.pop(0)
            group = [(y, x) for x in xs if (y, x) not in placed]
            bottom.extend(group)
        placed.update(group)
        to_top = not to_top
    return low + bottom + top + high


def clique_labeling(n: int) -> ConstructionResult:
    g = complete(n)
    index = {e: i for i, e in enumerate(g.edges)}
    order = [index[(min(a, b) - 1, max(a, b) - 1)] for a, b in clique_order(n)]
    return _finish(g, order, clique_value(n), "clique floor(n^2/4)+ceil(n/2)-2")


def biclique_order(n: int) -> list[tuple[int, int]]:
    """Optimal edge order of K_{n,n} as (x index, y index) pairs, 1-based.

    Vertices are listed x1, y1, x2, y2, ..., xn, yn.  Turns alternate,
    starting at the front: a front turn finishes the next vertex of the
    list by appending its unplaced edges to earlier vertices to the
    prefix; a back turn finishes the next vertex from the end by
    prepending its unplaced edges to later vertices to the suffix.
    """
    if n < 1:
        raise GraphError("biclique construction needs n >= 1")
    seq = [(side, i) for i in range(1, n + 1) for side in ("x", "y")]

    def pair(a, b):
        return (a[1], b[1]) if a[0] == "x" else (b[1], a[1])

    placed = set()
    prefix: list[tuple[int, int]] = []
    suffix: list[tuple[int, int]] = []
    front, back = 0, len(seq) - 1
    from_front = True
    while len(placed) < n * n:
        if from_front:
            v = seq[front]
            group = [pair(v, u) for u in seq[:front] if u[0] != v[0]]
            group = [e for e in group if e not in placed]
            prefix.extend(group)
            front += 1
        else:
            v = seq[back]
            group = [pair(v, u) for u in seq[back + 1:] if u[0] != v[0]]
            group = [e for e in group if e not in placed]
            suffix[:0] = group
            back -= 1
        placed.update(group)
        from_front = not from_front
    return prefix + suffix


def biclique_labeling(n: int) -> ConstructionResult:
    g = complete_bipartite(n, n)
    order = [(x - 1) * n + (y - 1) for x, y in biclique_order(n)]
    return _finish(g, order, biclique_value(n), "biclique C(n+1,2)-1")


def caterpillar_spine(g: Graph) -> list[int]:
    """Non-leaf vertices of a caterpillar in path order (empty for K_1, K_2)."""
    if not is_tree(g):
        raise GraphError("not a caterpillar: graph is not a tree")
    inner = [v for v in range(g.n) if g.degree(v) >= 2]
    if not inner:
        return []
    inner_set = set(inner)
    nbrs = {v: sorted(w for w in g.adjacency[v] if w in inner_set) for v in inner}
    if any(len(x) > 2 for x in nbrs.values()):
        raise GraphError("not a caterpillar: non-leaf vertices do not form a path")
    ends = [v for v in inner if len(nbrs[v]) <= 1]
    spine = [min(ends)]
    while len(spine) < len(inner):
        nxt = [w for w in nbrs[spine[-1]] if w not in spine]
        spine.append(nxt[0])
    return spine


def caterpillar_labeling(g: Union[Graph, FamilySpec]) -> ConstructionResult:
    """Pendant edges of v1, then v1v2, pendant edges of v2, then v2v3, ..."""
    if isinstance(g, FamilySpec):
        g = generate(g)
    spine = caterpillar_spine(g)
    if not spine:
        order = list(range(g.m))
    else:
        order = []
        for i, v in enumerate(spine):
            for e in g.incidence[v]:
                if g.degree(g.other_end(e, v)) == 1:
                    order.append(e)
            if i + 1 < len(spine):
                w = spine[i + 1]
                order.append(next(e for e in g.incidence[v] if g.other_end(e, v) == w))
    delta = max((len(inc) for inc in g.incidence), default=0)
    return _finish(g, order, max(delta - 1, 0), "caterpillar max degree - 1")


def theta_labeling(spec: Union[FamilySpec, list, tuple]) -> ConstructionResult:
    """Edge orders for the three theta shapes with known numberings.

    With m paths in total:

    * one edge e and m - 1 paths a_i b_i c_i: a's, b_1..b_{ceil(m/2)-1},
      e, the remaining b's, c's; exact value ceil((3m - 3) / 2);
    * one edge e and m - 1 paths a_i b_i: a's, e, b's; at most m;
    * one path d e of length 2 and m - 1 paths a_i b_i c_i: a's, d, b's,
      e, c's; at most m.
    """
    lengths = tuple(spec.params if isinstance(spec, FamilySpec) else spec)
    if isinstance(spec, FamilySpec) and spec.kind != "theta":
        raise GraphError(f"expected a theta family, got {spec.kind}")
    m = len(lengths)
    g = generate(FamilySpec("theta", lengths))
    paths = theta_paths(lengths)
    shape = sorted(lengths)
    if m < 2:
        raise GraphError("theta construction needs at least two paths")
    special = [p for p, length in zip(paths, lengths) if length != max(shape)]
    long = [p for p, length in zip(paths, lengths) if length == max(shape)]
    if shape == [1] + [3] * (m - 1):
        (e,) = special[0]
        a = [p[0] for p in long]
        b = [p[1] for p in long]
        c = [p[2] for p in long]
        cut = (m + 1) // 2 - 1
        order = a + b[:cut] + [e] + b[cut:] + c
        return _finish(g, order, theta_value(m), "theta(1,3,...,3) ceil((3m-3)/2)")
    if shape == [1] + [2] * (m - 1):
        (e,) = special[0]
        order = [p[0] for p in long] + [e] + [p[1] for p in long]
        return _finish(g, order, m, "theta(1,2,...,2) upper bound m", upper_only=True)
    if shape == [2] + [3] * (m - 1):
        d, e = special[0]
        order = [p[0] for p in long] + [d] + [p[1] for p in long] + [e] + [p[2] for p in long]
        return _finish(g, order, m, "theta(2,3,...,3) upper bound m", upper_only=True)
    raise GraphError(f"no known numbering for theta{lengths}")


def construct(spec: FamilySpec) -> ConstructionResult:
    """Dispatch a family spec to its construction."""
    if spec.kind == "complete":
        return clique_labeling(spec.params[0])
    if spec.kind == "complete_bipartite":
        a, b = spec.params
        if a != b:
            raise GraphError("only equipartite bicliques have a construction")
        return biclique_labeling(a)
    if spec.kind == "theta":
        return theta_labeling(spec)
    if spec.kind in ("caterpillar", "star", "double_star", "path"):
        return caterpillar_labeling(generate(spec))
    raise GraphError(f"no construction for family {spec.kind}")
