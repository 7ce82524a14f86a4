"""Constructive conversions between labelings, and labelings under edge operations.

Edge numberings become vertex numberings (least-edge walks on graphs of
minimum degree 2, root-edge labels on trees, and the two glued together
by degree-1 peeling).  Vertex numberings become edge numberings through a
forest decomposition.  Adding, subdividing, collapsing, contracting and
un-contracting an edge each carry an edge numbering across, with the
stretch guarantee instantiated from the input numbering.

Edge operations return a :class:`TransformOutcome` whose labeling is
canonical; ``raw_labels`` keeps the numbering as first produced.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .graph import Graph, GraphError, component_subgraphs, is_connected, is_tree, peel_degree_one
from .labeling import EdgeLabeling, VertexLabeling, canonicalize, edge_stretch, vertex_stretch


class TransformError(AssertionError):
    pass


@dataclass(frozen=True)
class TransformOutcome:
    graph: Graph
    labeling: Union[EdgeLabeling, VertexLabeling]
    raw_labels: tuple[int, ...]
    guaranteed_bound: int
    input_stretch: int
    edge_map: tuple[Optional[int], ...] = ()

    @property
    def stretch(self) -> int:
        if isinstance(self.labeling, EdgeLabeling):
            return edge_stretch(self.graph, self.labeling)
        return vertex_stretch(self.graph, self.labeling)

    @property
    def within_bound(self) -> bool:
        return self.stretch <= self.guaranteed_bound

    def to_json(self) -> dict:
        return {
            "vertex_count": self.graph.vertex_count,
            "edges": [list(e) for e in self.graph.edges],
            "kind": self.labeling.kind,
            "labels": list(self.labeling.labels),
            "raw_labels": list(self.raw_labels),
            "stretch": self.stretch,
            "input_stretch": self.input_stretch,
            "guaranteed_bound": self.guaranteed_bound,
            "within_bound": self.within_bound,
        }


def _outcome(graph, raw, bound, input_stretch, edge_map=()) -> TransformOutcome:
    raw = tuple(raw)
    out = TransformOutcome(graph, EdgeLabeling(canonicalize(raw)), raw, bound, input_stretch, tuple(edge_map))
    if not out.within_bound:
        raise TransformError(f"stretch {out.stretch} exceeds the guaranteed {bound}")
    return out


def _canonical_edges(g: Graph, f) -> tuple[int, ...]:
    labels = tuple(f)
    if len(labels) != g.m:
        raise GraphError(f"labeling has {len(labels)} labels, graph has {g.m} edges")
    return canonicalize(labels)


# edge numbering -> vertex numbering


def edge_to_vertex_mindeg2(g: Graph, f) -> VertexLabeling:
    """Label vertices of a graph with minimum degree 2 by least-edge walks.

    Each phase starts at the least unlabeled vertex.  The active vertex
    takes the smallest label among its unused edges, that edge becomes
    used, and the walk moves across it; the phase stops on reaching a
    labeled vertex.  Every vertex ends up with the label of an incident
    edge, and adjacent vertices differ by at most the stretch of ``f``.
    """
    labels = tuple(f)
    if len(labels) != g.m:
        raise GraphError(f"labeling has {len(labels)} labels, graph has {g.m} edges")
    low = [v for v in range(g.n) if g.degree(v) < 2]
    if low:
        raise GraphError(f"vertex {low[0]} has degree {g.degree(low[0])} < 2")
    out: list[Optional[int]] = [None] * g.n
    used = [False] * g.m
    for start in range(g.n):
        active = start
        while out[active] is None:
            free = [e for e in g.incidence[active] if not used[e]]
            if not free:
                raise GraphError(f"walk stalled at vertex {active}")
            e = min(free, key=labels.__getitem__)
            out[active] = labels[e]
            used[e] = True
            active = g.other_end(e, active)
    return VertexLabeling(out)


def edge_to_vertex_tree(t: Graph, f) -> VertexLabeling:
    """Label tree vertices by the edge leading towards the least-labeled edge.

    ``f`` is canonicalised first, so the root edge uv carries label 1.
    Every other vertex takes the label of its first edge on the way to uv.
    Of u and v, the end away from the largest label next to uv drops to 0
    (u when uv has no neighbouring edges).
    """
    if not is_tree(t) or t.m == 0:
        raise GraphError("edge_to_vertex_tree needs a tree with at least one edge")
    labels = _canonical_edges(t, f)
    root = labels.index(1)
    u, v = t.edges[root]
    out: list[Optional[int]] = [None] * t.n
    out[u] = out[v] = 1
    queue = deque([u, v])
    while queue:
        x = queue.popleft()
        for e in t.incidence[x]:
            y = t.other_end(e, x)
            if out[y] is None:
                out[y] = labels[e]
                queue.append(y)
    side_u = [labels[e] for e in t.incidence[u] if e != root]
    side_v = [labels[e] for e in t.incidence[v] if e != root]
    if side_u and max(side_u) > max(side_v, default=0):
        out[v] = 0
    else:
        out[u] = 0
    return VertexLabeling(out)


def _edge_to_vertex_connected(g: Graph, f: tuple[int, ...]) -> list[int]:
    if is_tree(g):
        return list(edge_to_vertex_tree(g, f).labels)
    core, peeled = peel_degree_one(g)
    core_f = [f[e] for e in core.edge_ids]
    core_labels = edge_to_vertex_mindeg2(core.graph, core_f)
    out: list[Optional[int]] = [None] * g.n
    for i, v in enumerate(core.vertices):
        out[v] = core_labels[i]
    for x, e in reversed(peeled):
        out[x] = f[e]
    return out


def edge_to_vertex(g: Graph, f) -> VertexLabeling:
    """Vertex numbering whose stretch is at most that of the edge numbering ``f``.

    Trees go through :func:`edge_to_vertex_tree`.  Otherwise degree-1
    vertices are peeled, the core is labeled by
    :func:`edge_to_vertex_mindeg2`, and peeled vertices come back in
    reverse order with the label of their attachment edge.

    A disconnected graph is handled per component; components are then
    shifted into disjoint label ranges, so labels are no longer f-labels.
    Stretch <= stretch(f) fails only for a single-edge component, which has
    edge stretch 0 but needs vertex stretch 1.
    """
    labels = tuple(f)
    if len(labels) != g.m:
        raise GraphError(f"labeling has {len(labels)} labels, graph has {g.m} edges")
    if g.m == 0 and g.n <= 1:
        return VertexLabeling(range(1, g.n + 1))
    if is_connected(g):
        return VertexLabeling(_edge_to_vertex_connected(g, labels))
    out = [0] * g.n
    offset = 0
    for comp in component_subgraphs(g):
        if comp.graph.m == 0:
            local = [1]
        else:
            local = _edge_to_vertex_connected(comp.graph, [labels[e] for e in comp.edge_ids])
        shift = offset - min(local) + 1
        for i, v in enumerate(comp.vertices):
            out[v] = local[i] + shift
        offset = max(out[v] for v in comp.vertices)
    return VertexLabeling(out)


# vertex numbering -> edge numbering


def forest_decomposition(g: Graph) -> list[list[int]]:
    """Split the edges into forests by repeatedly taking a maximal spanning forest.

    Each round grows a depth-first spanning forest of the remaining edges
    (roots and neighbours in id order).  Depth-first trees are long and
    thin, which leaves the rest sparse; this reaches the arboricity far
    more often than scanning edges in id order (K_4 splits into two
    paths, not a star plus a triangle), though it can still exceed it.
    """
    if g.has_loops():
        raise GraphError("a loop cannot belong to any forest")
    remaining = list(range(g.m))
    forests = []
    while remaining:
        inc: list[list[int]] = [[] for _ in range(g.n)]
        for e in remaining:
            a, b = g.edges[e]
            inc[a].append(e)
            inc[b].append(e)
        seen = [False] * g.n
        forest = []
        for root in range(g.n):
            if seen[root]:
                continue
            seen[root] = True
            stack = [(root, iter(inc[root]))]
            while stack:
                x, pending = stack[-1]
                for e in pending:
                    y = g.other_end(e, x)
                    if not seen[y]:
                        seen[y] = True
                        forest.append(e)
                        stack.append((y, iter(inc[y])))
                        break
                else:
                    stack.pop()
        forests.append(sorted(forest))
        used = set(forest)
        remaining = [e for e in remaining if e not in used]
    return forests


def vertex_to_edge_forests(g: Graph, gl) -> tuple[EdgeLabeling, int]:
    """Edge numbering f(e) = t * gl(v(e)) + i from a vertex numbering.

    Forest i (1-based) of the greedy decomposition is rooted at the least
    vertex of each component; v(e) is the end of e farther from the root.
    With t forests the edge stretch is at most 2t * stretch(gl) + t - 1.
    """
    vlabels = tuple(gl)
    if len(vlabels) != g.n:
        raise GraphError(f"labeling has {len(vlabels)} labels, graph has {g.n} vertices")
    if len(set(vlabels)) != len(vlabels):
        raise GraphError("vertex labels are not distinct")
    forests = forest_decomposition(g)
    t = len(forests)
    out = [0] * g.m
    for i, forest in enumerate(forests, 1):
        inc: dict[int, list[int]] = {}
        for e in forest:
            for x in g.edges[e]:
                inc.setdefault(x, []).append(e)
        seen = set()
        for root in sorted(inc):
            if root in seen:
                continue
            seen.add(root)
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for e in inc[x]:
                    y = g.other_end(e, x)
                    if y not in seen:
                        seen.add(y)
                        out[e] = t * vlabels[y] + i
                        queue.append(y)
    return EdgeLabeling(out), t


def forest_bound(t: int, vertex_stretch_value: int) -> int:
    return 2 * t * vertex_stretch_value + t - 1


# graph operations


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """``g`` plus edge (u, v) as the last edge; ids >= n create new vertices."""
    top = max(u, v)
    n = g.n
    if min(u, v) < 0:
        raise GraphError("negative vertex id")
    fresh = {x for x in (u, v) if x >= n}
    if fresh and fresh != set(range(n, top + 1)):
        raise GraphError(f"new vertices must be numbered from {n} without gaps")
    return Graph(max(n, top + 1), g.edges + ((u, v),))


def subdivide(g: Graph, e: int) -> Graph:
    """Replace edge e = (a, b) by (a, w) at id e and (w, b) appended, w = n."""
    if not 0 <= e < g.m:
        raise GraphError(f"no edge {e}")
    a, b = g.edges[e]
    w = g.n
    edges = list(g.edges)
    edges[e] = (a, w)
    edges.append((w, b))
    return Graph(g.n + 1, tuple(edges))


def contract(g: Graph, e: int) -> tuple[Graph, list[int], list[Optional[int]]]:
    """Contract edge e, keeping loops and parallel edges.

    The merged vertex keeps the smaller id; the larger id is removed and
    later ids shift down.  Returns the new graph and the vertex and edge id
    maps (``None`` for the contracted edge).
    """
    if not 0 <= e < g.m:
        raise GraphError(f"no edge {e}")
    u, v = g.edges[e]
    if u == v:
        raise GraphError("cannot contract a loop")
    keep, drop = min(u, v), max(u, v)
    vmap = [x if x < drop else x - 1 for x in range(g.n)]
    vmap[drop] = keep
    emap: list[Optional[int]] = []
    edges = []
    for j, (a, b) in enumerate(g.edges):
        if j == e:
            emap.append(None)
            continue
        emap.append(len(edges))
        edges.append((vmap[a], vmap[b]))
    return Graph(g.n - 1, tuple(edges)), vmap, emap


# edge operations carrying a numbering


def _insert_above(labels: Sequence[int], anchor_label: int) -> tuple[list[int], int]:
    shifted = [x + 1 if x > anchor_label else x for x in labels]
    return shifted, anchor_label + 1


def add_edge_fold(g: Graph, f, new_edge: tuple[int, int], multigraph: bool = False) -> TransformOutcome:
    """Number g + e from a numbering of g.

    * e touches no edge of g: e goes on top, stretch unchanged.
    * only one end of e touches g (or e sees a single edge): e goes just
      above the least label at that end, everything above moves up by one;
      stretch grows by at most 1.
    * otherwise, with p and q the least and largest labels next to e and
      r = floor((p + q) / 2), the order is folded at r so that labels p
      and q become adjacent, and e is put just below them at q - p.
      Folding doubles label gaps, and the inserted e adds one more to
      pairs on either side of it, so the guarantee is 2s + 1.  (P_4
      numbered (2, 1, 3) plus the edge (0, 2) reaches 3 = 2s + 1.)  On a
      matching (s = 0) e still sits two below one of its neighbours, so
      the guarantee never drops under 2.
    """
    u, v = new_edge
    labels = _canonical_edges(g, f)
    s = edge_stretch(g, labels)
    h = add_edge(g, u, v)
    if not multigraph:
        if u == v:
            raise GraphError("loops need multigraph=True")
        if u < g.n and v in g.adjacency[u]:
            raise GraphError(f"edge ({u}, {v}) already present; set multigraph=True")
    m = g.m
    ends = [x for x in {u, v} if x < g.n and g.incidence[x]]
    near = sorted({labels[e] for x in ends for e in g.incidence[x]})
    emap = list(range(m))
    if not near:
        return _outcome(h, list(labels) + [m + 1], s, s, emap)
    if len(ends) == 1 or near[0] == near[-1]:
        anchor = min(labels[e] for e in g.incidence[ends[0]])
        raw, new = _insert_above(labels, anchor)
        return _outcome(h, raw + [new], s + 1, s, emap)
    p, q = near[0], near[-1]
    r = (p + q) // 2
    raw = []
    for j in labels:
        if r < j < q:
            raw.append(2 * (j - r))
        elif q <= j:
            raw.append(2 * (j - r) + 1)
        elif p < j <= r:
            raw.append(2 * (r - j) + 1)
        else:
            raw.append(2 * (r - j) + 2)
    raw.append(q - p)
    return _outcome(h, raw, max(2 * s + 1, 2), s, emap)


def subdivide_lift(g: Graph, f, edge: int) -> TransformOutcome:
    """Subdivide ``edge``; its halves take labels t and t + 1, labels above t move up."""
    labels = _canonical_edges(g, f)
    s = edge_stretch(g, labels)
    h = subdivide(g, edge)
    t = labels[edge]
    raw = [x + 1 if x > t else x for x in labels] + [t + 1]
    return _outcome(h, raw, s + 1, s, list(range(g.m)))


def _collapse_vertex(h: Graph, e1: int, e2: int) -> int:
    if e1 == e2 or not (0 <= e1 < h.m and 0 <= e2 < h.m):
        raise GraphError("need two distinct edge ids")
    shared = [w for w in set(h.edges[e1]) & set(h.edges[e2])
              if h.degree(w) == 2 and set(h.incidence[w]) == {e1, e2}]
    if not shared:
        raise GraphError(f"edges {e1} and {e2} do not meet at a vertex of degree 2")
    return max(shared)


def subdivision_collapse(h: Graph, f, e1: int, e2: int) -> TransformOutcome:
    """Undo a subdivision: merge the two edges at a degree-2 vertex w.

    With p < q the labels of the two halves and r = floor((p + q) / 2),
    labels in (p, r] and above q drop by one, those in (r, q) stay, and
    the merged edge takes r.  The merged edge keeps the smaller of the two
    ids; w is removed and later vertex ids shift down.
    """
    labels = _canonical_edges(h, f)
    s = edge_stretch(h, labels)
    w = _collapse_vertex(h, e1, e2)
    a = h.other_end(e1, w)
    b = h.other_end(e2, w)
    keep, gone = min(e1, e2), max(e1, e2)
    p, q = sorted((labels[e1], labels[e2]))
    r = (p + q) // 2

    def vid(x):
        return x - 1 if x > w else x

    edges, raw, emap = [], [], []
    for j, (x, y) in enumerate(h.edges):
        if j == gone:
            emap.append(emap[keep])
            continue
        emap.append(len(edges))
        if j == keep:
            edges.append((vid(a), vid(b)))
            raw.append(r)
            continue
        edges.append((vid(x), vid(y)))
        lab = labels[j]
        if p < lab <= r or lab > q:
            lab -= 1
        raw.append(lab)
    g = Graph(h.n - 1, tuple(edges))
    return _outcome(g, raw, (3 * s) // 2, s, emap)


def contract_delete(g: Graph, f, edge: int) -> TransformOutcome:
    """Contract ``edge`` and drop its label, closing the gap.

    Guarantee 2s - 1 for input stretch s >= 1; with s = 0 (a matching) the
    other edges stay pairwise non-incident and the guarantee is 0.
    """
    labels = _canonical_edges(g, f)
    s = edge_stretch(g, labels)
    h, _, emap = contract(g, edge)
    cut = labels[edge]
    raw = [x - 1 if x > cut else x for j, x in enumerate(labels) if j != edge]
    return _outcome(h, raw, max(2 * s - 1, 0), s, emap)


def contract_insert(g: Graph, edge: int, f_h) -> TransformOutcome:
    """Number ``g`` from a numbering of its contraction at ``edge``.

    The contracted edge goes just above the least label at the merged
    vertex (on top if that vertex has no edges); stretch grows by at most 1.
    """
    h, vmap, emap = contract(g, edge)
    labels_h = _canonical_edges(h, f_h)
    s = edge_stretch(h, labels_h)
    w = vmap[g.edges[edge][0]]
    at_w = [labels_h[e] for e in h.incidence[w]]
    anchor = min(at_w) if at_w else h.m
    raw = []
    for j in range(g.m):
        if j == edge:
            raw.append(anchor + 1)
        else:
            x = labels_h[emap[j]]
            raw.append(x + 1 if x > anchor else x)
    back = [None] * h.m
    for j, k in enumerate(emap):
        if k is not None:
            back[k] = j
    return _outcome(g, raw, s + 1, s, back)


def to_vertex_outcome(g: Graph, f) -> TransformOutcome:
    """:func:`edge_to_vertex` packaged with its guarantee stretch(f)."""
    s = edge_stretch(g, f)
    gl = edge_to_vertex(g, f)
    return TransformOutcome(g, canonicalize(gl), gl.labels, s, s)


def to_edge_outcome(g: Graph, gl) -> TransformOutcome:
    """:func:`vertex_to_edge_forests` packaged with its guarantee 2ts + t - 1."""
    s = vertex_stretch(g, gl)
    f, t = vertex_to_edge_forests(g, gl)
    return _outcome(g, f.labels, max(forest_bound(t, s), 0), s)
