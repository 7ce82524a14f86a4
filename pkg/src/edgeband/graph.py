"""Undirected multigraphs with positional edge identities.

Edge ``i`` of a :class:`Graph` is ``graph.edges[i]``; loops ``(v, v)`` and
parallel edges are ordinary entries.  Everything else in the package
(labelings, bounds, solvers, transforms) refers to edges by that index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
import heapq
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or queries a graph cannot answer."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError(f"negative vertex count {self.vertex_count}")
        for i, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise GraphError(
                    f"edge {i} = ({a}, {b}) has an endpoint outside 0..{self.vertex_count - 1}"
                )

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids touching each vertex; a loop is listed once."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (a, b) in enumerate(self.edges):
            inc[a].append(i)
            if b != a:
                inc[b].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets, ignoring multiplicity and loops."""
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    def degree(self, v: int) -> int:
        """Degree of ``v``; loops count twice."""
        return sum(2 if self.edges[e][0] == self.edges[e][1] else 1 for e in self.incidence[v])

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.edges)

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                return False
            seen.add(key)
        return True

    def edges_incident(self, e: int, f: int) -> bool:
        """True when distinct edges ``e`` and ``f`` share an endpoint."""
        return e != f and bool(set(self.edges[e]) & set(self.edges[f]))


@dataclass(frozen=True)
class Subgraph:
    """A graph carved out of a parent, with maps back to the parent's ids."""

    graph: Graph
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...] = field(default=())


def make_graph(vertex_count: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    edges = tuple((int(a), int(b)) for a, b in edge_pairs)
    return Graph(vertex_count, edges)


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def edge_degree(g: Graph, v: int) -> int:
    """Number of distinct edges at ``v`` (a loop counts once)."""
    return len(g.incidence[v])


def max_edge_degree(g: Graph) -> int:
    return max((len(i) for i in g.incidence), default=0)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d >= 0]
        for v in comp:
            seen[v] = True
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def diameter(g: Graph) -> int:
    if g.n == 0:
        return 0
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            raise GraphError("diameter of a disconnected graph is undefined; split it with components() first")
        best = max(best, max(dist))
    return best


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and not g.has_loops() and is_connected(g)


def induced_on_edges(g: Graph, edge_ids: Iterable[int]) -> Subgraph:
    """Subgraph formed by the given edges and the vertices they touch.

    Vertex and edge order follow the parent's ids.
    """
    edge_ids = tuple(sorted(set(edge_ids)))
    verts = sorted({v for e in edge_ids for v in g.edges[e]})
    index = {v: i for i, v in enumerate(verts)}
    sub = Graph(len(verts), tuple((index[g.edges[e][0]], index[g.edges[e][1]]) for e in edge_ids))
    return Subgraph(sub, tuple(verts), edge_ids)


def induced_on_vertices(g: Graph, vertices: Iterable[int]) -> Subgraph:
    """Subgraph on ``vertices`` keeping every edge with both ends inside."""
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    keep = [i for i, (a, b) in enumerate(g.edges) if a in index and b in index]
    sub = Graph(len(verts), tuple((index[g.edges[e][0]], index[g.edges[e][1]]) for e in keep))
    return Subgraph(sub, tuple(verts), tuple(keep))


def component_subgraphs(g: Graph) -> list[Subgraph]:
    return [induced_on_vertices(g, comp) for comp in components(g)]


def line_graph(g: Graph) -> tuple[Graph, list[int]]:
    """Line graph of ``g`` and the map edge id -> line-vertex id.

    Line vertex ``i`` stands for edge ``i``.  Two line vertices are joined
    when their edges share an endpoint; parallel edges give one line edge,
    loops give no self-adjacency.  The result is always simple.
    """
    pairs = set()
    for inc in g.incidence:
        for a, b in combinations(inc, 2):
            pairs.add((a, b) if a < b else (b, a))
    return Graph(g.m, tuple(sorted(pairs))), list(range(g.m))


def peel_degree_one(g: Graph) -> tuple[Subgraph, list[tuple[int, int]]]:
    """Repeatedly strip degree-1 vertices.

    Returns the remaining core (as a :class:`Subgraph` of ``g``) and the
    removal order as ``(vertex, attachment_edge)`` pairs.  The least
    degree-1 vertex is always removed first.  When a component shrinks to a
    single edge both of its ends are emitted with that edge, the second
    entry being the vertex that was still attached, so a tree peels away
    completely.  Replaying the order backwards rebuilds ``g``: each
    vertex comes back together with its attachment edge, except the first
    vertex restored from such a final pair, which comes back bare.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive_edge = [True] * g.m
    removed = [False] * g.n
    heap = [v for v in range(g.n) if deg[v] == 1]
    heapq.heapify(heap)
    order: list[tuple[int, int]] = []
    while heap:
        v = heapq.heappop(heap)
        if removed[v] or deg[v] != 1:
            continue
        e = next(i for i in g.incidence[v] if alive_edge[i])
        u = g.other_end(e, v)
        alive_edge[e] = False
        removed[v] = True
        order.append((v, e))
        deg[v] = 0
        deg[u] -= 1
        if deg[u] == 0:
            removed[u] = True
            order.append((u, e))
        elif deg[u] == 1:
            heapq.heappush(heap, u)
    core_vertices = [v for v in range(g.n) if not removed[v]]
    return induced_on_vertices(g, core_vertices), order
