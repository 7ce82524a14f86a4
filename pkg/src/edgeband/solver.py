"""Exact bandwidth and edge-bandwidth.

``exact_bandwidth`` answers "is there an ordering with stretch <= k?" by a
left-to-right placement search and narrows k by bisection between a
trivial lower bound and a breadth-first upper bound.  A partial placement
is cut as soon as the unplaced vertices cannot all meet their deadlines:
a vertex at distance d from a vertex placed at position p must sit at or
before p + d*k.  Failed states are memoised on the placed set plus the
last k positions, which fully determine the rest of the search.

The returned certificate is the lexicographically least optimal vertex
order (position -> vertex), the same tie-break ``brute_force_bandwidth``
uses.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .graph import Graph, GraphError, line_graph
from .labeling import EdgeLabeling, VertexLabeling, edge_stretch, vertex_stretch

BRUTE_FORCE_LIMIT = 9


class SolverTimeout(Exception):
    pass


@dataclass(frozen=True)
class SolverConfig:
    vertex_budget: int = 16
    time_budget: Optional[float] = None
    initial_upper_bound: Optional[int] = None

    def __post_init__(self):
        if self.vertex_budget <= 0:
            raise ValueError("vertex_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    ``optimal`` is False when a budget stopped the search; ``value`` is then
    None and ``lower``/``upper`` bracket the optimum, with ``labeling``
    witnessing ``upper`` when one was found.
    """

    value: Optional[int]
    labeling: Optional[object]
    optimal: bool
    lower: int
    upper: Optional[int]
    reason: str = ""

    def __iter__(self):
        yield self.value
        yield self.labeling


def brute_force_bandwidth(g: Graph) -> tuple[int, VertexLabeling]:
    """Try every vertex order; keep the first (lexicographically least) optimum."""
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise GraphError(f"brute force is capped at {BRUTE_FORCE_LIMIT} vertices, got {n}")
    edges = [(a, b) for a, b in g.edges if a != b]
    best, best_order = None, tuple(range(n))
    for order in permutations(range(n)):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        width = 0
        for a, b in edges:
            d = abs(pos[a] - pos[b])
            if d > width:
                width = d
                if best is not None and width >= best:
                    break
        if best is None or width < best:
            best, best_order = width, order
    return best or 0, VertexLabeling.from_order(best_order)


def _masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for v, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            adj[v] |= 1 << w
    return adj


def _all_distances(g: Graph) -> list[list[int]]:
    inf = math.inf
    out = []
    for s in range(g.n):
        dist = [inf] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adjacency[u]:
                if dist[w] == inf:
                    dist[w] = dist[u] + 1
                    q.append(w)
        out.append(dist)
    return out


class _Search:
    def __init__(self, g: Graph, deadline: Optional[float]):
        self.n = g.n
        self.adj = _masks(g)
        self.dist = _all_distances(g)
        self.deadline = deadline
        self.nodes = 0

    def feasible(self, k: int, symmetric: bool) -> Optional[list[int]]:
        """Least vertex order with stretch <= k, or None.

        With ``symmetric`` set, only orders placing vertex 0 in the first
        ceil(n/2) positions are explored; every order or its reversal
        qualifies, so the yes/no answer is unchanged.
        """
        n, adj, dist = self.n, self.adj, self.dist
        full = (1 << n) - 1
        half = (n + 1) // 2
        order: list[int] = []
        failed: set = set()

        def rec(placed: int) -> bool:
            i = len(order)
            if i == n:
                return True
            self.nodes += 1
            if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
                raise SolverTimeout
            if symmetric and i >= half and not placed & 1:
                return False
            unplaced = full & ~placed
            lo = max(0, i - k)
            window = tuple(u if adj[u] & unplaced else -1 for u in order[lo:i])
            key = (placed, window)
            if key in failed:
                return False
            # deadlines of unplaced vertices, driven by placed vertices that
            # still have unplaced neighbours
            due = {}
            for off, u in enumerate(window):
                if u < 0:
                    continue
                p = lo + off
                du = dist[u]
                w_bits = unplaced
                while w_bits:
                    low = w_bits & -w_bits
                    w = low.bit_length() - 1
                    w_bits ^= low
                    d = du[w]
                    if d != math.inf:
                        t = p + d * k
                        if t < due.get(w, n):
                            due[w] = t
            candidates = None
            if due:
                ranked = sorted(due.values())
                for j, t in enumerate(ranked):
                    if t < i + j:
                        failed.add(key)
                        return False
                    if t == i + j and candidates is None:
                        candidates = sorted(w for w, tw in due.items() if tw <= t)
            if candidates is None:
                candidates = [w for w in range(n) if unplaced >> w & 1]
            for v in candidates:
                order.append(v)
                if rec(placed | 1 << v):
                    return True
                order.pop()
            failed.add(key)
            return False

        return list(order) if rec(0) else None


def bfs_order(g: Graph) -> list[int]:
    """Cuthill-McKee style order: BFS from a least-degree vertex per component."""
    seen = [False] * g.n
    out = []
    deg = [len(g.adjacency[v]) for v in range(g.n)]
    for s in sorted(range(g.n), key=lambda v: (deg[v], v)):
        if seen[s]:
            continue
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            out.append(u)
            for w in sorted(g.adjacency[u], key=lambda v: (deg[v], v)):
                if not seen[w]:
                    seen[w] = True
                    q.append(w)
    return out


def _trivial_lower_bound(g: Graph) -> int:
    # a vertex with d neighbours needs them within d positions on one side or the other
    return max(((len(a) + 1) // 2 for a in g.adjacency), default=0)


def exact_bandwidth(g: Graph, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """Minimum vertex stretch with a certificate ordering."""
    if g.n > cfg.vertex_budget:
        return SolveResult(None, None, False, _trivial_lower_bound(g), None,
                           f"{g.n} vertices exceed the budget of {cfg.vertex_budget}")
    if g.n == 0:
        return SolveResult(0, VertexLabeling(()), True, 0, 0)
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
    search = _Search(g, deadline)

    heuristic = VertexLabeling.from_order(bfs_order(g))
    hi = vertex_stretch(g, heuristic)
    best = heuristic
    lo = _trivial_lower_bound(g)
    try:
        seed = cfg.initial_upper_bound
        if seed is not None and lo <= seed < hi:
            if search.feasible(seed, True) is not None:
                hi = seed
                best = None
            else:
                lo = seed + 1
        while lo < hi:
            mid = (lo + hi) // 2
            if search.feasible(mid, True) is not None:
                hi, best = mid, None
            else:
                lo = mid + 1
        order = search.feasible(hi, False)
    except SolverTimeout:
        return SolveResult(None, best, False, lo, hi if best is not None else None,
                           "time budget exhausted")
    labeling = VertexLabeling.from_order(order)
    assert vertex_stretch(g, labeling) == hi
    return SolveResult(hi, labeling, True, hi, hi)


def exact_edge_bandwidth(g: Graph, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """Edge-bandwidth via the bandwidth of the line graph."""
    if g.m > cfg.vertex_budget:
        return SolveResult(None, None, False, 0, None,
                           f"{g.m} edges exceed the budget of {cfg.vertex_budget}")
    lg, edge_to_line = line_graph(g)
    res = exact_bandwidth(lg, cfg)
    if res.labeling is None:
        return res
    labeling = EdgeLabeling([res.labeling[edge_to_line[e]] for e in range(g.m)])
    if res.optimal:
        assert edge_stretch(g, labeling) == res.value
    return SolveResult(res.value, labeling, res.optimal, res.lower, res.upper, res.reason)
