"""Parametric graph families and their generators.

Vertex and edge orders are fixed so that constructions can refer to them:

* ``path n``: vertices 0..n-1, edge i = (i, i+1).
* ``cycle n``: the path plus the closing edge (n-1, 0).
* ``complete n``: edges (i, j), i < j, in lexicographic order.
* ``complete_bipartite a b``: parts 0..a-1 and a..a+b-1, edges grouped by
  the first-part vertex.
* ``caterpillar c_1..c_s``: spine vertices 0..s-1; edges run along the
  spine as pendants of spine vertex 0, spine edge (0, 1), pendants of 1,
  and so on.  Leaves are numbered s, s+1, ... in edge order.
* ``star k`` is ``caterpillar [k]``; ``double_star k`` is ``caterpillar [k, k]``.
* ``theta l_1..l_m``: the shared ends are vertices 0 and 1; path i is
  listed edge by edge from 0 to 1, paths in input order, internal
  vertices numbered 2, 3, ... as they appear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError

KINDS = (
    "path",
    "cycle",
    "star",
    "complete",
    "complete_bipartite",
    "caterpillar",
    "theta",
    "double_star",
)

_ALIASES = {"clique": "complete", "biclique": "complete_bipartite", "doublestar": "double_star"}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]
    multigraph: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown family {self.kind!r}")
        p = self.params
        if self.kind == "caterpillar":
            if not p or any(c < 0 for c in p):
                raise GraphError("caterpillar needs a non-empty list of pendant counts >= 0")
            return
        if self.kind == "complete_bipartite":
            if len(p) != 2:
                raise GraphError("complete_bipartite takes two part sizes")
        elif self.kind == "theta":
            if not p:
                raise GraphError("theta needs at least one path length")
            if p.count(1) > 1 and not self.multigraph:
                raise GraphError("two theta paths of length 1 are parallel edges; set multigraph=True")
        elif len(p) != 1:
            raise GraphError(f"{self.kind} takes exactly one size parameter")
        if any(x < 1 for x in p):
            raise GraphError(f"{self.kind} parameters must be >= 1, got {p}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``kind:a,b,...`` such as ``clique:8`` or ``theta:1,3,3,3``."""
        kind, _, rest = text.strip().partition(":")
        kind = kind.strip().lower().replace("-", "_")
        kind = _ALIASES.get(kind, kind)
        try:
            params = tuple(int(x) for x in rest.replace(" ", "").split(",") if x)
        except ValueError as exc:
            raise GraphError(f"bad family parameters in {text!r}") from exc
        if kind == "complete_bipartite" and len(params) == 1:
            params = params * 2
        return cls(kind, params)

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"


def path(n: int) -> Graph:
    return generate(FamilySpec("path", (n,)))


def cycle(n: int) -> Graph:
    return generate(FamilySpec("cycle", (n,)))


def star(k: int) -> Graph:
    return generate(FamilySpec("star", (k,)))


def complete(n: int) -> Graph:
    return generate(FamilySpec("complete", (n,)))


def complete_bipartite(a: int, b: int) -> Graph:
    return generate(FamilySpec("complete_bipartite", (a, b)))


def caterpillar(pendants) -> Graph:
    return generate(FamilySpec("caterpillar", tuple(pendants)))


def double_star(k: int) -> Graph:
    return generate(FamilySpec("double_star", (k,)))


def theta(lengths, multigraph: bool = False) -> Graph:
    return generate(FamilySpec("theta", tuple(lengths), multigraph))


def generate(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind == "path":
        n = p[0]
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        n = p[0]
        if n < 3 and not spec.multigraph:
            raise GraphError("cycles shorter than 3 need multigraph=True")
        if n == 1:
            return Graph(1, ((0, 0),))
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((n - 1, 0),))
    if kind == "complete":
        n = p[0]
        return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))
    if kind == "complete_bipartite":
        a, b = p
        return Graph(a + b, tuple((x, a + y) for x in range(a) for y in range(b)))
    if kind == "star":
        return _caterpillar((p[0],))
    if kind == "double_star":
        return _caterpillar((p[0], p[0]))
    if kind == "caterpillar":
        return _caterpillar(p)
    if kind == "theta":
        return _theta(p)
    raise GraphError(f"unknown family {kind!r}")  # pragma: no cover


def _caterpillar(pendants: tuple[int, ...]) -> Graph:
    s = len(pendants)
    edges = []
    nxt = s
    for i, c in enumerate(pendants):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
        if i + 1 < s:
            edges.append((i, i + 1))
    return Graph(nxt, tuple(edges))


def _theta(lengths: tuple[int, ...]) -> Graph:
    edges = []
    nxt = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, tuple(edges))


def theta_paths(lengths) -> list[list[int]]:
    """Edge ids of each theta path, listed from vertex 0 towards vertex 1."""
    out, start = [], 0
    for length in lengths:
        out.append(list(range(start, start + length)))
        start += length
    return out
