"""Edge and vertex labelings and the stretch they achieve.

The stretch of an edge labeling is the largest label gap between two
edges sharing an endpoint; for a vertex labeling it is the largest gap
across an edge.  Labels may be any distinct integers; the canonical form
ranks them onto 1..k.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Union

from .graph import Graph


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class _Labeling:
    labels: tuple[int, ...]

    kind = ""

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise LabelingError(f"{self.kind} labels are not distinct: {_first_duplicate(self.labels)} repeats")

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def __iter__(self):
        return iter(self.labels)

    def is_canonical(self) -> bool:
        return sorted(self.labels) == list(range(1, len(self.labels) + 1))

    def canonical(self):
        return type(self)(canonicalize(self.labels))

    def order(self) -> list[int]:
        """Item ids sorted by label (the numbering as a sequence)."""
        return sorted(range(len(self.labels)), key=self.labels.__getitem__)

    @classmethod
    def from_order(cls, order: Sequence[int]):
        """Label ``order[i]`` with ``i + 1``."""
        labels = [0] * len(order)
        for i, item in enumerate(order):
            labels[item] = i + 1
        return cls(labels)


class EdgeLabeling(_Labeling):
    kind = "edge"


class VertexLabeling(_Labeling):
    kind = "vertex"


LabelsLike = Union[_Labeling, Sequence[int]]


def _first_duplicate(labels):
    seen = set()
    for x in labels:
        if x in seen:
            return x
        seen.add(x)
    return None


def _checked(labels: LabelsLike, expected: int, what: str) -> tuple[int, ...]:
    labels = tuple(labels)
    if len(labels) != expected:
        raise LabelingError(f"{what} labeling has {len(labels)} labels, graph needs {expected}")
    if len(set(labels)) != len(labels):
        raise LabelingError(f"{what} labels are not distinct: {_first_duplicate(labels)} repeats")
    return labels


def edge_stretch(g: Graph, f: LabelsLike) -> int:
    """Largest |f(e) - f(e')| over edges sharing an endpoint (0 if none do)."""
    labels = _checked(f, g.m, "edge")
    best = 0
    for inc in g.incidence:
        if len(inc) > 1:
            vals = [labels[e] for e in inc]
            best = max(best, max(vals) - min(vals))
    return best


def vertex_stretch(g: Graph, gl: LabelsLike) -> int:
    """Largest |g(u) - g(v)| over edges uv; loops contribute nothing."""
    labels = _checked(gl, g.n, "vertex")
    return max((abs(labels[a] - labels[b]) for a, b in g.edges), default=0)


def canonicalize(labeling: LabelsLike):
    """Rank-map distinct labels onto 1..k, keeping their order.

    Returns the same type it was given (a labeling object or a tuple).
    """
    labels = tuple(labeling)
    if len(set(labels)) != len(labels):
        raise LabelingError(f"cannot canonicalize: {_first_duplicate(labels)} repeats")
    rank = {x: i + 1 for i, x in enumerate(sorted(labels))}
    out = tuple(rank[x] for x in labels)
    if isinstance(labeling, _Labeling):
        return type(labeling)(out)
    return out


def format_records(labeling: LabelsLike) -> str:
    """One ``<index> <label>`` line per item."""
    return "".join(f"{i} {x}\n" for i, x in enumerate(labeling))


def parse_records(text: str, kind: str = "edge") -> _Labeling:
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise LabelingError(f"line {lineno}: expected '<index> <label>', got {raw!r}")
        try:
            idx, label = int(parts[0]), int(parts[1])
        except ValueError:
            raise LabelingError(f"line {lineno}: non-integer field in {raw!r}") from None
        if idx in pairs:
            raise LabelingError(f"line {lineno}: index {idx} listed twice")
        pairs[idx] = label
    if sorted(pairs) != list(range(len(pairs))):
        raise LabelingError("labeling indices must cover 0..k-1 exactly")
    cls = EdgeLabeling if kind == "edge" else VertexLabeling
    return cls([pairs[i] for i in range(len(pairs))])


def to_json(g: Graph, labeling: _Labeling, **extra) -> dict:
    if isinstance(labeling, EdgeLabeling):
        stretch = edge_stretch(g, labeling)
    else:
        stretch = vertex_stretch(g, labeling)
    return {"kind": labeling.kind, "labels": list(labeling.labels), "stretch": stretch, **extra}


def from_json(data: Union[str, dict]) -> _Labeling:
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    if kind not in ("edge", "vertex"):
        raise LabelingError(f"unknown labeling kind {kind!r}")
    cls = EdgeLabeling if kind == "edge" else VertexLabeling
    return cls(data["labels"])


def revalidate(g: Graph, data: dict) -> bool:
    """True when the ``stretch`` recorded in a labeling JSON matches re-evaluation."""
    lab = from_json(data)
    actual = edge_stretch(g, lab) if lab.kind == "edge" else vertex_stretch(g, lab)
    return actual == data["stretch"]
