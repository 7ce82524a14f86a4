"""Reading and writing graphs: the edge-list format and Matrix Market patterns.

Edge lists look like::

    # comment
    p 4 3
    e 0 1
    e 1 2
    e 2 3

with 0-based vertex ids.  Matrix files are coordinate-format symmetric
patterns with 1-based entries; each stored entry (i, j) is one edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .labeling import VertexLabeling, vertex_stretch

MATRIX_HEADER = "%%MatrixMarket matrix coordinate pattern symmetric"


class FormatError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _fields(raw: str, comment: str) -> list[tuple[int, str]]:
    """Split a line into (1-based column, token) pairs, dropping comments."""
    body = raw.split(comment, 1)[0]
    out = []
    col = 0
    for token in body.split():
        col = body.index(token, col)
        out.append((col + 1, token))
        col += len(token)
    return out


def _int(token: tuple[int, str], lineno: int, what: str) -> int:
    col, text = token
    try:
        value = int(text)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {text!r}", lineno, col) from None
    if value < 0:
        raise FormatError(f"{what} must be non-negative, got {value}", lineno, col)
    return value


def parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        fields = _fields(raw, "#")
        if not fields:
            continue
        col, tag = fields[0]
        if tag == "p":
            if header is not None:
                raise FormatError("second 'p' header", lineno, col)
            if len(fields) != 3:
                raise FormatError("expected 'p <vertex_count> <edge_count>'", lineno, col)
            header = (_int(fields[1], lineno, "vertex count"), _int(fields[2], lineno, "edge count"))
        elif tag == "e":
            if header is None:
                raise FormatError("edge before the 'p' header", lineno, col)
            if len(fields) != 3:
                raise FormatError("expected 'e <u> <v>'", lineno, col)
            ends = []
            for token in fields[1:]:
                x = _int(token, lineno, "vertex")
                if x >= header[0]:
                    raise FormatError(f"vertex {x} out of range for {header[0]} vertices", lineno, token[0])
                ends.append(x)
            if len(edges) == header[1]:
                raise FormatError(f"more than the {header[1]} declared edges", lineno, col)
            edges.append((ends[0], ends[1]))
        else:
            raise FormatError(f"unknown record type {tag!r}", lineno, col)
    if header is None:
        raise FormatError("missing 'p' header", max(1, len(text.splitlines())))
    if len(edges) != header[1]:
        raise FormatError(f"declared {header[1]} edges, found {len(edges)}", max(1, len(text.splitlines())))
    return Graph(header[0], tuple(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"] + [f"e {a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


def parse_matrix_pattern(text: str, loops: bool = False, multigraph: bool = False) -> tuple[Graph, dict]:
    """Graph of a symmetric pattern matrix, plus warning counts.

    An entry above the diagonal is read as its mirror image.  Diagonal
    entries are dropped unless ``loops`` is set; repeated entries are
    merged unless ``multigraph`` is set.  Warnings count what was dropped
    or merged: ``{"diagonal": k, "duplicate": k}``.
    """
    lines = text.splitlines()
    if not lines or lines[0].lower().split() != MATRIX_HEADER.lower().split():
        raise FormatError(f"header must be {MATRIX_HEADER!r}", 1)
    warnings = {"diagonal": 0, "duplicate": 0}
    size = None
    edges: list[tuple[int, int]] = []
    seen: set = set()
    count = 0
    for lineno, raw in enumerate(lines[1:], 2):
        if raw.lstrip().startswith("%"):
            continue
        fields = _fields(raw, "%")
        if not fields:
            continue
        if size is None:
            if len(fields) != 3:
                raise FormatError("expected '<rows> <cols> <entries>'", lineno)
            rows, cols, nnz = (_int(t, lineno, "size") for t in fields)
            if rows != cols:
                raise FormatError(f"symmetric matrix must be square, got {rows}x{cols}", lineno)
            size = (rows, nnz)
            continue
        if len(fields) != 2:
            raise FormatError("pattern entry needs exactly 'i j'", lineno, fields[0][0])
        i, j = (_int(t, lineno, "index") for t in fields)
        for (col, _), x in zip(fields, (i, j)):
            if not 1 <= x <= size[0]:
                raise FormatError(f"index {x} outside 1..{size[0]}", lineno, col)
        count += 1
        a, b = min(i, j) - 1, max(i, j) - 1
        if a == b and not loops:
            warnings["diagonal"] += 1
            continue
        if (a, b) in seen and not multigraph:
            warnings["duplicate"] += 1
            continue
        seen.add((a, b))
        edges.append((a, b))
    if size is None:
        raise FormatError("missing size line", len(lines))
    if count != size[1]:
        raise FormatError(f"declared {size[1]} entries, found {count}", len(lines))
    return Graph(size[0], tuple(edges)), warnings


def format_matrix_pattern(g: Graph) -> str:
    """Lower-triangle entries, one per edge, in edge order."""
    lines = [MATRIX_HEADER, f"{g.n} {g.n} {g.m}"]
    lines += [f"{max(a, b) + 1} {min(a, b) + 1}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PermutedMatrix:
    """Row/column order given by a vertex numbering, and the resulting band."""

    permutation: tuple[int, ...]
    band: int

    def to_json(self) -> dict:
        return {"permutation": list(self.permutation), "band": self.band}


def permute_matrix(g: Graph, gl) -> PermutedMatrix:
    """Order rows by label; the band is the widest off-diagonal entry after permuting."""
    labels = VertexLabeling(tuple(gl))
    if len(labels) != g.n:
        raise ValueError(f"labeling has {len(labels)} labels, graph has {g.n} vertices")
    order = tuple(labels.order())
    pos = {v: i for i, v in enumerate(order)}
    band = max((abs(pos[a] - pos[b]) for a, b in g.edges), default=0)
    assert band == vertex_stretch(g, labels.canonical())
    return PermutedMatrix(order, band)
