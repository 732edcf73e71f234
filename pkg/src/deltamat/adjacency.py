"""Adjacency delta-matroids of graphs with optional single loops."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import DeltaMatroid, FormatError, MAX_GROUND, _check_names, iter_bits


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph without multi-edges; each vertex may carry one loop."""

    vertices: tuple[str, ...]
    edges: frozenset  # frozensets {u, v} with u != v
    loops: frozenset

    def __init__(self, vertices: Sequence[str], edges: Iterable[tuple[str, str]] = (),
                 loops: Iterable[str] = ()):
        vertices = _check_names(vertices)
        known = set(vertices)
        edge_set = set()
        for u, v in edges:
            if u not in known or v not in known:
                raise ValueError(f"edge {u}-{v} uses an unknown vertex")
            if u == v:
                raise ValueError(f"use a loop flag for {u}, not an edge")
            pair = frozenset((u, v))
            if pair in edge_set:
                raise ValueError(f"duplicate edge {u}-{v}")
            edge_set.add(pair)
        loop_set = set(loops)
        if loop_set - known:
            raise ValueError(f"loop on unknown vertex {sorted(loop_set - known)}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "loops", frozenset(loop_set))

    def rows(self) -> list[int]:
        """Adjacency matrix over GF(2) as bit rows (loops on the diagonal)."""
        index = {v: i for i, v in enumerate(self.vertices)}
        rows = [0] * len(self.vertices)
        for pair in self.edges:
            u, v = (index[x] for x in pair)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        for v in self.loops:
            rows[index[v]] |= 1 << index[v]
        return rows

    def remove_vertex(self, v: str) -> "SimpleGraph":
        return SimpleGraph([u for u in self.vertices if u != v],
                           [tuple(p) for p in self.edges if v not in p],
                           [u for u in self.loops if u != v])


def gf2_rank(rows: list[int]) -> int:
    rows = list(rows)
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
    return rank


def _principal_rows(rows: list[int], x: int) -> list[int]:
    idx = list(iter_bits(x))
    out = []
    for i in idx:
        r = rows[i]
        packed = 0
        for k, j in enumerate(idx):
            if r >> j & 1:
                packed |= 1 << k
        out.append(packed)
    return out


def _invertible(rows: list[int], x: int) -> bool:
    if x == 0:
        return True
    sub = _principal_rows(rows, x)
    return gf2_rank(sub) == len(sub)


def gf2_principal_invertible(G: SimpleGraph, X: Iterable[str] | int) -> bool:
    """Whether the principal submatrix A[X] is invertible over GF(2); true for X empty."""
    if isinstance(X, int):
        x = X
    else:
        index = {v: i for i, v in enumerate(G.vertices)}
        x = 0
        for v in X:
            x |= 1 << index[v]
    return _invertible(G.rows(), x)


def adjacency_dm(G: SimpleGraph) -> DeltaMatroid:
    n = len(G.vertices)
    if n > MAX_GROUND:
        raise ValueError(f"at most {MAX_GROUND} vertices supported")
    rows = G.rows()
    family = {0}
    family.update(x for x in range(1, 1 << n) if _invertible(rows, x))
    return DeltaMatroid.unchecked(G.vertices, family)


def parse_graph(text: str) -> SimpleGraph:
    vertices = None
    edges = []
    loops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise FormatError(f"line {lineno}: expected 'key: value'")
        key = key.strip()
        tokens = value.split()
        if key == "vertices":
            if vertices is not None:
                raise FormatError(f"line {lineno}: duplicate 'vertices' line")
            vertices = tokens
        elif key == "edge":
            if len(tokens) != 2:
                raise FormatError(f"line {lineno}: an edge needs two endpoints")
            edges.append(tuple(tokens))
        elif key == "loop":
            if len(tokens) != 1:
                raise FormatError(f"line {lineno}: a loop needs one vertex")
            if tokens[0] in loops:
                raise FormatError(f"line {lineno}: duplicate loop on {tokens[0]}")
            loops.append(tokens[0])
        else:
            raise FormatError(f"line {lineno}: unknown key {key!r}")
    if vertices is None:
        raise FormatError("missing 'vertices' line")
    try:
        return SimpleGraph(vertices, edges, loops)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_graph(G: SimpleGraph) -> str:
    index = {v: i for i, v in enumerate(G.vertices)}
    lines = ["vertices: " + " ".join(G.vertices)]
    pairs = sorted((sorted(p, key=index.__getitem__) for p in G.edges),
                   key=lambda p: (index[p[0]], index[p[1]]))
    lines += [f"edge: {u} {v}" for u, v in pairs]
    lines += [f"loop: {v}" for v in sorted(G.loops, key=index.__getitem__)]
    return "\n".join(lines) + "\n"
