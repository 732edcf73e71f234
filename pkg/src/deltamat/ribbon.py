"""Ribbon graphs as signed rotation systems.

Each edge ``e`` is a band ``[0,1] x [0,1]`` in coordinates ``(u, v)``.  It is
glued to a vertex disc along its end ``u = k`` (the edge-end token ``(e, k)``)
and has two long sides, ``v = 0`` and ``v = 1``.  A vertex rotation lists the
edge-end tokens met when walking the disc boundary counter-clockwise.  With
the convention that this walk crosses end 0 in the direction of increasing
``v``, a ``+`` edge is crossed with decreasing ``v`` at end 1 and a ``-``
(twisted) edge with increasing ``v``.

Boundary components of a spanning ribbon subgraph ``(V, A)`` are traced as
cyclic sequences of tokens:

* ``("end", e, k, dir)``: the walk passes the end ``(e, k)`` of an edge not in
  A along a vertex arc, ``dir = +1`` counter-clockwise, ``-1`` clockwise;
* ``("side", e, s, k)``: the walk runs along side ``v = s`` of an edge in A,
  from end ``k`` to end ``1 - k``.

Every component is met once in each direction; only one is kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .core import CapExceeded, DeltaMatroid, FormatError, iter_bits, twist
from .interlace import is_interlaced

MAX_GRAPHIC_EDGES = 20

Dart = tuple  # (edge label, end index)


class RibbonGraph:
    __slots__ = ("vertices", "edges", "rotations", "signs", "_where")

    def __init__(self, vertices: Sequence[str], rotations: Mapping[str, Sequence[Dart]],
                 signs: Mapping[str, int], edges: Sequence[str] | None = None,
                 require_connected: bool = True):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        self.edges = tuple(edges) if edges is not None else tuple(signs)
        if set(self.edges) != set(signs) or len(set(self.edges)) != len(self.edges):
            raise ValueError("every edge needs exactly one sign")
        self.signs = {e: int(signs[e]) for e in self.edges}
        if any(s not in (1, -1) for s in self.signs.values()):
            raise ValueError("edge signs must be +1 or -1")
        if set(rotations) - set(self.vertices):
            raise ValueError("rotation given for an unknown vertex")
        self.rotations = {v: tuple((e, int(k)) for e, k in rotations.get(v, ())) for v in self.vertices}
        where = {}
        for v, rot in self.rotations.items():
            for idx, (e, k) in enumerate(rot):
                if e not in self.signs:
                    raise ValueError(f"unknown edge {e!r} in rotation of {v!r}")
                if k not in (0, 1) or (e, k) in where:
                    raise ValueError(f"edge end {e}:{k} placed twice or invalid")
                where[(e, k)] = (v, idx)
        for e in self.edges:
            if (e, 0) not in where or (e, 1) not in where:
                raise ValueError(f"edge {e!r} must have both ends placed")
        self._where = where
        if require_connected and not self.is_connected():
            raise ValueError("ribbon graph is disconnected")

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            parent[find(self._where[(e, 0)][0])] = find(self._where[(e, 1)][0])
        return len({find(v) for v in self.vertices}) == 1

    def vertex_of(self, dart: Dart) -> str:
        return self._where[dart][0]

    def edge_mask(self, A: Iterable[str] | int) -> int:
        if isinstance(A, int):
            if A >> len(self.edges):
                raise ValueError("edge mask has bits outside the edge set")
            return A
        mask = 0
        for e in A:
            if e not in self.signs:
                raise ValueError(f"unknown edge {e!r}")
            mask |= 1 << self.edges.index(e)
        return mask

    def edge_set(self, A: Iterable[str] | int) -> frozenset:
        mask = self.edge_mask(A)
        return frozenset(self.edges[i] for i in iter_bits(mask))

    def canonical(self) -> tuple:
        rots = []
        for v in self.vertices:
            rot = self.rotations[v]
            if rot:
                start = min(range(len(rot)), key=lambda i: rot[i])
                rot = rot[start:] + rot[:start]
            rots.append((v, rot))
        return (tuple(rots), tuple(sorted(self.signs.items())))

    def __eq__(self, other):
        if not isinstance(other, RibbonGraph):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"RibbonGraph({len(self.vertices)} vertices, edges={list(self.edges)})"


def _crossing_dirs(G: RibbonGraph) -> dict:
    """Direction in v in which the counter-clockwise vertex walk crosses each edge end."""
    out = {}
    for e, s in G.signs.items():
        out[(e, 0)] = 1
        out[(e, 1)] = -s
    return out


@dataclass(frozen=True)
class BoundaryReport:
    count: int
    traces: tuple[tuple[tuple, ...], ...]


def _trace(G: RibbonGraph, inside: frozenset) -> list[tuple]:
    crossing = _crossing_dirs(G)

    def step(dart: Dart, direction: int):
        v, idx = G._where[dart]
        rot = G.rotations[v]
        return arrive(rot[(idx + direction) % len(rot)], direction)

    def arrive(dart: Dart, direction: int):
        e, k = dart
        if e not in inside:
            return ("end", e, k, direction)
        d = crossing[dart]
        exit_side = 1 if d == 1 else 0
        side = 1 - exit_side if direction == 1 else exit_side
        return ("side", e, side, k)

    def successor(token):
        if token[0] == "end":
            _, e, k, direction = token
            return step((e, k), direction)
        _, e, s, k = token
        far = (e, 1 - k)
        exit_side = 1 if crossing[far] == 1 else 0
        return step(far, 1 if s == exit_side else -1)

    def reverse(token):
        if token[0] == "end":
            return ("end", token[1], token[2], -token[3])
        return ("side", token[1], token[2], 1 - token[3])

    starts = []
    for v in G.vertices:
        for e, k in G.rotations[v]:
            if e in inside:
                starts += [("side", e, 0, k), ("side", e, 1, k)]
            else:
                starts += [("end", e, k, 1), ("end", e, k, -1)]
    seen = set()
    comps = []
    for start in starts:
        if start in seen:
            continue
        orbit = []
        token = start
        while True:
            orbit.append(token)
            seen.add(token)
            token = successor(token)
            if token == start:
                break
        seen.update(reverse(t) for t in orbit)
        comps.append(tuple(orbit))
    for v in G.vertices:
        if not G.rotations[v]:
            comps.append(())
    return comps


def boundary_count(G: RibbonGraph, A: Iterable[str] | int = ()) -> BoundaryReport:
    """Boundary components of the spanning ribbon subgraph with edge set A."""
    comps = _trace(G, G.edge_set(A))
    return BoundaryReport(len(comps), tuple(comps))


def graphic_dm(G: RibbonGraph) -> DeltaMatroid:
    """Delta-matroid whose feasible sets are the spanning quasi-trees of G."""
    if not G.is_connected():
        raise ValueError("ribbon graph is disconnected")
    m = len(G.edges)
    if m > MAX_GRAPHIC_EDGES:
        raise CapExceeded(f"graphic_dm is limited to {MAX_GRAPHIC_EDGES} edges")
    family = [a for a in range(1 << m) if len(_trace(G, G.edge_set(a))) == 1]
    return DeltaMatroid.unchecked(G.edges, family)


def partial_dual(G: RibbonGraph, A: Iterable[str] | int) -> RibbonGraph:
    """Reglue G along the boundary of the ribbon subgraph (V, A).

    New vertices ``q1, q2, ...`` are the boundary components.  Edges outside A
    keep their ends; an edge in A is attached along its two sides instead
    (side ``v = s`` becomes its end ``s``).  Each new disc is oriented by its
    trace, and an edge is untwisted iff the two discs cross its ends in
    opposite directions of the band coordinate.
    """
    inside = G.edge_set(A)
    crossing = _crossing_dirs(G)
    comps = _trace(G, inside)
    vertices = [f"q{i + 1}" for i in range(len(comps))]
    rotations = {}
    dirs = {}
    for v, comp in zip(vertices, comps):
        rot = []
        for token in comp:
            if token[0] == "end":
                _, e, k, direction = token
                dart = (e, k)
                dirs[dart] = direction * crossing[dart]
            else:
                _, e, s, k = token
                dart = (e, s)
                dirs[dart] = 1 if k == 0 else -1
            rot.append(dart)
        rotations[v] = rot
    signs = {e: (1 if dirs[(e, 0)] * dirs[(e, 1)] == -1 else -1) for e in G.edges}
    return RibbonGraph(vertices, rotations, signs, G.edges, require_connected=False)


def delete_edge(G: RibbonGraph, e: str) -> RibbonGraph:
    rotations = {v: [d for d in rot if d[0] != e] for v, rot in G.rotations.items()}
    signs = {f: s for f, s in G.signs.items() if f != e}
    return RibbonGraph(G.vertices, rotations, signs, [f for f in G.edges if f != e],
                       require_connected=False)


def contract_edge(G: RibbonGraph, e: str) -> RibbonGraph:
    """``G / e``, defined as the partial dual at e with e then deleted."""
    return delete_edge(partial_dual(G, [e]), e)


def vertex_alternation_interlaced(G: RibbonGraph, e: str, f: str) -> bool:
    """In a one-vertex ribbon graph, whether the ends of e and f alternate e..f..e..f."""
    if len(G.vertices) != 1:
        raise ValueError("alternation is defined for single-vertex ribbon graphs")
    if e == f:
        raise ValueError("need two distinct edges")
    seq = [d[0] for d in G.rotations[G.vertices[0]] if d[0] in (e, f)]
    return seq[0] != seq[1] and seq[1] != seq[2] and seq[2] != seq[3]


def ribbonchar_failures(G: RibbonGraph, Q: Iterable[str] | int) -> list[tuple]:
    """Pairs/edges where boundary alternation disagrees with delta-matroid interlacement."""
    D = graphic_dm(G)
    q = G.edge_mask(Q)
    if q not in D:
        raise ValueError("Q is not a spanning quasi-tree")
    H = partial_dual(G, q)
    if len(H.vertices) != 1:
        return [("vertices", len(H.vertices))]
    bad = []
    for e in G.edges:
        nonorientable = (q ^ D.bit(e)) in D
        if nonorientable != (H.signs[e] == -1):
            bad.append(("orientation", e))
    for e, f in combinations(G.edges, 2):
        if vertex_alternation_interlaced(H, e, f) != is_interlaced(D, q, e, f):
            bad.append(("interlace", e, f))
    return bad


def ribbonchar_check(G: RibbonGraph, Q: Iterable[str] | int) -> bool:
    return not ribbonchar_failures(G, Q)


def twistdual_holds(G: RibbonGraph, A: Iterable[str] | int) -> bool:
    """Graphic delta-matroid of the partial dual equals the twist of the graphic delta-matroid."""
    a = G.edge_mask(A)
    return graphic_dm(partial_dual(G, a)) == twist(graphic_dm(G), a)


# -- .ribbon text format ----------------------------------------------------

def _parse_token(tok: str, lineno: int) -> Dart:
    e, sep, k = tok.rpartition(":")
    if not sep or not e or k not in ("0", "1"):
        raise FormatError(f"line {lineno}: bad edge-end token {tok!r} (expected label:0 or label:1)")
    return (e, int(k))


def parse_ribbon(text: str) -> RibbonGraph:
    vertices = []
    rotations = {}
    signs = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "vertex":
            label, sep, body = rest.partition(":")
            label = label.strip()
            if not sep or not label:
                raise FormatError(f"line {lineno}: expected 'vertex <label>: <tokens>'")
            if label in rotations:
                raise FormatError(f"line {lineno}: duplicate vertex {label!r}")
            vertices.append(label)
            rotations[label] = [_parse_token(t, lineno) for t in body.split()]
        elif head == "edge":
            parts = rest.split()
            if len(parts) != 2 or parts[1] not in ("+", "-"):
                raise FormatError(f"line {lineno}: expected 'edge <label> <+|->'")
            if parts[0] in signs:
                raise FormatError(f"line {lineno}: duplicate edge {parts[0]!r}")
            edges.append(parts[0])
            signs[parts[0]] = 1 if parts[1] == "+" else -1
        else:
            raise FormatError(f"line {lineno}: unknown line type {head!r}")
    try:
        return RibbonGraph(vertices, rotations, signs, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_ribbon(G: RibbonGraph) -> str:
    lines = []
    for v in G.vertices:
        tokens = " ".join(f"{e}:{k}" for e, k in G.rotations[v])
        lines.append(f"vertex {v}: {tokens}".rstrip())
    for e in G.edges:
        lines.append(f"edge {e} {'+' if G.signs[e] == 1 else '-'}")
    return "\n".join(lines) + "\n"


FIGURE_ONE = """\
# single vertex, three untwisted loops; a and b interlace, c is nested
vertex v: a:0 b:0 a:1 c:0 c:1 b:1
edge a +
edge b +
edge c +
"""


def theta_graph() -> RibbonGraph:
    """Two vertices joined by three untwisted edges, embedded in the plane."""
    return RibbonGraph(
        ["u", "v"],
        {"u": [("a", 0), ("b", 0), ("c", 0)], "v": [("c", 1), ("b", 1), ("a", 1)]},
        {"a": 1, "b": 1, "c": 1},
        ["a", "b", "c"],
    )
