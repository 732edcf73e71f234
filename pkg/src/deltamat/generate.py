"""Test corpora: exhaustive small delta-matroids and seeded random instances."""

from __future__ import annotations

import random
from functools import lru_cache
from string import ascii_lowercase
from typing import Iterator

from .core import DeltaMatroid, _exchange_holds, minor, twist

MAX_EXHAUSTIVE = 4
RECIPES = ("adjacency", "twist-of-adjacency", "graphic", "twist-of-graphic", "minor-of-adjacency")


def default_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(ascii_lowercase[:n])
    return tuple(f"e{i}" for i in range(n))


@lru_cache(maxsize=None)
def _small_families(n: int) -> tuple[tuple[int, ...], ...]:
    universe = 1 << n
    out = []
    for code in range(1, 1 << universe):
        members = [s for s in range(universe) if code >> s & 1]
        if _exchange_holds(set(members), n):
            out.append(tuple(members))
    return tuple(out)


def enumerate_small(n: int) -> Iterator[DeltaMatroid]:
    """Every delta-matroid on the ground set ``a, b, ...`` of size n (1 <= n <= 4)."""
    if n < 1:
        raise ValueError("ground size must be at least 1")
    if n > MAX_EXHAUSTIVE:
        raise ValueError(f"exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE}")
    names = default_names(n)
    for members in _small_families(n):
        yield DeltaMatroid.unchecked(names, members)


def enumerate_up_to(n: int) -> Iterator[DeltaMatroid]:
    for k in range(1, n + 1):
        yield from enumerate_small(k)


def random_graph(rng: random.Random, n: int, p_edge: float = 0.5, p_loop: float = 0.3,
                 loops: bool = True):
    from .adjacency import SimpleGraph

    names = default_names(n)
    edges = {(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p_edge}
    looped = {v for v in names if loops and rng.random() < p_loop}
    return SimpleGraph(names, edges, looped)


def random_ribbon(rng: random.Random, n_edges: int, n_vertices: int | None = None,
                  p_twist: float = 0.3):
    """A connected ribbon graph with a random rotation system and random edge signs."""
    from .ribbon import RibbonGraph

    if n_vertices is None:
        n_vertices = rng.randint(1, n_edges + 1)
    n_vertices = max(1, min(n_vertices, n_edges + 1))
    vertices = [f"v{i}" for i in range(n_vertices)]
    edges = default_names(n_edges)
    ends = []
    # a random spanning tree keeps the graph connected
    for k in range(1, n_vertices):
        ends.append((vertices[rng.randrange(k)], vertices[k]))
    for _ in range(n_vertices - 1, n_edges):
        ends.append((rng.choice(vertices), rng.choice(vertices)))
    rng.shuffle(ends)
    rotations: dict[str, list[tuple[str, int]]] = {v: [] for v in vertices}
    for e, (u, v) in zip(edges, ends):
        for end, vertex in ((0, u), (1, v)):
            rot = rotations[vertex]
            rot.insert(rng.randrange(len(rot) + 1), (e, end))
    signs = {e: (-1 if rng.random() < p_twist else 1) for e in edges}
    return RibbonGraph(vertices, rotations, signs)


def random_dm(seed: int, n: int, recipe: str = "twist-of-adjacency") -> DeltaMatroid:
    """A deterministic pseudo-random delta-matroid on n elements."""
    if recipe not in RECIPES:
        raise ValueError(f"unknown recipe {recipe!r}; expected one of {RECIPES}")
    if n < 1:
        raise ValueError("ground size must be at least 1")
    rng = random.Random(f"{recipe}:{seed}:{n}")
    return random_dm_from(rng, n, recipe)


def random_dm_from(rng: random.Random, n: int, recipe: str) -> DeltaMatroid:
    from .adjacency import adjacency_dm
    from .ribbon import graphic_dm

    if recipe in ("adjacency", "twist-of-adjacency"):
        D = adjacency_dm(random_graph(rng, n, p_edge=rng.uniform(0.2, 0.8), p_loop=rng.uniform(0, 0.6)))
    elif recipe == "minor-of-adjacency":
        extra = rng.randint(1, 2)
        big = adjacency_dm(random_graph(rng, n + extra, p_edge=rng.uniform(0.2, 0.8),
                                        p_loop=rng.uniform(0, 0.6)))
        drop = rng.sample(range(big.n), extra)
        c = d = 0
        for i in drop:
            if rng.random() < 0.5:
                c |= 1 << i
            else:
                d |= 1 << i
        D = minor(big, c, d)
        D = DeltaMatroid.unchecked(default_names(n), D.feasibles)
    else:
        D = graphic_dm(random_ribbon(rng, n))
    if recipe.startswith("twist-of") or recipe == "minor-of-adjacency":
        D = twist(D, rng.getrandbits(n))
    return D


def random_corpus(seed: int, count: int, sizes=range(5, 9)) -> list[DeltaMatroid]:
    """``count`` random delta-matroids cycling through ``sizes`` and all recipes."""
    rng = random.Random(seed)
    sizes = list(sizes)
    out = []
    for k in range(count):
        n = sizes[k % len(sizes)]
        recipe = RECIPES[(k // len(sizes)) % len(RECIPES)]
        out.append(random_dm_from(rng, n, recipe))
    return out


def random_order(rng: random.Random, names) -> tuple[str, ...]:
    seq = list(names)
    rng.shuffle(seq)
    return tuple(seq)
