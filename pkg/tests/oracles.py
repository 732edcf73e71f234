"""Brute-force reference implementations used to cross-check the library.

Everything here works on frozensets of labels and follows the textbook
definitions literally; nothing is imported from ``deltamat`` except for
conversion helpers at the boundary.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, product


def powerset(ground):
    ground = list(ground)
    for k in range(len(ground) + 1):
        for c in combinations(ground, k):
            yield frozenset(c)


def sym_exchange(ground, family) -> bool:
    family = {frozenset(f) for f in family}
    if not family:
        return False
    for X in family:
        for Y in family:
            for u in X ^ Y:
                if not any((X ^ {u, v}) in family for v in X ^ Y):
                    return False
    return True


def twist(family, A):
    return {frozenset(F) ^ frozenset(A) for F in family}


def delete_one(family, e):
    family = {frozenset(F) for F in family}
    if all(e in F for F in family):  # coloop
        return {F - {e} for F in family}
    return {F for F in family if e not in F}


def contract_one(family, e):
    family = {frozenset(F) for F in family}
    if all(e not in F for F in family):  # loop
        return set(family)
    return {F - {e} for F in family if e in F}


def distance(family, A):
    return min(len(frozenset(F) ^ frozenset(A)) for F in family)


def loops_coloops(ground, family):
    family = [frozenset(F) for F in family]
    loops = {e for e in ground if all(e not in F for F in family)}
    coloops = {e for e in ground if all(e in F for F in family)}
    return loops, coloops


def restrict(family, A):
    """Restriction to A: delete every element outside A, one at a time."""
    ground = set().union(*family) if family else set()
    fam = {frozenset(F) for F in family}
    for e in sorted(set(ground) - set(A)):
        fam = delete_one(fam, e)
    # elements never in any feasible set need no deletion step
    return {F & frozenset(A) for F in fam}


def restrict_full(ground, family, A):
    fam = {frozenset(F) for F in family}
    for e in sorted(set(ground) - set(A)):
        fam = delete_one(fam, e)
    return fam


def width(family):
    sizes = [len(F) for F in family]
    return max(sizes) - min(sizes)


# -- polynomials as Counters of exponent tuples ----------------------------------

def transition_z0(ground, family):
    """Counter {(w, x, y): coeff} of sum over B of w^{n-|B|} x^|B| y^{min |F ^ B|}."""
    n = len(ground)
    out = Counter()
    for B in powerset(ground):
        out[(n - len(B), len(B), distance(family, B))] += 1
    return out


def transition_full(ground, family):
    """Counter {(w, x, z, y): coeff} over ordered partitions (A, B, C)."""
    ground = list(ground)
    out = Counter()
    for labels in product("ABC", repeat=len(ground)):
        B = frozenset(e for e, l in zip(ground, labels) if l == "B")
        out[(labels.count("A"), labels.count("B"), labels.count("C"), distance(family, B))] += 1
    return out


def interlace_q(ground, family):
    """Counter {(x, y)} of the two-variable interlace polynomial."""
    out = Counter()
    for A in powerset(ground):
        out[(len(A), distance(family, A))] += 1
    return out


def matroid_rank(bases, A):
    return max(len(frozenset(B) & frozenset(A)) for B in bases)


def tutte(ground, bases):
    """Tutte polynomial by the rank-nullity sum, expanded into a Counter {(i, j)}."""
    bases = [frozenset(B) for B in bases]
    r = len(bases[0])
    out = Counter()
    for A in powerset(ground):
        rA = matroid_rank(bases, A)
        a, b = r - rA, len(A) - rA
        # (x-1)^a (y-1)^b
        for i in range(a + 1):
            for j in range(b + 1):
                c = binom(a, i) * binom(b, j) * (-1) ** (a - i + b - j)
                out[(i, j)] += c
    return +out


def tutte_dc(edges):
    """Tutte polynomial of a multigraph by deletion-contraction; edges are (u, v) pairs."""

    def connected(u, v, es):
        seen, stack = {u}, [u]
        while stack:
            x = stack.pop()
            for a, b in es:
                for p, q in ((a, b), (b, a)):
                    if p == x and q not in seen:
                        seen.add(q)
                        stack.append(q)
        return v in seen

    def rec(es):
        if not es:
            return Counter({(0, 0): 1})
        (u, v), rest = es[0], es[1:]
        if u == v:
            return Counter({(i, j + 1): c for (i, j), c in rec(rest).items()})
        if not connected(u, v, rest):  # bridge
            merged = [(u if a == v else a, u if b == v else b) for a, b in rest]
            return Counter({(i + 1, j): c for (i, j), c in rec(merged).items()})
        merged = [(u if a == v else a, u if b == v else b) for a, b in rest]
        out = rec(rest)
        out.update(rec(merged))
        return out

    return rec(list(edges))


def binom(n, k):
    from math import comb
    return comb(n, k)


# -- bases of a matroid and fundamental circuits ----------------------------------

def basis_exchange(family) -> bool:
    family = [frozenset(B) for B in family]
    fam = set(family)
    for B1 in family:
        for B2 in family:
            for x in B1 - B2:
                if not any((B1 - {x}) | {y} in fam for y in B2 - B1):
                    return False
    return True


def fundamental_circuit(bases, B, e):
    """Circuit in B + e: e together with every b such that B - b + e is a basis."""
    bases = {frozenset(x) for x in bases}
    B = frozenset(B)
    return frozenset({e} | {b for b in B if (B - {b}) | {e} in bases})


# -- GF(2) determinants via exact integer elimination ----------------------------

def det_mod2(matrix) -> int:
    """Determinant of an integer matrix, reduced mod 2 (Fraction elimination)."""
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return int(det) % 2


def adjacency_family(vertices, edges, loops):
    idx = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    A = [[0] * n for _ in range(n)]
    for u, v in edges:
        A[idx[u]][idx[v]] = A[idx[v]][idx[u]] = 1
    for v in loops:
        A[idx[v]][idx[v]] = 1
    fam = set()
    for X in powerset(vertices):
        rows = [idx[v] for v in vertices if v in X]
        sub = [[A[i][j] for j in rows] for i in rows]
        if not rows or det_mod2(sub) == 1:
            fam.add(X)
    return fam


# -- signed rotation systems: the classical face-tracing walk -------------------

def face_count(vertices, rotations, signs, A):
    """Boundary components of the ribbon subgraph (V, A).

    Classical walk on (vertex, position, orientation) states: leave along
    the current edge end, arrive at the other end, flip orientation on a
    twisted edge, then move to the next end in the rotation in the current
    orientation.  Each face is traced once per orientation, hence the halving;
    isolated vertices (no edges of A) are faces of their own.
    """
    A = set(A)
    rot = {v: [d for d in rotations[v] if d[0] in A] for v in vertices}
    where = {}
    for v in vertices:
        for i, d in enumerate(rot[v]):
            where[d] = (v, i)
    seen = set()
    orbits = 0
    for v in vertices:
        for i in range(len(rot[v])):
            for o in (1, -1):
                if (v, i, o) in seen:
                    continue
                orbits += 1
                state = (v, i, o)
                while state not in seen:
                    seen.add(state)
                    cv, ci, co = state
                    e, k = rot[cv][ci]
                    nv, ni = where[(e, 1 - k)]
                    no = co * signs[e]
                    nxt = (ni + no) % len(rot[nv])
                    state = (nv, nxt, no)
    isolated = sum(1 for v in vertices if not rot[v])
    return orbits // 2 + isolated


# -- orientability and interlacement, straight from the twisted family -----------

def nonorientable(family, F, a):
    return frozenset({a}) in twist(family, F)


def paired(family, F, a, b):
    return frozenset({a, b}) in twist(family, F)


def interlaced(family, F, a, b):
    na, nb = nonorientable(family, F, a), nonorientable(family, F, b)
    if na and nb:
        return not paired(family, F, a, b)
    return paired(family, F, a, b)


def ribbon_loop(family, a):
    r = min(len(F) for F in family)
    return all(a not in F for F in family if len(F) == r)
