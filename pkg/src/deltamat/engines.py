"""Transition, interlace, Bollobás-Riordan and Tutte polynomials of delta-matroids.

Each polynomial is available through several independent evaluators (the
``method`` argument); they are required to agree exactly.
"""

from __future__ import annotations

import itertools
from enum import Enum
from functools import lru_cache

from .activities import _pivot, all_activity_counts, feasible_profiles, make_order
from .core import (
    CapExceeded,
    DeltaMatroid,
    distance,
    min_feasibles,
    minor,
    popcount,
    rank_profile,
    restrict,
    singular_points,
)
from .poly import LaurentHalfPoly, PolyError, poly_sum, shift_expand, substitute

TRANSITION_FULL_VARS = ("w", "x", "z", "y")
TRANSITION_VARS = ("w", "x", "y")
INTERLACE2_VARS = ("x", "y")
INTERLACE1_VARS = ("y",)
BR3_VARS = ("s", "y", "z")
SHIFTED_VARS = ("s", "t")
PLAIN_VARS = ("x", "y")

TRANSITION_FULL_CAP = 12
DIRECT_CAP = 20


class Method(str, Enum):
    DIRECT = "direct"
    DELETION_CONTRACTION = "deletion_contraction"
    ACTIVITIES = "activities"
    VIA_RELATION = "via_relation"
    VIA_THREE = "via_three"


def _check_cap(D: DeltaMatroid, cap: int, what: str):
    if D.n > cap:
        raise CapExceeded(f"{what} is limited to ground sets of size {cap} (got {D.n})")


def _method(method) -> Method:
    try:
        return Method(method)
    except ValueError:
        raise ValueError(f"unknown method {method!r}") from None


def _mono(variables, **exps) -> LaurentHalfPoly:
    return LaurentHalfPoly.monomial(variables, exps)


def _halves_mono(variables, halves, coeff=1) -> LaurentHalfPoly:
    return LaurentHalfPoly.from_halves(variables, halves, coeff)


def specialize_zero(p: LaurentHalfPoly, name: str) -> LaurentHalfPoly:
    """Set variable ``name`` to 0 and drop it from the variable list."""
    k = p.variables.index(name)
    variables = p.variables[:k] + p.variables[k + 1:]
    out = {}
    for exps, c in p.terms.items():
        if exps[k] < 0:
            raise PolyError(f"negative power of {name!r} cannot be set to zero")
        if exps[k] == 0:
            key = exps[:k] + exps[k + 1:]
            out[key] = out.get(key, 0) + c
    return LaurentHalfPoly(variables, out)


# -- transition polynomial ----------------------------------------------------

def transition_full(D: DeltaMatroid) -> LaurentHalfPoly:
    """Sum over ordered 3-partitions (A, B, C) of w^|A| x^|B| z^|C| y^{r_min(D*B)}."""
    _check_cap(D, TRANSITION_FULL_CAP, "transition_full")
    counts: dict[tuple, int] = {}
    full = D.full
    for b in range(1 << D.n):
        d = distance(D, b)
        rest = full & ~b
        nb = popcount(b)
        nrest = popcount(rest)
        a = rest
        while True:  # every A inside the complement of B; C is what is left
            na = popcount(a)
            key = (2 * na, 2 * nb, 2 * (nrest - na), 2 * d)
            counts[key] = counts.get(key, 0) + 1
            if a == 0:
                break
            a = (a - 1) & rest
    return LaurentHalfPoly(TRANSITION_FULL_VARS, counts)


def _transition_direct(D: DeltaMatroid) -> LaurentHalfPoly:
    _check_cap(D, DIRECT_CAP, "direct subset sum")
    n = D.n
    counts: dict[tuple, int] = {}
    for b in range(1 << n):
        nb = popcount(b)
        key = (2 * (n - nb), 2 * nb, 2 * distance(D, b))
        counts[key] = counts.get(key, 0) + 1
    return LaurentHalfPoly(TRANSITION_VARS, counts)


def singular_base(c: int, l: int) -> LaurentHalfPoly:
    """(x + wy)^c (w + xy)^l."""
    v = TRANSITION_VARS
    x_wy = _mono(v, x=1) + _mono(v, w=1, y=1)
    w_xy = _mono(v, w=1) + _mono(v, x=1, y=1)
    return x_wy ** c * w_xy ** l


def _transition_dc(D: DeltaMatroid, order) -> LaurentHalfPoly:
    order = make_order(D, order)
    rank = {name: i for i, name in enumerate(order.sequence)}
    w = _mono(TRANSITION_VARS, w=1)
    x = _mono(TRANSITION_VARS, x=1)
    memo: dict[tuple, LaurentHalfPoly] = {}

    def rec(dm: DeltaMatroid) -> LaurentHalfPoly:
        key = dm.key()
        hit = memo.get(key)
        if hit is not None:
            return hit
        pivot = _pivot(dm, rank)
        if pivot is None:
            loops, coloops = singular_points(dm)
            result = singular_base(popcount(coloops), popcount(loops))
        else:
            bit = dm.bit(pivot)
            result = w * rec(minor(dm, 0, bit)) + x * rec(minor(dm, bit, 0))
        memo[key] = result
        return result

    return rec(D)


@lru_cache(maxsize=4096)
def _transition_feasible_term(n: int, size: int, i: int, j: int) -> LaurentHalfPoly:
    v = TRANSITION_VARS
    head = _mono(v, w=n - size, x=size)
    internal = LaurentHalfPoly.one(v) + _mono(v, w=1, x=-1, y=1)
    external = LaurentHalfPoly.one(v) + _mono(v, w=-1, x=1, y=1)
    return head * internal ** i * external ** j


def _transition_activities(D: DeltaMatroid, order, profiles=None) -> LaurentHalfPoly:
    counts = all_activity_counts(D, order, profiles)
    return poly_sum(TRANSITION_VARS, (
        _transition_feasible_term(D.n, popcount(f), *counts[f]) for f in D.feasibles))


def transition_z0(D: DeltaMatroid, method="direct", order=None) -> LaurentHalfPoly:
    """The transition polynomial at z = 0, in variables (w, x, y)."""
    method = _method(method)
    if method is Method.DIRECT:
        return _transition_direct(D)
    if method is Method.DELETION_CONTRACTION:
        return _transition_dc(D, order)
    if method is Method.ACTIVITIES:
        return _transition_activities(D, order)
    if method is Method.VIA_RELATION:
        return specialize_zero(transition_full(D), "z")
    raise ValueError(f"method {method.value!r} does not apply to transition_z0")


def transition_leaf_sum(tree) -> LaurentHalfPoly:
    """Sum of w^|L_d| x^|L_c| (x+wy)^|L_co| (w+xy)^|L_lo| over the leaves of a computation tree."""
    parts = []
    for leaf in tree.leaves():
        s = leaf.stats
        head = _mono(TRANSITION_VARS, w=popcount(s.deleted), x=popcount(s.contracted))
        parts.append(head * singular_base(popcount(s.coloops), popcount(s.loops)))
    return poly_sum(TRANSITION_VARS, parts)


def transition_all_orders_activities(D: DeltaMatroid, orders) -> list[LaurentHalfPoly]:
    """Activities expansion for several orders, sharing the interlacement data."""
    profiles = feasible_profiles(D)
    return [_transition_activities(D, order, profiles) for order in orders]


# -- interlace polynomials ----------------------------------------------------

def _w_to_one() -> dict:
    return {"w": LaurentHalfPoly.one(INTERLACE2_VARS)}


def interlace_two(D: DeltaMatroid, method="direct", order=None) -> LaurentHalfPoly:
    """Two-variable interlace polynomial, sum over A of x^|A| y^{r_min(D*A)}."""
    method = _method(method)
    v = INTERLACE2_VARS
    if method is Method.DIRECT:
        _check_cap(D, DIRECT_CAP, "direct subset sum")
        counts: dict[tuple, int] = {}
        for a in range(1 << D.n):
            key = (2 * popcount(a), 2 * distance(D, a))
            counts[key] = counts.get(key, 0) + 1
        return LaurentHalfPoly(v, counts)
    if method is Method.ACTIVITIES:
        counts = all_activity_counts(D, order)
        internal = LaurentHalfPoly.one(v) + _mono(v, x=-1, y=1)
        external = LaurentHalfPoly.one(v) + _mono(v, x=1, y=1)
        return poly_sum(v, (_mono(v, x=popcount(f)) * internal ** counts[f][0] * external ** counts[f][1]
                            for f in D.feasibles))
    if method in (Method.DELETION_CONTRACTION, Method.VIA_RELATION):
        source = Method.DELETION_CONTRACTION if method is Method.DELETION_CONTRACTION else Method.DIRECT
        return substitute(transition_z0(D, source, order), _w_to_one(), target=v)
    raise ValueError(f"method {method.value!r} does not apply to interlace_two")


def interlace_one(D: DeltaMatroid, method="direct", order=None) -> LaurentHalfPoly:
    """One-variable interlace polynomial q(D; y) = sum over A of y^{r_min(D*A)}."""
    method = _method(method)
    v = INTERLACE1_VARS
    if method is Method.DIRECT:
        _check_cap(D, DIRECT_CAP, "direct subset sum")
        counts: dict[tuple, int] = {}
        for a in range(1 << D.n):
            key = (2 * distance(D, a),)
            counts[key] = counts.get(key, 0) + 1
        return LaurentHalfPoly(v, counts)
    if method is Method.ACTIVITIES:
        counts = all_activity_counts(D, order)
        y1 = _mono(v, y=1) + 1
        return poly_sum(v, (y1 ** sum(counts[f]) for f in D.feasibles))
    if method is Method.VIA_RELATION:
        return substitute(interlace_two(D, Method.DIRECT), {"x": LaurentHalfPoly.one(v)}, target=v)
    raise ValueError(f"method {method.value!r} does not apply to interlace_one")


def interlace_one_shifted(D: DeltaMatroid, method="activities", order=None) -> LaurentHalfPoly:
    """q(D; y - 1); by activities this is the sum over feasible F of y^{i(F) + j(F)}."""
    method = _method(method)
    v = INTERLACE1_VARS
    if method is Method.ACTIVITIES:
        counts = all_activity_counts(D, order)
        out: dict[tuple, int] = {}
        for f in D.feasibles:
            key = (2 * sum(counts[f]),)
            out[key] = out.get(key, 0) + 1
        return LaurentHalfPoly(v, out)
    return shift_expand(interlace_one(D, method, order), {"y": "y"})


# -- Bollobás-Riordan polynomials ----------------------------------------------

def br_three(D: DeltaMatroid) -> LaurentHalfPoly:
    """Three-variable Bollobás-Riordan polynomial with x stored shifted as s = x - 1.

    Variables (s, y, z); r_min(A) is the rank of A in the matroid of
    minimum-size feasible sets, the z-exponent is the width of D|A.
    """
    _check_cap(D, DIRECT_CAP, "direct subset sum")
    bases = min_feasibles(D)
    r_full = popcount(bases[0])
    counts: dict[tuple, int] = {}
    for a in range(1 << D.n):
        r = max(popcount(a & b) for b in bases)
        width = rank_profile(restrict(D, a)).width
        key = (2 * (r_full - r), 2 * (popcount(a) - r), 2 * width)
        counts[key] = counts.get(key, 0) + 1
    return LaurentHalfPoly(BR3_VARS, counts)


def _br_two_direct(D: DeltaMatroid) -> LaurentHalfPoly:
    _check_cap(D, DIRECT_CAP, "direct subset sum")
    two_sigma_full = rank_profile(D).two_sigma
    counts: dict[tuple, int] = {}
    for a in range(1 << D.n):
        ts = rank_profile(restrict(D, a)).two_sigma
        # exponents in half-units: sigma(E) - sigma(A) and |A| - sigma(A)
        key = (two_sigma_full - ts, 2 * popcount(a) - ts)
        counts[key] = counts.get(key, 0) + 1
    return LaurentHalfPoly(SHIFTED_VARS, counts)


def three_to_two(D: DeltaMatroid, R: LaurentHalfPoly | None = None) -> LaurentHalfPoly:
    """s^{w(D)/2} R(D; s + 1, t, 1/sqrt(st)), the two-variable polynomial in shifted variables."""
    if R is None:
        R = br_three(D)
    v = SHIFTED_VARS
    images = {
        "s": _mono(v, s=1),
        "y": _mono(v, t=1),
        "z": _halves_mono(v, (-1, -1)),
    }
    width = rank_profile(D).width
    return _halves_mono(v, (width, 0)) * substitute(R, images, target=v)


def _br_two_activities(D: DeltaMatroid, order) -> LaurentHalfPoly:
    v = SHIFTED_VARS
    prof = rank_profile(D)
    counts = all_activity_counts(D, order)
    s1 = _mono(v, s=1) + 1
    t1 = _mono(v, t=1) + 1
    parts = []
    for f in D.feasibles:
        size = popcount(f)
        head = _halves_mono(v, (prof.r_max_full - size, size - prof.r_min_full))
        i, j = counts[f]
        parts.append(head * s1 ** i * t1 ** j)
    return poly_sum(v, parts)


def br_two(D: DeltaMatroid, method="direct", order=None) -> LaurentHalfPoly:
    """Two-variable Bollobás-Riordan polynomial in shifted variables s = x - 1, t = y - 1."""
    method = _method(method)
    if method is Method.DIRECT:
        return _br_two_direct(D)
    if method in (Method.VIA_THREE, Method.VIA_RELATION):
        return three_to_two(D)
    if method is Method.ACTIVITIES:
        return _br_two_activities(D, order)
    raise ValueError(f"method {method.value!r} does not apply to br_two")


def expand_shifted(p: LaurentHalfPoly) -> LaurentHalfPoly:
    """Rewrite an (s, t) polynomial in x, y; only possible for nonnegative integral exponents."""
    return shift_expand(p, {"s": "x", "t": "y"}, target=PLAIN_VARS)


def tutte_oracle(M: DeltaMatroid) -> LaurentHalfPoly:
    """Rank-nullity sum of (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}, in shifted variables."""
    if not M.is_matroid():
        raise ValueError("the Tutte polynomial needs a matroid")
    _check_cap(M, DIRECT_CAP, "direct subset sum")
    bases = list(M.feasibles)
    r_full = popcount(bases[0])
    counts: dict[tuple, int] = {}
    for a in range(1 << M.n):
        r = max(popcount(a & b) for b in bases)
        key = (2 * (r_full - r), 2 * (popcount(a) - r))
        counts[key] = counts.get(key, 0) + 1
    return LaurentHalfPoly(SHIFTED_VARS, counts)


def tutte_activities(M: DeltaMatroid, order=None) -> LaurentHalfPoly:
    """Sum over bases of x^{i(F)} y^{j(F)}, in plain variables (x, y)."""
    counts = all_activity_counts(M, order)
    out: dict[tuple, int] = {}
    for f in M.feasibles:
        i, j = counts[f]
        out[(2 * i, 2 * j)] = out.get((2 * i, 2 * j), 0) + 1
    return LaurentHalfPoly(PLAIN_VARS, out)


# -- relations between the polynomials ---------------------------------------

def polyrel_sides(D: DeltaMatroid) -> tuple[LaurentHalfPoly, LaurentHalfPoly]:
    """Both sides of q(D; sqrt(y/x), sqrt(xy)) = sqrt(y/x)^{r_min} R(D; x+1, y, 1/sqrt(xy))."""
    v = PLAIN_VARS
    q = interlace_two(D, Method.DIRECT)
    left = substitute(q, {"x": _halves_mono(v, (-1, 1)), "y": _halves_mono(v, (1, 1))}, target=v)
    R = br_three(D)
    right = substitute(R, {"s": _mono(v, x=1), "y": _mono(v, y=1), "z": _halves_mono(v, (-1, -1))}, target=v)
    r_min = rank_profile(D).r_min_full
    return left, _halves_mono(v, (-r_min, r_min)) * right


def _check_three_methods(D, order) -> bool:
    direct = transition_z0(D, Method.DIRECT)
    return (direct == transition_z0(D, Method.DELETION_CONTRACTION, order)
            == transition_z0(D, Method.ACTIVITIES, order))


def _check_three_to_two(D, order) -> bool:
    return br_two(D, Method.DIRECT) == br_two(D, Method.VIA_THREE)


def _check_polyrel(D, order) -> bool:
    left, right = polyrel_sides(D)
    return left == right


def _check_br_activities(D, order) -> bool:
    return br_two(D, Method.DIRECT) == br_two(D, Method.ACTIVITIES, order)


def _check_matroid_tutte(D, order) -> bool:
    if not D.is_matroid():
        raise ValueError("matroid_tutte applies to matroids only")
    direct = br_two(D, Method.DIRECT)
    return (direct == br_two(D, Method.ACTIVITIES, order) == tutte_oracle(D)
            and expand_shifted(direct) == tutte_activities(D, order))


def _check_interlace_activities(D, order) -> bool:
    return interlace_two(D, Method.DIRECT) == interlace_two(D, Method.ACTIVITIES, order)


def _check_interlace_one_activities(D, order) -> bool:
    shifted = interlace_one_shifted(D, Method.ACTIVITIES, order)
    return (shifted == interlace_one_shifted(D, Method.DIRECT)
            == interlace_one_shifted(D, Method.VIA_RELATION))


def _check_matroid_activity(D, order) -> bool:
    from .activities import classify_point
    from .core import twist
    from .interlace import fundamental_circuit

    if not D.is_matroid():
        raise ValueError("matroid_activity applies to matroids only")
    order = make_order(D, order)
    rank = dict(zip(order.sequence, range(len(order.sequence))))
    dual = twist(D, D.full)
    for b in D.feasibles:
        for name in D.names:
            cls = classify_point(D, b, order, name)
            if b & D.bit(name):
                circuit = fundamental_circuit(dual, D.full & ~b, name)
            else:
                circuit = fundamental_circuit(D, b, name)
            lowest = min(D.subset_names(circuit), key=rank.__getitem__)
            if (lowest == name) != cls.active:
                return False
    return True


def _check_ribbon_loop(D, order) -> bool:
    from .core import twist
    from .interlace import is_nonorientable, is_nonorientable_ribbon_loop

    for f in D.feasibles:
        twisted = twist(D, f)
        for a in D.names:
            if is_nonorientable(D, f, a) != is_nonorientable_ribbon_loop(twisted, a):
                return False
    return True


def _check_connectivity(D, order) -> bool:
    from .interlace import connectivity_characterization, is_interlaced

    for f in D.feasibles:
        for a, b in itertools.combinations(D.names, 2):
            if is_interlaced(D, f, a, b) != connectivity_characterization(D, f, a, b):
                return False
    return True


def _check_core_identities(D, order) -> bool:
    from .activities import check_core_identities

    return check_core_identities(D, order)


RELATIONS = {
    "transition_methods": _check_three_methods,
    "interlace_activities": _check_interlace_activities,
    "interlace_one_activities": _check_interlace_one_activities,
    "three_to_two": _check_three_to_two,
    "polyrel": _check_polyrel,
    "br_activities": _check_br_activities,
    "matroid_tutte": _check_matroid_tutte,
    "matroid_activity": _check_matroid_activity,
    "ribbon_loop": _check_ribbon_loop,
    "connectivity": _check_connectivity,
    "core_identities": _check_core_identities,
}


def verify_relation(D: DeltaMatroid, relation: str, order=None) -> bool:
    """Evaluate both sides of a named identity on D and compare exactly."""
    try:
        check = RELATIONS[relation]
    except KeyError:
        raise ValueError(f"unknown relation {relation!r}; expected one of {sorted(RELATIONS)}") from None
    return check(D, order)
