"""Sparse multivariate Laurent polynomials with half-integer exponents.

Exponents are stored in half-units (the integer ``2 * e``) over a fixed,
ordered variable list; coefficients are Python integers.  Zero coefficients
are never stored.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


class PolyError(ValueError):
    pass


def _halves(value) -> int:
    """Convert an exponent (int, Fraction or float with .5 precision) to half-units."""
    doubled = Fraction(value) * 2
    if doubled.denominator != 1:
        raise PolyError(f"exponent {value} is not a multiple of 1/2")
    return int(doubled)


class LaurentHalfPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, int] | None = None):
        self.variables = tuple(variables)
        width = len(self.variables)
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != width:
                    raise PolyError("exponent vector length does not match the variable list")
                if coeff:
                    clean[tuple(exps)] = int(coeff)
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentHalfPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c: int) -> "LaurentHalfPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "LaurentHalfPoly":
        return cls.constant(variables, 1)

    @classmethod
    def monomial(cls, variables: Sequence[str], exponents: Mapping[str, object] | None = None,
                 coeff: int = 1) -> "LaurentHalfPoly":
        """``coeff * prod(v ** e)``; exponents may be ints or Fractions with denominator 2."""
        variables = tuple(variables)
        vec = [0] * len(variables)
        for name, e in (exponents or {}).items():
            try:
                vec[variables.index(name)] += _halves(e)
            except ValueError:
                raise PolyError(f"unknown variable {name!r}") from None
        return cls(variables, {tuple(vec): coeff})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "LaurentHalfPoly":
        return cls.monomial(variables, {name: 1})

    @classmethod
    def from_halves(cls, variables: Sequence[str], halves: Sequence[int], coeff: int = 1):
        return cls(variables, {tuple(halves): coeff})

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "LaurentHalfPoly":
        if isinstance(other, LaurentHalfPoly):
            if other.variables != self.variables:
                raise PolyError(f"variable lists differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return LaurentHalfPoly.constant(self.variables, other)
        raise TypeError(f"cannot combine LaurentHalfPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return LaurentHalfPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentHalfPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentHalfPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolyError("power must be a nonnegative integer")
        result = LaurentHalfPoly.one(self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentHalfPoly.constant(self.variables, other)
        if not isinstance(other, LaurentHalfPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentHalfPoly({list(self.variables)}, {canonical_string(self)!r})"

    def __str__(self):
        return canonical_string(self)

    # -- inspection -----------------------------------------------------

    def coefficient(self, exponents: Mapping[str, object] | None = None) -> int:
        key = LaurentHalfPoly.monomial(self.variables, exponents)
        (vec,) = key.terms
        return self.terms.get(vec, 0)

    def is_integral(self) -> bool:
        """All exponents are integers."""
        return all(e % 2 == 0 for exps in self.terms for e in exps)

    def is_polynomial(self) -> bool:
        """All exponents are nonnegative integers."""
        return all(e >= 0 and e % 2 == 0 for exps in self.terms for e in exps)

    def min_halves(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(col) for col in zip(*self.terms))

    def degree(self, name: str) -> Fraction:
        i = self.variables.index(name)
        if not self.terms:
            return Fraction(0)
        return Fraction(max(e[i] for e in self.terms), 2)


def add(p: LaurentHalfPoly, q: LaurentHalfPoly) -> LaurentHalfPoly:
    return p + q


def mul(p: LaurentHalfPoly, q: LaurentHalfPoly) -> LaurentHalfPoly:
    return p * q


def power(p: LaurentHalfPoly, k: int) -> LaurentHalfPoly:
    return p ** k


def equals(p: LaurentHalfPoly, q: LaurentHalfPoly) -> bool:
    return p == q


def poly_sum(variables: Sequence[str], parts: Iterable[LaurentHalfPoly]) -> LaurentHalfPoly:
    out: dict[tuple, int] = {}
    for part in parts:
        if part.variables != tuple(variables):
            raise PolyError("variable lists differ")
        for e, c in part.terms.items():
            out[e] = out.get(e, 0) + c
    return LaurentHalfPoly(variables, out)


# -- substitution -------------------------------------------------------------

def _as_signed_monomial(image: LaurentHalfPoly) -> tuple[int, tuple[int, ...]]:
    if len(image.terms) != 1:
        raise PolyError("substitution images must be single monomials")
    (vec, coeff), = image.terms.items()
    if coeff not in (1, -1):
        raise PolyError("substitution images must have coefficient +1 or -1")
    return coeff, vec


def substitute(p: LaurentHalfPoly, mapping: Mapping[str, LaurentHalfPoly],
               target: Sequence[str] | None = None) -> LaurentHalfPoly:
    """Replace each variable by a signed monomial over ``target``.

    Variables of ``p`` missing from ``mapping`` map to the same-named target
    variable.  The map acts linearly on exponent vectors; a result exponent
    must stay a multiple of 1/2 and a ``-1`` sign may only be raised to
    integral powers.
    """
    target = tuple(target) if target is not None else p.variables
    images = []
    for name in p.variables:
        if name in mapping:
            image = mapping[name]
            if image.variables != target:
                raise PolyError(f"image of {name!r} is not over {target}")
        elif name in target:
            image = LaurentHalfPoly.var(target, name)
        else:
            raise PolyError(f"no image given for variable {name!r}")
        images.append(_as_signed_monomial(image))
    out: dict[tuple, int] = {}
    width = len(target)
    for exps, coeff in p.terms.items():
        vec = [0] * width
        sign = 1
        for e, (s, m) in zip(exps, images):
            if e == 0:
                continue
            if s < 0:
                if e % 2:
                    raise PolyError("sign raised to a non-integral power")
                if (e // 2) % 2:
                    sign = -sign
            for k, mk in enumerate(m):
                prod = mk * e
                if prod % 2:
                    raise PolyError("substitution produces a quarter-integral exponent")
                vec[k] += prod // 2
        key = tuple(vec)
        out[key] = out.get(key, 0) + sign * coeff
    return LaurentHalfPoly(target, out)


def _translate(p: LaurentHalfPoly, renames: Mapping[str, str], offset: int,
               target: Sequence[str] | None, what: str) -> LaurentHalfPoly:
    """Replace each ``src`` in ``renames`` by ``dst + offset`` (binomial expansion)."""
    if target is None:
        target = tuple(renames.get(v, v) for v in p.variables)
    target = tuple(target)
    plan = []
    for name in p.variables:
        dst = renames.get(name, name)
        if dst not in target:
            raise PolyError(f"variable {dst!r} missing from target list")
        plan.append((target.index(dst), name in renames))
    width = len(target)
    out: dict[tuple, int] = {}
    for exps, coeff in p.terms.items():
        partial = {(0,) * width: coeff}
        for e, (k, shifted) in zip(exps, plan):
            if not shifted:
                partial = {tuple(v + e if j == k else v for j, v in enumerate(key)): c
                           for key, c in partial.items()}
                continue
            if e < 0 or e % 2:
                raise PolyError(f"non-integral or negative {what} exponent")
            n = e // 2
            nxt: dict[tuple, int] = {}
            for key, c in partial.items():
                for i, b in _binomial_row(n, offset):
                    nk = tuple(v + 2 * i if j == k else v for j, v in enumerate(key))
                    nxt[nk] = nxt.get(nk, 0) + c * b
            partial = nxt
        for key, c in partial.items():
            out[key] = out.get(key, 0) + c
    return LaurentHalfPoly(target, out)


@lru_cache(maxsize=None)
def _binomial_row(n: int, offset: int) -> tuple[tuple[int, int], ...]:
    """Coefficients of ``(v + offset)^n`` as ``(power of v, coeff)`` pairs."""
    return tuple((i, math.comb(n, i) * offset ** (n - i)) for i in range(n + 1))


def shift_expand(p: LaurentHalfPoly, renames: Mapping[str, str] | None = None,
                 target: Sequence[str] | None = None) -> LaurentHalfPoly:
    """Expand shifted variables: each ``s`` in ``renames`` becomes ``renames[s] - 1``.

    Default renames ``s -> x`` and ``t -> y`` for the variables present.
    """
    if renames is None:
        renames = {k: v for k, v in (("s", "x"), ("t", "y")) if k in p.variables}
    return _translate(p, renames, -1, target, "shift")


def shift_collapse(p: LaurentHalfPoly, renames: Mapping[str, str] | None = None,
                   target: Sequence[str] | None = None) -> LaurentHalfPoly:
    """Inverse of :func:`shift_expand`: each ``x`` in ``renames`` becomes ``renames[x] + 1``."""
    if renames is None:
        renames = {k: v for k, v in (("x", "s"), ("y", "t")) if k in p.variables}
    return _translate(p, renames, 1, target, "shift")


# -- evaluation ---------------------------------------------------------------

def evaluate(p: LaurentHalfPoly, point: Mapping[str, object]) -> Fraction:
    values = [Fraction(point[v]) for v in p.variables]
    total = Fraction(0)
    for exps, coeff in p.terms.items():
        term = Fraction(coeff)
        for e, val in zip(exps, values):
            if e % 2:
                raise PolyError("non-integral exponent cannot be evaluated exactly")
            k = e // 2
            if k < 0 and val == 0:
                raise PolyError("zero raised to a negative power")
            term *= val ** k
        total += term
    return total


def evaluate_float(p: LaurentHalfPoly, point: Mapping[str, float]) -> float:
    values = [float(point[v]) for v in p.variables]
    total = 0.0
    for exps, coeff in p.terms.items():
        term = float(coeff)
        for e, val in zip(exps, values):
            if e == 0:
                continue
            if val == 0 and e < 0:
                raise PolyError("zero raised to a negative power")
            if e % 2:
                if val < 0:
                    raise PolyError("half power of a negative number")
                term *= math.sqrt(val) ** e
            else:
                term *= val ** (e // 2)
        total += term
    return total


# -- printing -------------------------------------------------------------------

def _order_key(exps: tuple[int, ...]):
    return (-sum(exps), tuple(-e for e in exps))


def sorted_terms(p: LaurentHalfPoly) -> list[tuple[tuple[int, ...], int]]:
    """Terms in graded-lex order (highest total degree first)."""
    return sorted(p.terms.items(), key=lambda item: _order_key(item[0]))


def _power_str(name: str, e: int) -> str:
    if e == 2:
        return name
    if e % 2 == 0:
        return f"{name}^{e // 2}"
    return f"{name}^({e}/2)"


def canonical_string(p: LaurentHalfPoly) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for exps, coeff in sorted_terms(p):
        factors = [_power_str(v, e) for v, e in zip(p.variables, exps) if e]
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def term_lines(p: LaurentHalfPoly) -> str:
    """Machine-readable form: one ``coeff e1 e2 ...`` line per term."""
    header = "# coeff " + " ".join(f"exp_{v}" for v in p.variables)
    lines = [header]
    for exps, coeff in sorted_terms(p):
        lines.append(" ".join([str(coeff)] + [str(Fraction(e, 2)) for e in exps]))
    return "\n".join(lines) + "\n"
