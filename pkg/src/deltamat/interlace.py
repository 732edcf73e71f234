"""Orientability, pairing and interlacement relative to a feasible set."""

from __future__ import annotations

from dataclasses import dataclass

from .core import DeltaMatroid, Subset, iter_bits, min_feasibles, minor, decompose, twist


def _require_feasible(D: DeltaMatroid, F: Subset) -> int:
    f = D.mask(F)
    if f not in D:
        raise ValueError(f"{set(D.subset_names(f)) or '{}'} is not feasible")
    return f


def is_nonorientable(D: DeltaMatroid, F: Subset, a: str) -> bool:
    """``{a}`` is feasible in ``D * F``."""
    f = _require_feasible(D, F)
    return (f ^ D.bit(a)) in D


def is_paired(D: DeltaMatroid, F: Subset, a: str, b: str) -> bool:
    f = _require_feasible(D, F)
    if a == b:
        raise ValueError("pairing needs two distinct elements")
    return (f ^ D.bit(a) ^ D.bit(b)) in D


def _interlaced_bits(D: DeltaMatroid, f: int, ia: int, ib: int) -> bool:
    na = (f ^ (1 << ia)) in D
    nb = (f ^ (1 << ib)) in D
    paired = (f ^ (1 << ia) ^ (1 << ib)) in D
    if na and nb:
        return not paired
    return paired


def is_interlaced(D: DeltaMatroid, F: Subset, a: str, b: str) -> bool:
    f = _require_feasible(D, F)
    if a == b:
        raise ValueError("interlacement needs two distinct elements")
    return _interlaced_bits(D, f, D.index(a), D.index(b))


def connectivity_characterization(D: DeltaMatroid, F: Subset, a: str, b: str) -> bool:
    """Whether ``(D * F) | {a, b}`` is connected and has a nonempty feasible set.

    Computed from minors and a bipartition search only, as an independent
    check on :func:`is_interlaced`.
    """
    f = _require_feasible(D, F)
    if a == b:
        raise ValueError("interlacement needs two distinct elements")
    twisted = twist(D, f)
    keep = twisted.bit(a) | twisted.bit(b)
    small = minor(twisted, 0, twisted.full & ~keep)
    nontrivial = any(m for m in small.feasibles)
    return nontrivial and decompose(small) is None


def interlace_mask(D: DeltaMatroid, f: int, ia: int) -> int:
    """Mask of the elements F-interlaced with the element at index ``ia``."""
    out = 0
    for ib in range(D.n):
        if ib != ia and _interlaced_bits(D, f, ia, ib):
            out |= 1 << ib
    return out


def interlace_set(D: DeltaMatroid, F: Subset, a: str) -> int:
    f = _require_feasible(D, F)
    return interlace_mask(D, f, D.index(a))


@dataclass(frozen=True)
class InterlaceGraph:
    """The fundamental graph: vertices are ground elements, edges join interlaced pairs."""

    names: tuple[str, ...]
    neighbors: tuple[int, ...]  # neighbors[i] is a mask over ground indices

    def adjacent(self, a: str, b: str) -> bool:
        return bool(self.neighbors[self.names.index(a)] >> self.names.index(b) & 1)

    def neighborhood(self, a: str) -> tuple[str, ...]:
        m = self.neighbors[self.names.index(a)]
        return tuple(self.names[i] for i in iter_bits(m))

    def edges(self) -> list[tuple[str, str]]:
        out = []
        for i, m in enumerate(self.neighbors):
            for j in iter_bits(m):
                if i < j:
                    out.append((self.names[i], self.names[j]))
        return out


def fundamental_graph(D: DeltaMatroid, F: Subset) -> InterlaceGraph:
    f = _require_feasible(D, F)
    return InterlaceGraph(D.names, tuple(interlace_mask(D, f, i) for i in range(D.n)))


def fundamental_circuit(M: DeltaMatroid, B: Subset, a: str) -> int:
    """The unique circuit in ``B + a`` for a matroid M with basis B and ``a`` outside B."""
    if not M.is_matroid():
        raise ValueError("fundamental circuits need a matroid")
    b = _require_feasible(M, B)
    abit = M.bit(a)
    if b & abit:
        raise ValueError(f"{a!r} lies in the basis")
    circuit = abit
    for i in iter_bits(b):
        if (b ^ (1 << i) ^ abit) in M:
            circuit |= 1 << i
    return circuit


def is_ribbon_loop(D: DeltaMatroid, a: str) -> bool:
    """``a`` lies in no minimum-size feasible set."""
    bit = D.bit(a)
    return not any(m & bit for m in min_feasibles(D))


def is_nonorientable_ribbon_loop(D: DeltaMatroid, a: str) -> bool:
    return is_ribbon_loop(D, a) and is_ribbon_loop(twist(D, D.bit(a)), a)
