"""Delta-matroids over small ground sets.

Subsets of the ground set are plain ``int`` bitmasks: bit ``i`` stands for the
element ``names[i]``.  Feasible families are stored sorted by ``(size, mask)``
so that equality and hashing are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

MAX_GROUND = 64
MAX_CONNECTIVITY_GROUND = 16

Subset = Union[int, Iterable[str]]


class FormatError(ValueError):
    """Raised when a text input (.dm, .graph, .ribbon) cannot be parsed."""


class CapExceeded(ValueError):
    """Raised when an exponential computation is asked for a ground set above its cap."""


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _family_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def _check_names(names: Sequence[str]) -> tuple[str, ...]:
    names = tuple(names)
    if len(names) > MAX_GROUND:
        raise ValueError(f"ground set has {len(names)} elements; at most {MAX_GROUND} supported")
    for name in names:
        if not isinstance(name, str) or not name or any(ch.isspace() for ch in name):
            raise ValueError(f"invalid element label {name!r}")
    if len(set(names)) != len(names):
        raise ValueError("duplicate element labels")
    return names


class DeltaMatroid:
    """A ground set of named elements together with its feasible sets.

    The constructor validates the symmetric exchange axiom; use
    :meth:`unchecked` for families already known to be delta-matroids
    (twists and minors of valid input).
    """

    __slots__ = ("names", "feasibles", "_family", "_index")

    def __init__(self, names: Sequence[str], family: Iterable[Subset], check: bool = True):
        names = _check_names(names)
        index = {name: i for i, name in enumerate(names)}
        masks = set()
        for member in family:
            masks.add(_to_mask(member, index, len(names)))
        if not masks:
            raise ValueError("no feasible sets")
        if check and not _exchange_holds(masks, len(names)):
            raise ValueError("family violates the symmetric exchange axiom")
        self._init(names, masks, index)

    def _init(self, names, masks, index=None):
        self.names = names
        self._family = frozenset(masks)
        self.feasibles = tuple(sorted(self._family, key=_family_key))
        self._index = index if index is not None else {name: i for i, name in enumerate(names)}

    @classmethod
    def unchecked(cls, names: Sequence[str], masks: Iterable[int]) -> "DeltaMatroid":
        obj = cls.__new__(cls)
        masks = set(masks)
        if not masks:
            raise ValueError("no feasible sets")
        obj._init(tuple(names), masks)
        return obj

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        return (1 << len(self.names)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown element {name!r}") from None

    def bit(self, name: str) -> int:
        return 1 << self.index(name)

    def mask(self, subset: Subset) -> int:
        return _to_mask(subset, self._index, len(self.names))

    def subset_names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[i] for i in iter_bits(mask))

    def is_feasible(self, subset: Subset) -> bool:
        return self.mask(subset) in self._family

    def __contains__(self, mask: int) -> bool:
        return mask in self._family

    def __len__(self) -> int:
        return len(self.feasibles)

    def __iter__(self) -> Iterator[int]:
        return iter(self.feasibles)

    def is_matroid(self) -> bool:
        return len({popcount(f) for f in self.feasibles}) == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, DeltaMatroid):
            return NotImplemented
        return self.names == other.names and self.feasibles == other.feasibles

    def __hash__(self) -> int:
        return hash((self.names, self.feasibles))

    def key(self) -> tuple:
        """Canonical hashable form, used as a memo key."""
        return (self.names, self.feasibles)

    def label(self) -> str:
        """Compact ``(ground,{F1,F2,...})`` label, largest sets first."""
        ordered = sorted(self.feasibles, key=lambda m: (-popcount(m), _lex_key(m, self.n)))
        sets = ",".join(compact_subset(self.names, m) for m in ordered)
        return f"({compact_subset(self.names, self.full)},{{{sets}}})"

    def __repr__(self) -> str:
        fam = ", ".join("{" + ",".join(self.subset_names(m)) + "}" for m in self.feasibles)
        return f"DeltaMatroid({list(self.names)}, [{fam}])"


def _lex_key(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if mask >> i & 1)


def compact_subset(names: Sequence[str], mask: int) -> str:
    if mask == 0:
        return "∅"
    members = [names[i] for i in iter_bits(mask)]
    sep = "" if all(len(m) == 1 for m in names) else " "
    return sep.join(members)


def _to_mask(subset: Subset, index: dict, n: int) -> int:
    if isinstance(subset, (int, np.integer)):
        mask = int(subset)
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} has bits outside the ground set")
        return mask
    if isinstance(subset, str):
        subset = [subset]
    mask = 0
    for name in subset:
        if name not in index:
            raise KeyError(f"unknown element {name!r}")
        mask |= 1 << index[name]
    return mask


# -- the exchange axiom -----------------------------------------------------

def _partner_masks(family, n: int) -> dict[int, list[int]]:
    """For each feasible X and element a, the mask of b with X ^ {a,b} feasible."""
    partners = {}
    for x in family:
        row = []
        for a in range(n):
            xa = x ^ (1 << a)
            m = 0
            for b in range(n):
                target = xa ^ (1 << b) if b != a else xa
                if target in family:
                    m |= 1 << b
            row.append(m)
        partners[x] = row
    return partners


def _exchange_holds(family, n: int) -> bool:
    family = family if isinstance(family, (set, frozenset)) else set(family)
    partners = _partner_masks(family, n)
    if len(family) > 96:
        return _exchange_holds_numpy(family, n, partners)
    members = list(family)
    for x in members:
        row = partners[x]
        for y in members:
            diff = x ^ y
            d = diff
            while d:
                low = d & -d
                if not row[low.bit_length() - 1] & diff:
                    return False
                d ^= low
    return True


def _exchange_holds_numpy(family, n: int, partners) -> bool:
    members = sorted(family)
    ys = np.array(members, dtype=np.uint64)
    table = np.array([partners[x] for x in members], dtype=np.uint64)  # (|F|, n)
    chunk = max(1, 2_000_000 // len(members))
    for start in range(0, len(members), chunk):
        xs = ys[start:start + chunk]
        diff = xs[:, None] ^ ys[None, :]
        rows = table[start:start + chunk]
        for a in range(n):
            has_a = (diff >> np.uint64(a)) & np.uint64(1)
            stuck = (rows[:, a][:, None] & diff) == 0
            if np.any(has_a.astype(bool) & stuck):
                return False
    return True


def validate(names: Sequence[str], family: Iterable[Subset]) -> bool:
    """Whether ``family`` satisfies the symmetric exchange axiom over ``names``."""
    names = _check_names(names)
    index = {name: i for i, name in enumerate(names)}
    masks = {_to_mask(m, index, len(names)) for m in family}
    if not masks:
        raise ValueError("no feasible sets")
    return _exchange_holds(masks, len(names))


# -- twist and minors -------------------------------------------------------

def twist(D: DeltaMatroid, X: Subset) -> DeltaMatroid:
    x = D.mask(X)
    if x == 0:
        return D
    return DeltaMatroid.unchecked(D.names, (x ^ f for f in D.feasibles))


def singular_points(D: DeltaMatroid) -> tuple[int, int]:
    """Return ``(loops, coloops)`` as masks."""
    inter = D.full
    union = 0
    for f in D.feasibles:
        inter &= f
        union |= f
    return D.full & ~union, inter


def nonsingular(D: DeltaMatroid) -> int:
    loops, coloops = singular_points(D)
    return D.full & ~(loops | coloops)


def _squeeze(mask: int, i: int) -> int:
    low = (1 << i) - 1
    return (mask & low) | ((mask >> (i + 1)) << i)


def _remove(names: tuple, family, i: int, contract: bool):
    bit = 1 << i
    has = [f for f in family if f & bit]
    hasnt = [f for f in family if not f & bit]
    if contract and not has:  # contracting a loop deletes it
        contract = False
    if not contract and not hasnt:  # deleting a coloop contracts it
        contract = True
    kept = has if contract else hasnt
    return names[:i] + names[i + 1:], {_squeeze(f, i) for f in kept}


def minor(D: DeltaMatroid, contract: Subset = 0, delete: Subset = 0) -> DeltaMatroid:
    """Contract ``contract`` and delete ``delete`` (loops/coloops per the usual conventions)."""
    c = D.mask(contract)
    d = D.mask(delete)
    if c & d:
        raise ValueError("contract and delete sets overlap")
    names, family = D.names, D.feasibles
    for i in reversed(range(D.n)):
        bit = 1 << i
        if bit & (c | d):
            names, family = _remove(names, family, i, contract=bool(bit & c))
    if names == D.names:
        return D
    return DeltaMatroid.unchecked(names, family)


def delete(D: DeltaMatroid, a: str) -> DeltaMatroid:
    return minor(D, 0, D.bit(a))


def contract(D: DeltaMatroid, a: str) -> DeltaMatroid:
    return minor(D, D.bit(a), 0)


def restrict(D: DeltaMatroid, A: Subset) -> DeltaMatroid:
    return minor(D, 0, D.full & ~D.mask(A))


# -- rank data --------------------------------------------------------------

@dataclass(frozen=True)
class RankProfile:
    r_min_full: int
    r_max_full: int

    @property
    def width(self) -> int:
        return self.r_max_full - self.r_min_full

    @property
    def two_sigma(self) -> int:
        return self.r_max_full + self.r_min_full

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.r_min_full, self.r_max_full, self.width, self.two_sigma)


def rank_profile(D: DeltaMatroid) -> RankProfile:
    # feasibles are sorted by size
    return RankProfile(popcount(D.feasibles[0]), popcount(D.feasibles[-1]))


def restricted_profile(D: DeltaMatroid, A: Subset) -> RankProfile:
    return rank_profile(restrict(D, A))


def distance(D: DeltaMatroid, A: Subset) -> int:
    """Minimum ``|F ^ A|`` over feasible F, i.e. the smallest feasible size of ``D * A``."""
    a = D.mask(A)
    return min((f ^ a).bit_count() for f in D.feasibles)


def min_feasibles(D: DeltaMatroid) -> list[int]:
    r = popcount(D.feasibles[0])
    return [f for f in D.feasibles if popcount(f) == r]


def min_rank(D: DeltaMatroid, A: Subset, bases: list[int] | None = None) -> int:
    """Rank of ``A`` in the matroid formed by the minimum-size feasible sets."""
    a = D.mask(A)
    if bases is None:
        bases = min_feasibles(D)
    return max((a & b).bit_count() for b in bases)


# -- connectivity and sums --------------------------------------------------

def decompose(D: DeltaMatroid) -> tuple[DeltaMatroid, DeltaMatroid] | None:
    """A witness ``(D1, D2)`` with ``D = D1 (+) D2``, or None when D is connected."""
    n = D.n
    if n < 1:
        raise ValueError("connectivity needs a nonempty ground set")
    if n > MAX_CONNECTIVITY_GROUND:
        raise CapExceeded(f"connectivity search is limited to {MAX_CONNECTIVITY_GROUND} elements")
    full = D.full
    size = len(D.feasibles)
    # element 0 always sits in the first block
    for rest in range(0, 1 << (n - 1)):
        left = (rest << 1) | 1
        if left == full:
            continue
        right = full & ~left
        lefts = {f & left for f in D.feasibles}
        rights = {f & right for f in D.feasibles}
        if len(lefts) * len(rights) == size:
            return _project(D, left, lefts), _project(D, right, rights)
    return None


def _project(D: DeltaMatroid, block: int, family) -> DeltaMatroid:
    idx = list(iter_bits(block))
    names = [D.names[i] for i in idx]
    masks = []
    for f in family:
        m = 0
        for j, i in enumerate(idx):
            if f >> i & 1:
                m |= 1 << j
        masks.append(m)
    return DeltaMatroid.unchecked(names, masks)


def is_connected(D: DeltaMatroid) -> bool:
    return decompose(D) is None


def direct_sum(D1: DeltaMatroid, D2: DeltaMatroid) -> DeltaMatroid:
    clash = set(D1.names) & set(D2.names)
    if clash:
        raise ValueError(f"ground sets share labels: {sorted(clash)}")
    shift = D1.n
    return DeltaMatroid.unchecked(
        D1.names + D2.names,
        (f1 | (f2 << shift) for f1 in D1.feasibles for f2 in D2.feasibles),
    )


# -- .dm text format --------------------------------------------------------

def parse_dm(text: str) -> tuple[DeltaMatroid, tuple[str, ...] | None]:
    """Parse ``.dm`` text; returns the delta-matroid and the optional ``order:`` line."""
    names = None
    order = None
    feasible_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise FormatError(f"line {lineno}: expected 'key: value'")
        key = key.strip()
        tokens = value.split()
        if key == "elements":
            if names is not None:
                raise FormatError(f"line {lineno}: duplicate 'elements' line")
            names = tokens
        elif key == "order":
            order = tuple(tokens)
        elif key == "feasible":
            feasible_lines.append((lineno, tokens))
        else:
            raise FormatError(f"line {lineno}: unknown key {key!r}")
    if names is None:
        raise FormatError("missing 'elements' line")
    try:
        names = _check_names(names)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    index = {name: i for i, name in enumerate(names)}
    family = set()
    for lineno, tokens in feasible_lines:
        if tokens == ["-"]:
            family.add(0)
            continue
        if not tokens or len(set(tokens)) != len(tokens):
            raise FormatError(f"line {lineno}: malformed feasible set")
        unknown = [t for t in tokens if t not in index]
        if unknown:
            raise FormatError(f"line {lineno}: unknown element(s) {unknown}")
        family.add(_to_mask(tokens, index, len(names)))
    if not family:
        raise FormatError("no feasible sets")
    if order is not None and sorted(order) != sorted(names):
        raise FormatError("'order' must list every element exactly once")
    try:
        D = DeltaMatroid(names, family)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return D, order


def serialize_dm(D: DeltaMatroid, order: Sequence[str] | None = None) -> str:
    lines = ["elements: " + " ".join(D.names)]
    if order is not None:
        lines.append("order: " + " ".join(order))
    for f in D.feasibles:
        lines.append("feasible: " + (" ".join(D.subset_names(f)) or "-"))
    return "\n".join(lines) + "\n"
