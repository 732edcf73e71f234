"""Total orders, feasible-set activities and the deletion/contraction computation tree."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .core import DeltaMatroid, Subset, iter_bits, minor, popcount, singular_points
from .interlace import _require_feasible, interlace_mask


@dataclass(frozen=True)
class TotalOrder:
    """A total order on element labels, lowest first."""

    sequence: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.sequence)) != len(self.sequence):
            raise ValueError("order lists an element twice")

    def rank(self, name: str) -> int:
        return self.sequence.index(name)

    def ranks(self, names: Sequence[str]) -> tuple[int, ...]:
        pos = {name: i for i, name in enumerate(self.sequence)}
        try:
            return tuple(pos[name] for name in names)
        except KeyError as exc:
            raise ValueError(f"order does not mention {exc.args[0]!r}") from None


def make_order(D: DeltaMatroid, order: Sequence[str] | TotalOrder | None = None) -> TotalOrder:
    """Validate ``order`` against the ground set; ``None`` means declaration order."""
    if order is None:
        return TotalOrder(D.names)
    if not isinstance(order, TotalOrder):
        order = TotalOrder(tuple(order))
    if sorted(order.sequence) != sorted(D.names):
        raise ValueError("order must list every ground element exactly once")
    return order


class PointClass(NamedTuple):
    internal: bool
    active: bool
    orientable: bool


def _lower_masks(ranks: Sequence[int]) -> list[int]:
    n = len(ranks)
    out = []
    for i in range(n):
        m = 0
        for j in range(n):
            if ranks[j] < ranks[i]:
                m |= 1 << j
        out.append(m)
    return out


def classify_point(D: DeltaMatroid, F: Subset, order, a: str) -> PointClass:
    f = _require_feasible(D, F)
    order = make_order(D, order)
    ia = D.index(a)
    ranks = order.ranks(D.names)
    lower = _lower_masks(ranks)[ia]
    active = not (interlace_mask(D, f, ia) & lower)
    return PointClass(bool(f >> ia & 1), active, (f ^ (1 << ia)) not in D)


class FeasibleProfile(NamedTuple):
    """Order-independent interlacement data for one feasible set."""

    feasible: int
    interlace: tuple[int, ...]
    orientable: int  # mask of F-orientable elements


def feasible_profiles(D: DeltaMatroid) -> list[FeasibleProfile]:
    out = []
    for f in D.feasibles:
        orientable = 0
        for i in range(D.n):
            if (f ^ (1 << i)) not in D:
                orientable |= 1 << i
        out.append(FeasibleProfile(f, tuple(interlace_mask(D, f, i) for i in range(D.n)), orientable))
    return out


def active_mask(profile: FeasibleProfile, lower: Sequence[int]) -> int:
    m = 0
    for i, nbrs in enumerate(profile.interlace):
        if not nbrs & lower[i]:
            m |= 1 << i
    return m


def counts_from_profile(profile: FeasibleProfile, lower: Sequence[int]) -> tuple[int, int]:
    good = active_mask(profile, lower) & profile.orientable
    f = profile.feasible
    return popcount(good & f), popcount(good & ~f)


def activity_counts(D: DeltaMatroid, F: Subset, order=None) -> tuple[int, int]:
    """``(i, j)``: internal resp. external points that are active and orientable."""
    f = _require_feasible(D, F)
    order = make_order(D, order)
    lower = _lower_masks(order.ranks(D.names))
    profile = FeasibleProfile(f, tuple(interlace_mask(D, f, i) for i in range(D.n)),
                              sum(1 << i for i in range(D.n) if (f ^ (1 << i)) not in D))
    return counts_from_profile(profile, lower)


def all_activity_counts(D: DeltaMatroid, order=None, profiles=None) -> dict[int, tuple[int, int]]:
    order = make_order(D, order)
    lower = _lower_masks(order.ranks(D.names))
    if profiles is None:
        profiles = feasible_profiles(D)
    return {p.feasible: counts_from_profile(p, lower) for p in profiles}


# -- computation tree -------------------------------------------------------

@dataclass(frozen=True)
class LeafStats:
    contracted: int
    deleted: int
    coloops: int
    loops: int

    def covered_feasible(self) -> int:
        return self.coloops | self.contracted


@dataclass
class TreeNode:
    dm: DeltaMatroid
    contracted: int  # root-indexed masks
    deleted: int
    pivot: str | None = None
    delete_child: "TreeNode | None" = None
    contract_child: "TreeNode | None" = None
    stats: LeafStats | None = None

    @property
    def is_leaf(self) -> bool:
        return self.pivot is None

    def covers(self, mask: int, root_index: dict[str, int]) -> bool:
        ground = _lift(self.dm, self.dm.full, root_index)
        return self.contracted & ~mask == 0 and mask & ~(self.contracted | ground) == 0


@dataclass
class ComputationTree:
    root: TreeNode
    order: TotalOrder
    names: tuple[str, ...] = field(default=())

    def nodes(self) -> Iterator[TreeNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if not node.is_leaf:
                stack.append(node.contract_child)
                stack.append(node.delete_child)

    def leaves(self) -> list[TreeNode]:
        return [n for n in self.nodes() if n.is_leaf]

    def root_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}


def _lift(dm: DeltaMatroid, mask: int, root_index: dict[str, int]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << root_index[dm.names[i]]
    return out


def _pivot(dm: DeltaMatroid, rank: dict[str, int]) -> str | None:
    loops, coloops = singular_points(dm)
    free = dm.full & ~(loops | coloops)
    if not free:
        return None
    return max((dm.names[i] for i in iter_bits(free)), key=rank.__getitem__)


def _leaf_stats(dm: DeltaMatroid, contracted: int, deleted: int, root_index) -> LeafStats:
    loops, coloops = singular_points(dm)
    return LeafStats(contracted, deleted, _lift(dm, coloops, root_index), _lift(dm, loops, root_index))


def build_tree(D: DeltaMatroid, order=None) -> ComputationTree:
    order = make_order(D, order)
    rank = {name: i for i, name in enumerate(order.sequence)}
    root_index = {name: i for i, name in enumerate(D.names)}

    def grow(dm: DeltaMatroid, contracted: int, deleted: int) -> TreeNode:
        node = TreeNode(dm, contracted, deleted)
        pivot = _pivot(dm, rank)
        if pivot is None:
            node.stats = _leaf_stats(dm, contracted, deleted, root_index)
            return node
        node.pivot = pivot
        bit = dm.bit(pivot)
        rbit = 1 << root_index[pivot]
        node.delete_child = grow(minor(dm, 0, bit), contracted, deleted | rbit)
        node.contract_child = grow(minor(dm, bit, 0), contracted | rbit, deleted)
        return node

    return ComputationTree(grow(D, 0, 0), order, D.names)


def leaf_for(D: DeltaMatroid, order, F: Subset) -> LeafStats:
    """Walk from the root to the unique leaf covering F, materialising only that path."""
    f = D.mask(F)
    return leaf_for_subset(D, order, f, require_feasible=True)


def leaf_for_subset(D: DeltaMatroid, order, A: int, require_feasible: bool = False) -> LeafStats:
    if require_feasible and A not in D:
        raise ValueError("not a feasible set")
    order = make_order(D, order)
    rank = {name: i for i, name in enumerate(order.sequence)}
    root_index = {name: i for i, name in enumerate(D.names)}
    dm, contracted, deleted = D, 0, 0
    while True:
        pivot = _pivot(dm, rank)
        if pivot is None:
            return _leaf_stats(dm, contracted, deleted, root_index)
        rbit = 1 << root_index[pivot]
        if A & rbit:
            dm, contracted = minor(dm, dm.bit(pivot), 0), contracted | rbit
        else:
            dm, deleted = minor(dm, 0, dm.bit(pivot)), deleted | rbit


def core_identity_failures(D: DeltaMatroid, order=None) -> list[tuple[int, str]]:
    """Feasible sets (with the violated identity) where leaf data and activities disagree."""
    order = make_order(D, order)
    counts = all_activity_counts(D, order)
    n = D.n
    bad = []
    for f in D.feasibles:
        leaf = leaf_for(D, order, f)
        i, j = counts[f]
        size = popcount(f)
        if popcount(leaf.coloops) != i:
            bad.append((f, "coloops != i"))
        if popcount(leaf.loops) != j:
            bad.append((f, "loops != j"))
        if popcount(leaf.contracted) + popcount(leaf.coloops) != size:
            bad.append((f, "contracted + coloops != |F|"))
        if popcount(leaf.deleted) != n - size - j:
            bad.append((f, "deleted != |E| - |F| - j"))
    return bad


def check_core_identities(D: DeltaMatroid, order=None) -> bool:
    return not core_identity_failures(D, order)


def render_tree(tree: ComputationTree, indent: str = "  ") -> str:
    """Indented text: one node per line, prefixed by its ``/a`` or ``∖a`` edge."""
    lines = []

    def walk(node: TreeNode, depth: int, edge: str):
        prefix = indent * depth + (edge + " " if edge else "")
        lines.append(prefix + node.dm.label())
        if not node.is_leaf:
            walk(node.contract_child, depth + 1, "/" + node.pivot)
            walk(node.delete_child, depth + 1, "∖" + node.pivot)

    walk(tree.root, 0, "")
    return "\n".join(lines) + "\n"
