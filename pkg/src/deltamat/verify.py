"""Named property suites: exhaustive small corpora plus seeded random instances.

Each suite checks one identity over a corpus and reports how many instances
were checked, how many failed, and the first counterexample in a form that
can be fed straight back into the CLI.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .activities import _lift, build_tree, classify_point, core_identity_failures, leaf_for, make_order
from .core import DeltaMatroid, iter_bits, min_feasibles, serialize_dm, singular_points, twist
from .engines import (
    Method,
    br_two,
    interlace_one_shifted,
    interlace_two,
    polyrel_sides,
    transition_all_orders_activities,
    transition_leaf_sum,
    transition_z0,
    verify_relation,
)
from .interlace import fundamental_circuit, interlace_set, is_interlaced, is_nonorientable
from .generate import enumerate_up_to, random_corpus, random_order, random_ribbon
from .ribbon import graphic_dm, partial_dual, ribbonchar_failures, serialize_ribbon, twistdual_holds

DEFAULT_SEED = 0
RANDOM_SIZES = range(5, 9)


@dataclass
class SuiteConfig:
    seed: int = DEFAULT_SEED
    trials: int = 20
    size: int = 3
    exhaustive: bool = False
    orders: int = 5
    max_edges: int = 5


@dataclass
class SuiteReport:
    suite: str
    seed: int
    checked: int = 0
    failed: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, describe: Callable[[], str]):
        self.checked += 1
        if not ok:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = describe()

    def render(self) -> str:
        lines = [f"suite: {self.suite}", f"seed: {self.seed}",
                 f"checked: {self.checked}", f"passed: {self.checked - self.failed}",
                 f"failed: {self.failed}"]
        lines += self.notes
        if self.counterexample is not None:
            lines.append("first counterexample:")
            lines.append(self.counterexample.rstrip("\n"))
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


# -- corpora --------------------------------------------------------------------

def dm_corpus(cfg: SuiteConfig) -> Iterator[tuple[DeltaMatroid, bool]]:
    """(D, exhaustive?) pairs: all delta-matroids up to cfg.size, then random ones."""
    if cfg.exhaustive:
        for D in enumerate_up_to(min(cfg.size, 4)):
            yield D, True
    for D in random_corpus(cfg.seed, cfg.trials, RANDOM_SIZES):
        yield D, False


def matroid_corpus(cfg: SuiteConfig) -> Iterator[tuple[DeltaMatroid, bool]]:
    """Equicardinal delta-matroids: exhaustive ones, then the minimum-size layer of random ones."""
    seen = set()
    for D, exhaustive in dm_corpus(cfg):
        if exhaustive:
            if D.is_matroid():
                yield D, True
            continue
        M = DeltaMatroid.unchecked(D.names, min_feasibles(D))
        if M.key() not in seen:
            seen.add(M.key())
            yield M, False


def orders_for(D: DeltaMatroid, exhaustive: bool, rng: random.Random, count: int) -> list[tuple[str, ...]]:
    if exhaustive:
        return [tuple(p) for p in itertools.permutations(D.names)]
    return [random_order(rng, D.names) for _ in range(count)]


def _dm_text(D: DeltaMatroid, order=None) -> str:
    return serialize_dm(D, order)


# -- delta-matroid suites ---------------------------------------------------------

def suite_transfeas(cfg: SuiteConfig, report: SuiteReport):
    """Direct, deletion-contraction and activities transition polynomials agree, for every order."""
    rng = random.Random(f"orders:{cfg.seed}")
    for D, exhaustive in dm_corpus(cfg):
        orders = orders_for(D, exhaustive, rng, cfg.orders)
        direct = transition_z0(D, Method.DIRECT)
        by_activities = transition_all_orders_activities(D, orders)
        for order, act in zip(orders, by_activities):
            dc = transition_z0(D, Method.DELETION_CONTRACTION, order)
            report.record(act == direct and dc == direct, lambda: _dm_text(D, order))


def suite_order_invariance(cfg: SuiteConfig, report: SuiteReport):
    """The activities expansion gives the same polynomial under every order."""
    rng = random.Random(f"orders:{cfg.seed}")
    for D, exhaustive in dm_corpus(cfg):
        orders = orders_for(D, exhaustive, rng, max(cfg.orders, 10))
        polys = transition_all_orders_activities(D, orders)
        first = polys[0]
        bad = next((o for o, p in zip(orders, polys) if p != first), None)
        report.record(bad is None, lambda: _dm_text(D, bad))


def _relation_suite(relation: str, corpus=dm_corpus):
    def run(cfg: SuiteConfig, report: SuiteReport):
        rng = random.Random(f"orders:{cfg.seed}")
        for D, exhaustive in corpus(cfg):
            order = D.names if exhaustive else random_order(rng, D.names)
            report.record(verify_relation(D, relation, order), lambda: _dm_text(D, order))
    run.__doc__ = f"verify_relation(D, {relation!r}) on every instance of the corpus."
    return run


def suite_circuit_interlace(cfg: SuiteConfig, report: SuiteReport):
    """On matroids, I(B;a) is the fundamental circuit of a minus a (cocircuit when a is in B)."""
    for M, _ in matroid_corpus(cfg):
        dual = twist(M, M.full)
        for b in M.feasibles:
            for a in M.names:
                bit = M.bit(a)
                if b & bit:
                    circuit = fundamental_circuit(dual, M.full & ~b, a)
                else:
                    circuit = fundamental_circuit(M, b, a)
                report.record(interlace_set(M, b, a) == circuit & ~bit,
                              lambda: _dm_text(M) + f"# basis: {' '.join(M.subset_names(b)) or '-'}; point {a}\n")


def suite_leaf_sum(cfg: SuiteConfig, report: SuiteReport):
    """The leaf sum of the computation tree equals the direct transition polynomial."""
    rng = random.Random(f"orders:{cfg.seed}")
    for D, exhaustive in dm_corpus(cfg):
        order = D.names if exhaustive else random_order(rng, D.names)
        ok = transition_leaf_sum(build_tree(D, order)) == transition_z0(D, Method.DIRECT)
        report.record(ok, lambda: _dm_text(D, order))


def tree_failures(D: DeltaMatroid, order) -> list[str]:
    """Structural properties of the computation tree, as a list of violated ones.

    Checked at every node D' (contracted set C, ground E'): feasibility in D'
    lifts to D via F' -> F' | C; pivots are nonsingular and leaves are all
    singular; two covered feasible sets differing at a force a to be
    nonsingular; F-interlaced pairs with an F-orientable member are both
    nonsingular in any node covering F.  Over the leaves: every subset of E is
    covered by exactly one leaf, each leaf covers exactly one feasible set,
    namely contracted | coloops, and the ground set of that leaf is the set of
    active orientable points of F.  Finally the counting identities.
    """
    order = make_order(D, order)
    tree = build_tree(D, order)
    root_index = tree.root_index()
    bad = []
    leaves = tree.leaves()
    for node in tree.nodes():
        ground = _lift(node.dm, node.dm.full, root_index)
        loops, coloops = singular_points(node.dm)
        if node.is_leaf:
            if loops | coloops != node.dm.full:
                bad.append("leaf has a nonsingular point")
        elif node.dm.bit(node.pivot) & (loops | coloops):
            bad.append("pivot is singular")
        for sub in range(1 << node.dm.n):
            lifted = _lift(node.dm, sub, root_index) | node.contracted
            if (sub in node.dm) != (lifted in D):
                bad.append("node feasibility does not lift")
                break
        covered = [f for f in D.feasibles if node.covers(f, root_index)]
        nonsingular = _lift(node.dm, node.dm.full & ~(loops | coloops), root_index)
        for i in iter_bits(ground):
            bit = 1 << i
            has = any(f & bit for f in covered)
            lacks = any(not f & bit for f in covered)
            if has and lacks and not nonsingular & bit:
                bad.append("split point is singular")
        for f in covered:
            for i, j in itertools.combinations(iter_bits(ground), 2):
                a, b = D.names[i], D.names[j]
                if not is_interlaced(D, f, a, b):
                    continue
                if is_nonorientable(D, f, a) and is_nonorientable(D, f, b):
                    continue
                if not nonsingular >> i & 1 or not nonsingular >> j & 1:
                    bad.append("interlaced pair is singular")
    for sub in range(1 << D.n):
        if sum(1 for leaf in leaves if leaf.covers(sub, root_index)) != 1:
            bad.append("subset not covered by exactly one leaf")
            break
    for leaf in leaves:
        covered = [f for f in D.feasibles if leaf.covers(f, root_index)]
        if covered != [leaf.stats.covered_feasible()]:
            bad.append("leaf does not cover exactly contracted | coloops")
    for f in D.feasibles:
        stats = leaf_for(D, order, f)
        ground = D.full & ~(stats.contracted | stats.deleted)
        good = 0
        for name in D.names:
            cls = classify_point(D, f, order, name)
            if cls.active and cls.orientable:
                good |= D.bit(name)
        if good != ground:
            bad.append("leaf ground set is not the active orientable points")
    bad += [f"identity {what}" for _, what in core_identity_failures(D, order)]
    return bad


def suite_tree(cfg: SuiteConfig, report: SuiteReport):
    """Leaf/feasible-set bijection, singular leaves, nonsingular pivots and the counting identities."""
    rng = random.Random(f"orders:{cfg.seed}")
    for D, exhaustive in dm_corpus(cfg):
        order = D.names if exhaustive else random_order(rng, D.names)
        report.record(not tree_failures(D, order), lambda: _dm_text(D, order))


def suite_interlace(cfg: SuiteConfig, report: SuiteReport):
    """Interlace polynomials: activities expansions and the specialisations of the transition polynomial."""
    rng = random.Random(f"orders:{cfg.seed}")
    for D, exhaustive in dm_corpus(cfg):
        order = D.names if exhaustive else random_order(rng, D.names)
        direct = interlace_two(D, Method.DIRECT)
        ok = (direct == interlace_two(D, Method.ACTIVITIES, order)
              == interlace_two(D, Method.VIA_RELATION)
              == interlace_two(D, Method.DELETION_CONTRACTION, order))
        ok = ok and (interlace_one_shifted(D, Method.ACTIVITIES, order)
                     == interlace_one_shifted(D, Method.DIRECT)
                     == interlace_one_shifted(D, Method.VIA_RELATION))
        report.record(ok, lambda: _dm_text(D, order))


def suite_polyrel(cfg: SuiteConfig, report: SuiteReport):
    """q(D; sqrt(y/x), sqrt(xy)) against the Bollobás-Riordan side."""
    for D, _ in dm_corpus(cfg):
        left, right = polyrel_sides(D)
        report.record(left == right, lambda: _dm_text(D))


def suite_three_to_two(cfg: SuiteConfig, report: SuiteReport):
    """The two-variable Bollobás-Riordan polynomial from the three-variable one."""
    for D, _ in dm_corpus(cfg):
        report.record(br_two(D, Method.DIRECT) == br_two(D, Method.VIA_THREE), lambda: _dm_text(D))


# -- ribbon suites -------------------------------------------------------------------

def ribbon_corpus(cfg: SuiteConfig):
    rng = random.Random(f"ribbon:{cfg.seed}")
    for _ in range(cfg.trials):
        m = rng.randint(1, cfg.max_edges)
        yield random_ribbon(rng, m)


def _ribbon_text(G, A=None) -> str:
    text = serialize_ribbon(G)
    if A is not None:
        text += "# edge subset: " + (" ".join(G.edges[i] for i in range(len(G.edges)) if A >> i & 1) or "-") + "\n"
    return text


def suite_twistdual(cfg: SuiteConfig, report: SuiteReport):
    """graphic_dm(partial_dual(G, A)) == twist(graphic_dm(G), A) for every edge subset A."""
    for G in ribbon_corpus(cfg):
        for a in range(1 << len(G.edges)):
            report.record(twistdual_holds(G, a), lambda: _ribbon_text(G, a))


def suite_ribbonchar(cfg: SuiteConfig, report: SuiteReport):
    """Partial duals at quasi-trees are one-vertex; alternation and twisting match the delta-matroid."""
    for G in ribbon_corpus(cfg):
        D = graphic_dm(G)
        for q in D.feasibles:
            report.record(not ribbonchar_failures(G, q), lambda: _ribbon_text(G, q))


def suite_quasitree_vertices(cfg: SuiteConfig, report: SuiteReport):
    """The partial dual over A has one vertex exactly when A is a quasi-tree."""
    for G in ribbon_corpus(cfg):
        D = graphic_dm(G)
        for a in range(1 << len(G.edges)):
            ok = (len(partial_dual(G, a).vertices) == 1) == (a in D)
            report.record(ok, lambda: _ribbon_text(G, a))


SUITES: dict[str, Callable[[SuiteConfig, SuiteReport], None]] = {
    "transfeas": suite_transfeas,
    "order-invariance": suite_order_invariance,
    "leaf-sum": suite_leaf_sum,
    "tree": suite_tree,
    "core-identities": _relation_suite("core_identities"),
    "connectivity": _relation_suite("connectivity"),
    "ribbon-loop": _relation_suite("ribbon_loop"),
    "circuit-interlace": suite_circuit_interlace,
    "matroid-activity": _relation_suite("matroid_activity", matroid_corpus),
    "matroid-tutte": _relation_suite("matroid_tutte", matroid_corpus),
    "br-activities": _relation_suite("br_activities"),
    "three-to-two": suite_three_to_two,
    "polyrel": suite_polyrel,
    "interlace": suite_interlace,
    "twistdual": suite_twistdual,
    "ribbonchar": suite_ribbonchar,
    "quasitree-vertices": suite_quasitree_vertices,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(name)
    cfg = cfg or SuiteConfig()
    report = SuiteReport(name, cfg.seed)
    SUITES[name](cfg, report)
    return report


def suite_names() -> Iterable[str]:
    return sorted(SUITES)
