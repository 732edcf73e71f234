"""Acceptance suite: nine criteria, each printed as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the criterion lines are
written straight to the terminal (past pytest's capture) so they also show
up in ``test_output.txt``.
"""

from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager
from itertools import combinations, permutations

import pytest

import oracles
from conftest import family, fig2_dm, poly_from_counter
from deltamat.activities import build_tree, render_tree
from deltamat.adjacency import adjacency_dm
from deltamat.core import DeltaMatroid, validate
from deltamat.engines import (
    TRANSITION_VARS,
    Method,
    br_two,
    expand_shifted,
    singular_base,
    transition_z0,
    tutte_activities,
    tutte_oracle,
)
from deltamat.generate import enumerate_up_to, random_corpus, random_graph, random_order
from deltamat.poly import LaurentHalfPoly, canonical_string
from deltamat.ribbon import FIGURE_ONE, boundary_count, graphic_dm, parse_ribbon, partial_dual, theta_graph
from deltamat.verify import SuiteConfig, ribbon_corpus, run_suite, tree_failures

# Figure 2: the computation tree of (abc, P(abc) - {a}) under a < b < c
FIGURE_TWO_TREE = """\
(abc,{abc,ab,ac,bc,b,c,∅})
  /c (ab,{ab,a,b,∅})
    /b (a,{a,∅})
      /a (∅,{∅})
      ∖a (∅,{∅})
    ∖b (a,{a,∅})
      /a (∅,{∅})
      ∖a (∅,{∅})
  ∖c (ab,{ab,b,∅})
    /b (a,{a,∅})
      /a (∅,{∅})
      ∖a (∅,{∅})
    ∖b (a,{∅})
"""

TRANSITION_METHODS = ("direct", "deletion_contraction", "activities", "via_relation")


@pytest.fixture
def criterion(capsys):
    """Yield a recorder; print 'criterion N: PASS|FAIL - title (details)' when the test ends."""

    @contextmanager
    def run(number, title):
        details = []
        start = time.perf_counter()
        ok = False
        try:
            yield details
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            info = "; ".join(details + [f"{elapsed:.1f}s"])
            with capsys.disabled():
                print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} - {title} ({info})")

    return run


def _assert_suite(details, name, cfg, expected_checked=None):
    report = run_suite(name, cfg)
    details.append(f"{name}: {report.checked - report.failed}/{report.checked}")
    assert report.ok, report.render()
    if expected_checked is not None:
        assert report.checked == expected_checked
    return report


def test_criterion_1_three_method_transition(criterion):
    with criterion(1, "direct = deletion-contraction = activities transition polynomial") as details:
        exhaustive_pairs = sum(len(list(permutations(D.names))) for D in enumerate_up_to(4))
        start = time.perf_counter()
        cfg = SuiteConfig(seed=0, trials=200, size=4, exhaustive=True, orders=5)
        _assert_suite(details, "transfeas", cfg, exhaustive_pairs + 200 * 5)
        assert time.perf_counter() - start < 300


def test_criterion_2_figure_two_tree(criterion):
    with criterion(2, "computation tree of Figure 2") as details:
        tree = build_tree(fig2_dm(), "abc")
        assert render_tree(tree) == FIGURE_TWO_TREE
        assert len(tree.leaves()) == 7
        details.append("exact match, 7 leaves")


def test_criterion_3_base_cases(criterion):
    with criterion(3, "coloops and loops give (x+wy)^c (w+xy)^l") as details:
        mono = lambda **e: LaurentHalfPoly.monomial(TRANSITION_VARS, e)  # noqa: E731
        checked = 0
        for c, l in itertools.product(range(4), repeat=2):
            names = [f"c{i}" for i in range(c)] + [f"l{i}" for i in range(l)]
            D = DeltaMatroid(names, [[f"c{i}" for i in range(c)]])
            expected = (mono(x=1) + mono(w=1, y=1)) ** c * (mono(w=1) + mono(x=1, y=1)) ** l
            assert expected == poly_from_counter(TRANSITION_VARS, oracles.transition_z0(names, family(D)))
            assert singular_base(c, l) == expected
            for method in TRANSITION_METHODS:
                assert transition_z0(D, method) == expected
                checked += 1
        details.append(f"{checked} (c, l, method) cases")


def test_criterion_4_matroid_reduction(criterion):
    with criterion(4, "br_two(activities) = br_two(direct) = Tutte on matroids") as details:
        matroids = [D for D in enumerate_up_to(4) if D.is_matroid()]
        for M in matroids:
            T = tutte_oracle(M)
            assert br_two(M, Method.DIRECT) == T
            assert expand_shifted(T) == poly_from_counter(("x", "y"), oracles.tutte(M.names, family(M)))
            for order in permutations(M.names):
                assert br_two(M, Method.ACTIVITIES, order) == T
                assert tutte_activities(M, order) == expand_shifted(T)
        xy = lambda **e: LaurentHalfPoly.monomial(("x", "y"), e)  # noqa: E731
        u23 = DeltaMatroid("abc", [list(p) for p in combinations("abc", 2)])
        assert xy(x=2) + xy(x=1) + xy(y=1) == poly_from_counter(("x", "y"), oracles.tutte("abc", family(u23)))
        for method in (Method.DIRECT, Method.ACTIVITIES, Method.VIA_THREE):
            assert expand_shifted(br_two(u23, method)) == xy(x=2) + xy(x=1) + xy(y=1)
        # spanning trees of the triangle with edges a = 12, b = 23, c = 13
        triangle = DeltaMatroid("abc", [list(p) for p in combinations("abc", 2)])
        expected = poly_from_counter(("x", "y"), oracles.tutte_dc([(1, 2), (2, 3), (1, 3)]))
        for method in (Method.DIRECT, Method.ACTIVITIES):
            assert expand_shifted(br_two(triangle, method)) == expected
        details.append(f"{len(matroids)} matroids with |E| <= 4, U(2,3) = x^2 + x + y, "
                       f"triangle = {canonical_string(expected)}")


def test_criterion_5_order_invariance(criterion):
    with criterion(5, "activities transition polynomial is order independent") as details:
        exhaustive_pairs = sum(1 for _ in enumerate_up_to(4))
        cfg = SuiteConfig(seed=0, trials=50, size=4, exhaustive=True, orders=10)
        _assert_suite(details, "order-invariance", cfg, exhaustive_pairs + 50)


def test_criterion_6_ribbon_suite(criterion):
    with criterion(6, "ribbon graphs: partial duals, quasi-trees, alternation") as details:
        start = time.perf_counter()
        cfg = SuiteConfig(seed=0, trials=100, max_edges=5)
        _assert_suite(details, "twistdual", cfg)
        _assert_suite(details, "quasitree-vertices", cfg)
        _assert_suite(details, "ribbonchar", cfg)
        # the graphic delta-matroids above, recomputed with the independent face tracer
        def traced(H):
            return {frozenset(A) for A in oracles.powerset(H.edges)
                    if oracles.face_count(H.vertices, H.rotations, H.signs, A) == 1}

        for G in ribbon_corpus(cfg):
            base = traced(G)
            for A in oracles.powerset(G.edges):
                assert traced(partial_dual(G, list(A))) == oracles.twist(base, A)
        G = parse_ribbon(FIGURE_ONE)
        assert graphic_dm(G).is_feasible(["a", "b"])
        assert boundary_count(G, ["a", "c"]).count == 3
        details.append("Figure 1 fixture ok")
        assert time.perf_counter() - start < 120


def test_criterion_7_structural_lemmas(criterion):
    with criterion(7, "structural properties of interlacement, activities and the tree") as details:
        cfg = SuiteConfig(seed=0, trials=40, size=4, exhaustive=True)
        for name in ("ribbon-loop", "connectivity", "circuit-interlace", "matroid-activity",
                     "leaf-sum", "tree", "core-identities"):
            _assert_suite(details, name, cfg)
        # the tree properties under every order, exhaustively up to three elements
        pairs = 0
        for D in enumerate_up_to(3):
            for order in permutations(D.names):
                assert tree_failures(D, order) == []
                pairs += 1
        rng = random.Random(7)
        for D in random_corpus(7, 20, range(5, 8)):
            for _ in range(3):
                assert tree_failures(D, random_order(rng, D.names)) == []
        details.append(f"tree under all orders: {pairs} pairs")


def test_criterion_8_relations(criterion):
    with criterion(8, "polynomial relations after substitution") as details:
        exhaustive = sum(1 for _ in enumerate_up_to(3))
        cfg = SuiteConfig(seed=0, trials=50, size=3, exhaustive=True)
        for name in ("three-to-two", "polyrel", "interlace", "br-activities"):
            _assert_suite(details, name, cfg, exhaustive + 50)


def test_criterion_9_constructors(criterion):
    with criterion(9, "adjacency and graphic constructors") as details:
        rng = random.Random(9)
        for k in range(200):
            n = rng.randint(1, 10)
            G = random_graph(rng, n, p_edge=rng.uniform(0.2, 0.8))
            D = adjacency_dm(G)
            assert validate(D.names, D.feasibles)
            if n <= 7:
                pairs = [tuple(p) for p in G.edges]
                assert family(D) == oracles.adjacency_family(G.vertices, pairs, G.loops)
            H = random_graph(rng, n, loops=False)
            assert all(f.bit_count() % 2 == 0 for f in adjacency_dm(H).feasibles)
        theta = graphic_dm(theta_graph())
        assert theta == DeltaMatroid("abc", [["a"], ["b"], ["c"]])
        expected = poly_from_counter(("x", "y"), oracles.tutte_dc([(1, 2), (1, 2), (1, 2)]))
        assert expand_shifted(br_two(theta)) == expected == expand_shifted(tutte_oracle(theta))
        details.append(f"200 random graphs; theta Tutte = {canonical_string(expected)}")
