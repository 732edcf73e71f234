from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import family, poly_from_counter
from deltamat.core import DeltaMatroid, FormatError, twist
from deltamat.engines import br_two, expand_shifted
from deltamat.generate import random_ribbon
from deltamat.ribbon import (
    FIGURE_ONE,
    RibbonGraph,
    boundary_count,
    contract_edge,
    delete_edge,
    graphic_dm,
    parse_ribbon,
    partial_dual,
    ribbonchar_check,
    serialize_ribbon,
    theta_graph,
    twistdual_holds,
    vertex_alternation_interlaced,
)


def loop(sign):
    return RibbonGraph(["v"], {"v": [("e", 0), ("e", 1)]}, {"e": sign})


def one_vertex(sequence):
    rot = []
    seen = set()
    for e in sequence:
        rot.append((e, int(e in seen)))
        seen.add(e)
    return RibbonGraph(["v"], {"v": rot}, {e: 1 for e in dict.fromkeys(sequence)})


def random_graphs(seed, count, max_edges=5):
    rng = random.Random(seed)
    return [random_ribbon(rng, rng.randint(1, max_edges)) for _ in range(count)]


def same_up_to_vertex_names(G, H):
    def shape(X):
        rots = sorted(X.canonical()[0], key=lambda item: item[1])
        return [rot for _, rot in rots], X.canonical()[1]
    return shape(G) == shape(H)


# -- boundary components -------------------------------------------------------------

def test_empty_edge_set_gives_one_component_per_vertex():
    for G in random_graphs(1, 20):
        assert boundary_count(G, []).count == len(G.vertices)


def test_annulus_and_moebius_band():
    assert boundary_count(loop(1), ["e"]).count == 2
    assert boundary_count(loop(-1), ["e"]).count == 1


@given(st.integers(0, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_boundary_count_matches_face_tracing(seed):
    rng = random.Random(seed)
    G = random_ribbon(rng, rng.randint(1, 6))
    for a in range(1 << len(G.edges)):
        A = [G.edges[i] for i in range(len(G.edges)) if a >> i & 1]
        assert boundary_count(G, A).count == oracles.face_count(G.vertices, G.rotations, G.signs, A)


def test_orientable_euler_characteristic_is_even():
    for G in random_graphs(2, 40):
        if all(s == 1 for s in G.signs.values()):
            f = boundary_count(G, G.edges).count
            chi = len(G.vertices) - len(G.edges) + f
            assert chi <= 2 and chi % 2 == 0


# -- quasi-trees -----------------------------------------------------------------------

def test_figure_one():
    G = parse_ribbon(FIGURE_ONE)
    D = graphic_dm(G)
    assert D.is_feasible(["a", "b"])
    assert boundary_count(G, ["a", "c"]).count == 3
    assert vertex_alternation_interlaced(G, "a", "b")
    assert not vertex_alternation_interlaced(G, "a", "c")
    assert not vertex_alternation_interlaced(G, "b", "c")


def test_theta_graph_is_graphic_matroid():
    G = theta_graph()
    D = graphic_dm(G)
    assert D == DeltaMatroid("abc", [["a"], ["b"], ["c"]])
    assert boundary_count(G, G.edges).count == 3
    expected = poly_from_counter(("x", "y"), oracles.tutte_dc([(1, 2), (1, 2), (1, 2)]))
    assert expand_shifted(br_two(D)) == expected


def test_single_twisted_loop():
    assert graphic_dm(loop(-1)) == DeltaMatroid("e", [[], ["e"]])
    assert graphic_dm(loop(1)) == DeltaMatroid("e", [[]])


def test_graphic_dm_is_delta_matroid():
    for G in random_graphs(3, 30, 6):
        D = graphic_dm(G)
        assert oracles.sym_exchange(D.names, family(D))


# -- partial duality --------------------------------------------------------------------

def test_partial_dual_of_nothing_is_the_graph():
    for G in random_graphs(4, 30):
        H = partial_dual(G, [])
        assert same_up_to_vertex_names(G, H)


def test_partial_dual_over_quasi_tree_has_one_vertex():
    for G in random_graphs(5, 40):
        D = graphic_dm(G)
        for a in range(1 << len(G.edges)):
            assert (len(partial_dual(G, a).vertices) == 1) == (a in D)


def test_twist_duality_random():
    for G in random_graphs(6, 40):
        D = graphic_dm(G)
        for a in range(1 << len(G.edges)):
            assert graphic_dm(partial_dual(G, a)) == twist(D, a)
            assert twistdual_holds(G, a)


def test_partial_dual_twice_returns_delta_matroid():
    for G in random_graphs(7, 20):
        a = (1 << len(G.edges)) - 1
        assert graphic_dm(partial_dual(partial_dual(G, a), a)) == graphic_dm(G)


def test_contract_and_delete_edge():
    G = parse_ribbon(FIGURE_ONE)
    H = contract_edge(G, "a")
    assert H.edges == ("b", "c")
    assert len(H.vertices) == boundary_count(G, ["a"]).count
    assert delete_edge(G, "c").edges == ("a", "b")


# -- interlacement through the partial dual ---------------------------------------------

def test_alternation_examples():
    assert vertex_alternation_interlaced(one_vertex("abab"), "a", "b")
    assert not vertex_alternation_interlaced(one_vertex("aabb"), "a", "b")
    with pytest.raises(ValueError):
        vertex_alternation_interlaced(theta_graph(), "a", "b")


def test_ribbon_interlacement_examples():
    G = parse_ribbon(FIGURE_ONE)
    assert ribbonchar_check(G, ["a", "b"])
    theta = theta_graph()
    for q in graphic_dm(theta).feasibles:
        assert ribbonchar_check(theta, q)
    with pytest.raises(ValueError):
        ribbonchar_check(G, ["a", "c"])


def test_ribbon_interlacement_random():
    for G in random_graphs(8, 60):
        for q in graphic_dm(G).feasibles:
            assert ribbonchar_check(G, q)


# -- .ribbon format ---------------------------------------------------------------------

def test_parse_figure_one():
    G = parse_ribbon(FIGURE_ONE)
    assert G.vertices == ("v",)
    assert [d[0] for d in G.rotations["v"]] == list("abacc" + "b")
    assert all(s == 1 for s in G.signs.values())


def test_parse_moebius():
    G = parse_ribbon("vertex v: e:0 e:1\nedge e -\n")
    assert G == loop(-1)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_ribbon_round_trip(seed):
    rng = random.Random(seed)
    G = random_ribbon(rng, rng.randint(1, 7))
    assert parse_ribbon(serialize_ribbon(G)) == G


def test_equality_ignores_rotation_start():
    a = RibbonGraph(["v"], {"v": [("a", 0), ("b", 0), ("a", 1), ("b", 1)]}, {"a": 1, "b": 1})
    b = RibbonGraph(["v"], {"v": [("a", 1), ("b", 1), ("a", 0), ("b", 0)]}, {"a": 1, "b": 1})
    assert a == b


@pytest.mark.parametrize("text", [
    "vertex v: a:0\nedge a +\n",
    "vertex v: a:0 a:2\nedge a +\n",
    "vertex v: a:0 a:1\nedge a *\n",
    "vertex v: a:0 a:1\nedge a +\nedge a +\n",
    "vertex u: a:0 a:1\nvertex w:\nedge a +\n",
    "node v: a:0 a:1\n",
])
def test_ribbon_parse_errors(text):
    with pytest.raises(FormatError):
        parse_ribbon(text)
