from __future__ import annotations

import random
from itertools import combinations

import pytest

import oracles
from conftest import family
from deltamat.core import DeltaMatroid, validate
from deltamat.generate import (
    RECIPES,
    enumerate_small,
    enumerate_up_to,
    random_corpus,
    random_dm,
    random_order,
    random_ribbon,
)
from deltamat.ribbon import graphic_dm


def oracle_count(n):
    """Number of nonempty set systems on n labels passing the literal exchange check."""
    ground = "abcd"[:n]
    subsets = list(oracles.powerset(ground))
    total = 0
    for k in range(1, len(subsets) + 1):
        for fam in combinations(subsets, k):
            total += oracles.sym_exchange(ground, fam)
    return total


def test_single_element():
    assert set(enumerate_small(1)) == {
        DeltaMatroid("a", [[]]),
        DeltaMatroid("a", [["a"]]),
        DeltaMatroid("a", [[], ["a"]]),
    }


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exhaustive_counts_match_oracle(n):
    found = list(enumerate_small(n))
    assert len(found) == len(set(found)) == oracle_count(n)


def test_exhaustive_count_four():
    # every one of them must pass the axiom and be distinct
    found = list(enumerate_small(4))
    assert len(set(found)) == len(found)
    assert all(oracles.sym_exchange(D.names, family(D)) for D in found[::97])


def test_enumeration_limits():
    with pytest.raises(ValueError):
        list(enumerate_small(0))
    with pytest.raises(ValueError):
        list(enumerate_small(5))
    assert sum(1 for _ in enumerate_up_to(2)) == 3 + oracle_count(2)


@pytest.mark.parametrize("recipe", RECIPES)
def test_random_dm_is_deterministic_and_valid(recipe):
    for n in (1, 4, 7):
        D = random_dm(11, n, recipe)
        assert D == random_dm(11, n, recipe)
        assert D.n == n
        assert validate(D.names, D.feasibles)


def test_random_dm_rejects_bad_arguments():
    with pytest.raises(ValueError):
        random_dm(0, 3, "nonsense")
    with pytest.raises(ValueError):
        random_dm(0, 0)


def test_random_corpus_cycles_sizes():
    corpus = random_corpus(3, 8, range(5, 7))
    assert [D.n for D in corpus] == [5, 6] * 4
    assert corpus == random_corpus(3, 8, range(5, 7))


def test_random_order_is_permutation():
    rng = random.Random(0)
    order = random_order(rng, "abcdef")
    assert sorted(order) == list("abcdef")


def test_random_ribbon_is_connected():
    rng = random.Random(1)
    for _ in range(50):
        G = random_ribbon(rng, rng.randint(1, 6))
        graphic_dm(G)  # raises on disconnected input
        assert sum(len(r) for r in G.rotations.values()) == 2 * len(G.edges)
