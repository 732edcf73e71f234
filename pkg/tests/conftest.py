from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from deltamat.core import DeltaMatroid  # noqa: E402
from deltamat.poly import LaurentHalfPoly  # noqa: E402


def family(D: DeltaMatroid) -> set:
    """Feasible sets as frozensets of labels, for the oracles."""
    return {frozenset(D.subset_names(m)) for m in D.feasibles}


def from_family(names, fam) -> DeltaMatroid:
    return DeltaMatroid(names, [sorted(F) for F in fam])


def poly_from_counter(variables, counter) -> LaurentHalfPoly:
    """Integer-exponent Counter {exps: coeff} -> LaurentHalfPoly."""
    return LaurentHalfPoly(variables, {tuple(2 * e for e in exps): c for exps, c in counter.items() if c})


def fig2_dm() -> DeltaMatroid:
    return DeltaMatroid("abc", [[], ["b"], ["c"], ["a", "b"], ["a", "c"], ["b", "c"], ["a", "b", "c"]])


@pytest.fixture
def fig2():
    return fig2_dm()


@pytest.fixture
def u23():
    return DeltaMatroid("abc", [["a", "b"], ["a", "c"], ["b", "c"]])
