"""Delta-matroids: minors, activities, computation trees and polynomial invariants."""

from .core import (
    CapExceeded,
    DeltaMatroid,
    FormatError,
    RankProfile,
    contract,
    delete,
    direct_sum,
    distance,
    is_connected,
    minor,
    parse_dm,
    rank_profile,
    restrict,
    serialize_dm,
    singular_points,
    twist,
    validate,
)
from .poly import LaurentHalfPoly, canonical_string

__all__ = [
    "CapExceeded", "DeltaMatroid", "FormatError", "LaurentHalfPoly", "RankProfile",
    "canonical_string", "contract", "delete", "direct_sum", "distance", "is_connected",
    "minor", "parse_dm", "rank_profile", "restrict", "serialize_dm", "singular_points",
    "twist", "validate",
]
