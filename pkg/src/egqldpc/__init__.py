"""Quantum LDPC codes from the Euclidean geometry EG(m, q)."""

from .analysis import ClaimReport, DistanceResult, claim_check, exact_distance, sweep, verify_distance_floor
from .builder import CssCode, Family, build_code, build_core, claimed_params, select_recipe
from .field import FieldSpec, make_field
from .geometry import EuclideanGeometry
from .gf2 import BinMatrix

__all__ = [
    "BinMatrix",
    "ClaimReport",
    "CssCode",
    "DistanceResult",
    "EuclideanGeometry",
    "Family",
    "FieldSpec",
    "build_code",
    "build_core",
    "claim_check",
    "exact_distance",
    "make_field",
    "claimed_params",
    "select_recipe",
    "sweep",
    "verify_distance_floor",
]
