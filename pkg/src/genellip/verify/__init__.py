"""Declarative numerical verification of monotonicity, convexity and
inequality properties of the generalized elliptic integrals, the modulus,
the modular function and the M function.

The engine module supplies the grid/check machinery; the registry module
holds the built-in catalog of checks.
"""

from .engine import CheckReport, CheckSpec, FiniteDiff, GridDim, GridSpec, \
    PABNotation, finite_diff, pab, run_check
from .registry import registry, select

__all__ = [
    "CheckReport",
    "CheckSpec",
    "FiniteDiff",
    "GridDim",
    "GridSpec",
    "PABNotation",
    "finite_diff",
    "pab",
    "registry",
    "run_check",
    "select",
]
