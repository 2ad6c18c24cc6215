"""Minimal Euclidean function on the Gaussian integers.

Exact evaluation through the nested-octagon decomposition, an independent
exhaustive digit-expansion oracle, closed-form pre-image counts (OEIS
A006457) with enumeration, deterministic SVG figures, and a verification
harness that cross-checks every closed form against brute force.
"""

from .core import GaussianInt, I, MINUS_I, MINUS_ONE, ONE, UNITS, ZERO, \
    UndefinedAtZeroError, has_odd_gcd, is_unit, octagon_bound, \
    two_adic_valuation
from .oracle import DIGITS, expansion_eval, expansion_of, phi_oracle
from .phi import a006457, min_octagon_index, phi, preimage_count, \
    preimage_count_via_sum, preimage_points, sequence
from .regions import Region, RegionBoundsError, even_gcd_count, octagon, \
    octagon_count, perforated_contains, perforated_count, perforated_points
from .render import RenderStyle, render_decomposition, render_region
from .verify import CheckFailure, CheckGroup, VerificationReport, \
    run_verification

__version__ = "0.1.0"

__all__ = [
    "GaussianInt", "UndefinedAtZeroError", "ZERO", "ONE", "MINUS_ONE", "I",
    "MINUS_I", "UNITS", "octagon_bound", "two_adic_valuation", "is_unit",
    "has_odd_gcd",
    "Region", "RegionBoundsError", "octagon", "octagon_count",
    "even_gcd_count", "perforated_count", "perforated_contains",
    "perforated_points",
    "phi", "min_octagon_index", "preimage_count", "preimage_count_via_sum",
    "a006457", "sequence", "preimage_points",
    "DIGITS", "phi_oracle", "expansion_of", "expansion_eval",
    "RenderStyle", "render_region", "render_decomposition",
    "VerificationReport", "CheckGroup", "CheckFailure", "run_verification",
]
