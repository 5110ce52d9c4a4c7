"""Multiple point spaces of finite map germs.

Exact computation of Fitting ideals of presentation matrices, target and
source multiple point spaces, the double/triple point intersection formulas
with hypothesis audits, and curve singularity invariants.
"""

from fractions import Fraction

from ._multigerm import (
    GermError,
    Ideal,
    MultiGerm,
    branch_expansion,
    decomposition_check,
    delta_from_milnor,
    double_formula,
    fitting_ideal,
    format_germ,
    intersection_number,
    load_germ,
    milnor_from_delta,
    milnor_from_polar,
    multiplicity,
    parse_germ,
    polar_multiplicity,
    preimage_check,
    presentations,
    source_multipoint,
    target_space,
    triple_formula,
)
from ._multigerm import quadruple_count as _quadruple_count

__all__ = [
    "GermError",
    "Ideal",
    "MultiGerm",
    "branch_expansion",
    "decomposition_check",
    "delta_from_milnor",
    "double_formula",
    "fitting_ideal",
    "format_germ",
    "intersection_number",
    "load_germ",
    "milnor_from_delta",
    "milnor_from_polar",
    "multiplicity",
    "parse_germ",
    "polar_multiplicity",
    "preimage_check",
    "presentations",
    "quadruple_count",
    "source_multipoint",
    "target_space",
    "triple_formula",
]


def quadruple_count(germ):
    """Quadruple point count of a stable perturbation, as a Fraction."""
    num, den = _quadruple_count(germ)
    return Fraction(num, den)
