"""Exact arithmetic tower: Q, cyclotomic fields, polynomials and rational functions."""

from .cyclotomic import (
    Cyc,
    CyclotomicField,
    as_cyc,
    common_conductor,
    cyclotomic_polynomial,
    field,
    field_inverse,
    field_roots,
    sqrt_in_field,
)
from .parse import parse_element, parse_list, parse_poly
from .poly import Poly, gcd_all, poly_gcd, poly_lcm
from .ratfunc import VAR, RatFunc, normalize
from .residue import ResidueElem, ResidueRing


def embed(e: Cyc, m: int) -> Cyc:
    """Image of e in Q(zeta_m)."""
    return as_cyc(e).embed(m)


__all__ = [
    "Cyc",
    "CyclotomicField",
    "Poly",
    "RatFunc",
    "ResidueElem",
    "ResidueRing",
    "VAR",
    "as_cyc",
    "common_conductor",
    "cyclotomic_polynomial",
    "embed",
    "field",
    "field_inverse",
    "field_roots",
    "gcd_all",
    "normalize",
    "parse_element",
    "parse_list",
    "parse_poly",
    "poly_gcd",
    "poly_lcm",
    "sqrt_in_field",
]
