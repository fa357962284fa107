"""Exact Gröbner bases of submodules of free modules over Q[x0, x1, ...]."""

from .buchberger import GbConfig, GbStats, gb, in_pmdl, is_groebner_basis, spoly
from .orders import Extension, MonomialOrder, TermOrder
from .polynomials import Poly, format_poly

__all__ = [
    "Extension",
    "GbConfig",
    "GbStats",
    "MonomialOrder",
    "Poly",
    "TermOrder",
    "format_poly",
    "gb",
    "in_pmdl",
    "is_groebner_basis",
    "spoly",
]
