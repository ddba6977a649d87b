"""Exact asymptotic orders, integral closures and related invariants.

The submodule ``nubar.closure`` shares its name with the closure
operation, which therefore lives at ``nubar.polyhedra.closure``.
"""

from .core import INF, MonomialIdeal, Polynomial, nu_order, oracle_sequence
from .polyhedra import facets, fractional_closure, multiplicity, nubar

__all__ = [
    "INF",
    "MonomialIdeal",
    "Polynomial",
    "facets",
    "fractional_closure",
    "multiplicity",
    "nu_order",
    "nubar",
    "oracle_sequence",
]
