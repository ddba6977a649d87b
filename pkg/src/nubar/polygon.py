"""The Newton-polygon monoid: elementary polygons {l / h} and their Minkowski sums.

``{l/h}`` is the boundary of the convex hull of ``((0,h) + R^2_+)`` and
``((l,0) + R^2_+)``; it has one compact side of absolute slope ``h/l``.
A sum of elementary polygons is the convex chain obtained by laying their
sides end to end in order of decreasing slope.  Infinite entries are
allowed: ``{l/inf}`` is the pair of half-lines meeting at ``(l,0)`` and
``{inf/h}`` the pair meeting at ``(0,h)``, so they act as translations.

Parts with a zero entry (``{l/0}``, ``{0/h}``) are kept as degenerate
sides of slope ``0`` and ``inf``.  They do not move the chain but they
count in the projections and in the last slope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from .core import INF, MonomialIdeal, Polynomial, _same_dim, is_inf
from .errors import NoCompactSide, NotPrimary, PolygonUnsupportedDimension
from .polyhedra import facets


@dataclass(frozen=True)
class ElementaryPolygon:
    width: object  # l: int or INF
    height: object  # h: int or INF

    def __post_init__(self):
        for v in (self.width, self.height):
            if not is_inf(v) and (not isinstance(v, int) or v < 0):
                raise ValueError(f"polygon entries are nonnegative integers or inf, got {v!r}")
        if self.width == 0 and self.height == 0:
            raise ValueError("{0/0} is not an elementary polygon")
        if is_inf(self.width) and is_inf(self.height):
            raise ValueError("{inf/inf} is not an elementary polygon")

    @property
    def finite(self) -> bool:
        return not (is_inf(self.width) or is_inf(self.height))

    @property
    def slope(self):
        """Absolute slope ``h/l``; ``inf`` for a vertical side."""
        if self.width == 0:
            return INF
        return Fraction(self.height, self.width)

    def __str__(self):
        return f"{{{self.width}/{self.height}}}"


def _scaled(m: int, v):
    return INF if is_inf(v) else m * v


@dataclass(frozen=True)
class NewtonPolygonSum:
    """Canonical multiset of ``(multiplicity, ElementaryPolygon)``.

    Finite parts are merged by slope and sorted by decreasing slope.
    Parts of one slope that share a shape keep that shape and add their
    multiplicities; otherwise they merge into ``g * {L/g, H/g}`` with
    ``g = gcd(L, H)``.  Translations ``{l/inf}`` and ``{inf/h}`` are each
    merged into a single part.
    """

    parts: Tuple[Tuple[int, ElementaryPolygon], ...] = ()

    @classmethod
    def of(cls, parts: Iterable[Tuple[int, ElementaryPolygon]]) -> "NewtonPolygonSum":
        by_slope: Dict[object, List[Tuple[int, ElementaryPolygon]]] = {}
        shift_x = shift_y = 0
        for m, e in parts:
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {m!r}")
            if is_inf(e.height):
                shift_x += m * e.width
            elif is_inf(e.width):
                shift_y += m * e.height
            else:
                by_slope.setdefault(e.slope, []).append((m, e))
        out = []
        for slope in sorted(by_slope, reverse=True):
            group = by_slope[slope]
            shapes = {e for _, e in group}
            if len(shapes) == 1:
                out.append((sum(m for m, _ in group), group[0][1]))
            else:
                L = sum(m * e.width for m, e in group)
                H = sum(m * e.height for m, e in group)
                g = math.gcd(L, H)
                out.append((g, ElementaryPolygon(L // g, H // g)))
        if shift_x:
            out.append((1, ElementaryPolygon(shift_x, INF)))
        if shift_y:
            out.append((1, ElementaryPolygon(INF, shift_y)))
        return cls(tuple(out))

    @classmethod
    def elementary(cls, width, height, mult: int = 1) -> "NewtonPolygonSum":
        return cls.of([(mult, ElementaryPolygon(width, height))])

    @property
    def compact_parts(self) -> List[Tuple[int, ElementaryPolygon]]:
        return [(m, e) for m, e in self.parts if e.finite]

    @property
    def shift(self) -> Tuple[int, int]:
        sx = sum(m * e.width for m, e in self.parts if is_inf(e.height))
        sy = sum(m * e.height for m, e in self.parts if is_inf(e.width))
        return sx, sy

    def _key(self):
        sides = tuple((e.slope, m * e.width, m * e.height) for m, e in self.compact_parts)
        return sides, self.shift

    def __eq__(self, other):
        if not isinstance(other, NewtonPolygonSum):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __add__(self, other: "NewtonPolygonSum") -> "NewtonPolygonSum":
        return minkowski_add(self, other)

    def __str__(self):
        if not self.parts:
            return "0"
        return " + ".join(f"{m}*{e}" if m != 1 else str(e) for m, e in self.parts)


def minkowski_add(P: NewtonPolygonSum, Q: NewtonPolygonSum) -> NewtonPolygonSum:
    return NewtonPolygonSum.of(P.parts + Q.parts)


def vertices(P: NewtonPolygonSum) -> List[Tuple[int, int]]:
    """The vertex chain from the top of the vertical half-line to the bottom one."""
    sx, sy = P.shift
    height = sum(m * e.height for m, e in P.compact_parts)
    x, y = sx, sy + height
    chain = [(x, y)]
    for m, e in P.compact_parts:
        x, y = x + m * e.width, y - m * e.height
        chain.append((x, y))
    return chain


def last_side_slope(P: NewtonPolygonSum):
    """Absolute slope ``h/l`` of the most horizontal side."""
    compact = P.compact_parts
    if not compact:
        raise NoCompactSide(f"{P} has no side with finite data")
    return compact[-1][1].slope


def projections(P: NewtonPolygonSum) -> Tuple[object, object]:
    """Total width ``sum m*l`` and total height ``sum m*h``."""
    horizontal = vertical = 0
    for m, e in P.parts:
        horizontal = horizontal + _scaled(m, e.width)
        vertical = vertical + _scaled(m, e.height)
    return horizontal, vertical


def toric_polygon(I: MonomialIdeal, g: Polynomial) -> NewtonPolygonSum:
    """``N_I(g) = sum_k deg_k {v_k(I) / v_k(g)}`` over the compact facets of ``NP(I)``.

    Widths carry ``v_k(I)`` and heights ``v_k(g)``, so the horizontal
    projection is the multiplicity of ``I`` and the last slope is
    ``nubar_I(g)``.
    """
    _same_dim(I, g)
    if I.n != 2:
        raise PolygonUnsupportedDimension("toric polygons are built in two variables")
    if not I.is_primary():
        raise NotPrimary(f"{I} is not primary")
    if g.is_zero():
        raise ValueError("toric polygon of the zero polynomial")
    parts = []
    for fv in facets(I).facets:
        if fv.compact:
            parts.append((fv.lattice_degree, ElementaryPolygon(fv.level, fv.of_poly(g))))
    return NewtonPolygonSum.of(parts)
