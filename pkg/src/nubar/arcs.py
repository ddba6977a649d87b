"""Truncated power-series arcs and the arc characterization of nubar.

An arc is ``t -> (h_1(t), .., h_n(t))`` with each ``h_i`` known exactly
below a common truncation order ``T``.  The order of ``f o h`` is
computed exactly; when every coefficient below ``T`` cancels the answer
is ``at_least(T)``, never a made-up exact value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .core import INF, MonomialIdeal, Polynomial, _same_dim, dot
from .errors import (
    DimensionMismatch,
    IndeterminateOrder,
    NonPositiveWeight,
    TruncationMismatch,
    TruncationTooSmall,
    ZeroPolynomial,
)
from .polyhedra import facets, nubar

DEFAULT_TRUNCATION = 64
ARC_COEFFS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 2))


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum c_k t^k`` known for ``k < truncation``."""

    coefficients: Tuple[Tuple[int, Fraction], ...]
    truncation: int

    @classmethod
    def from_dict(cls, coeffs: Dict[int, Fraction], truncation: int) -> "TruncatedSeries":
        if truncation < 1:
            raise ValueError("truncation must be positive")
        items = tuple(
            sorted((int(k), Fraction(c)) for k, c in coeffs.items() if c != 0 and 0 <= k < truncation)
        )
        if any(k < 0 for k, _ in items):
            raise ValueError("negative exponent in series")
        return cls(items, truncation)

    @classmethod
    def monomial(cls, c, k: int, truncation: int) -> "TruncatedSeries":
        return cls.from_dict({k: Fraction(c)}, truncation)

    @classmethod
    def one(cls, truncation: int) -> "TruncatedSeries":
        return cls.from_dict({0: Fraction(1)}, truncation)

    @property
    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def order(self):
        """Lowest exponent with a nonzero coefficient, or ``INF`` if none is known."""
        return self.coefficients[0][0] if self.coefficients else INF

    def constant_term(self) -> Fraction:
        return self.as_dict.get(0, Fraction(0))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        T = min(self.truncation, other.truncation)
        acc = self.as_dict
        for k, c in other.coefficients:
            acc[k] = acc.get(k, 0) + c
        return TruncatedSeries.from_dict(acc, T)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries.from_dict({k: c * v for k, v in self.coefficients}, self.truncation)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        # both factors are known below their truncations, so the product is
        # known below min(T1 + ord2, T2 + ord1); we keep the common T
        T = min(self.truncation, other.truncation)
        acc: Dict[int, Fraction] = {}
        for k1, c1 in self.coefficients:
            for k2, c2 in other.coefficients:
                k = k1 + k2
                if k >= T:
                    break
                acc[k] = acc.get(k, 0) + c1 * c2
        return TruncatedSeries.from_dict(acc, T)

    def __pow__(self, k: int) -> "TruncatedSeries":
        result = TruncatedSeries.one(self.truncation)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def substitute_power(self, k: int) -> "TruncatedSeries":
        """``h(t^k)``; truncation scales by ``k``."""
        return TruncatedSeries.from_dict({e * k: c for e, c in self.coefficients}, self.truncation * k)


@dataclass(frozen=True)
class Arc:
    """A nontrivial arc.

    Arcs built by :func:`monomial_arc` are centered at the origin.  Arcs
    realizing a facet valuation whose normal has zero entries are centered
    at a point of the coordinate subspace instead (see :func:`valuation_arc`).
    """

    components: Tuple[TruncatedSeries, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("an arc needs at least one component")
        Ts = {s.truncation for s in self.components}
        if len(Ts) != 1:
            raise TruncationMismatch(f"components truncated at different orders {sorted(Ts)}")
        if all(k == 0 for s in self.components for k, _ in s.coefficients):
            raise ValueError("the trivial (constant) arc is excluded")

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def truncation(self) -> int:
        return self.components[0].truncation

    @property
    def center(self) -> Tuple[Fraction, ...]:
        return tuple(s.constant_term() for s in self.components)

    def centered_at_origin(self) -> bool:
        return not any(self.center)

    def reparametrize(self, k: int) -> "Arc":
        """Precompose with ``t -> t^k``."""
        return Arc(tuple(s.substitute_power(k) for s in self.components))


@dataclass(frozen=True)
class OrderValue:
    """``exact(k)`` or ``at_least(T)``."""

    value: int
    exact: bool

    @classmethod
    def exactly(cls, k: int) -> "OrderValue":
        return cls(k, True)

    @classmethod
    def at_least(cls, k: int) -> "OrderValue":
        return cls(k, False)

    def __str__(self):
        return f"exact({self.value})" if self.exact else f"at_least({self.value})"


def monomial_arc(w: Sequence[int], coeffs: Sequence, truncation: int = DEFAULT_TRUNCATION) -> Arc:
    """``t -> (c_i t^{w_i})``."""
    if any(x < 1 for x in w):
        raise NonPositiveWeight(f"monomial arcs need positive weights, got {tuple(w)}")
    return valuation_arc(w, coeffs, truncation)


def valuation_arc(w: Sequence[int], coeffs: Sequence, truncation: int = DEFAULT_TRUNCATION) -> Arc:
    """``t -> (c_i t^{w_i})`` allowing ``w_i = 0``.

    For a generic choice of nonzero ``c`` the order of ``f`` along this arc
    is the monomial valuation ``min <w, a>`` over the support of ``f``.
    """
    if len(w) != len(coeffs):
        raise DimensionMismatch("weights and coefficients differ in length")
    if any(Fraction(c) == 0 for c in coeffs):
        raise ValueError("arc coefficients must be nonzero")
    if any(x < 0 for x in w):
        raise NonPositiveWeight(f"negative weight in {tuple(w)}")
    return Arc(tuple(TruncatedSeries.monomial(c, k, truncation) for c, k in zip(coeffs, w)))


def static_order_bound(f: Polynomial, h: Arc):
    """``min <ord(h), a>`` over terms; ``INF`` when every term meets a zero component."""
    ords = [s.order() for s in h.components]
    best = INF
    for a in f.support:
        val = 0
        for o, k in zip(ords, a):
            if k:
                val = val + (o * k if o is not INF else INF)
        best = min(best, val)
    return best


def compose_order(f: Polynomial, h: Arc) -> OrderValue:
    """Order in ``t`` of ``f(h(t))``.

    Raises :class:`TruncationTooSmall` when the static lower bound from the
    components of known order already reaches the truncation, since then
    nothing can be decided below it.  Components that are zero below the
    truncation only support an ``at_least`` answer.
    """
    if f.n != h.n:
        raise DimensionMismatch(f"polynomial in {f.n} variables, arc in {h.n}")
    if f.is_zero():
        return OrderValue.at_least(h.truncation)
    T = h.truncation
    bound = static_order_bound(f, h)
    if bound is INF:
        return OrderValue.at_least(T)
    if bound >= T:
        raise TruncationTooSmall(f"order of {f} along the arc is >= {bound}, truncation is {T}")
    powers: Dict[Tuple[int, int], TruncatedSeries] = {}

    def pw(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = h.components[i] ** k
        return powers[(i, k)]

    total = TruncatedSeries.from_dict({}, T)
    for a, c in f.items:
        term = TruncatedSeries.from_dict({0: c}, T)
        for i, k in enumerate(a):
            if k:
                term = term * pw(i, k)
        total = total + term
    if total.is_zero():
        return OrderValue.at_least(T)
    return OrderValue.exactly(total.order())


def ideal_order(I: MonomialIdeal, h: Arc) -> OrderValue:
    """Minimum over generators; exact values are always below any ``at_least(T)``."""
    orders = [compose_order(Polynomial.monomial(g), h) for g in I.generators]
    exact = [o.value for o in orders if o.exact]
    if exact:
        return OrderValue.exactly(min(exact))
    return OrderValue.at_least(h.truncation)


def arc_ratio(f: Polynomial, I: MonomialIdeal, h: Arc) -> Fraction:
    _same_dim(f, I)
    vf = compose_order(f, h)
    vI = ideal_order(I, h)
    if not (vf.exact and vI.exact):
        raise IndeterminateOrder(f"orders {vf} and {vI} along the arc are not both exact")
    if vI.value == 0:
        raise IndeterminateOrder("the arc does not pass through the zero set of the ideal")
    return Fraction(vf.value, vI.value)


def generic_coefficients(f: Polynomial, w: Sequence[int]) -> Tuple[Fraction, ...]:
    """Small positive integers ``c`` with ``in_w(f)(c) != 0``.

    The initial form is a nonzero polynomial, so a grid of
    ``deg + 1`` values per coordinate always contains a non-root.
    """
    init = f.initial_form(w)
    deg = max(init.degree(), 0)
    n = f.n
    ones = (Fraction(1),) * n
    if init.evaluate(ones) != 0:
        return ones
    from .core import box

    for c in box((deg + 1,) * n):
        point = tuple(Fraction(x + 1) for x in c)
        if init.evaluate(point) != 0:
            return point
    raise AssertionError("unreachable: nonzero polynomial vanishing on a full grid")


def truncation_for(w: Sequence[int], f: Polynomial, I: MonomialIdeal) -> int:
    """A truncation strictly above every order the arc with weight ``w`` can produce."""
    top = max([dot(w, a) for a in f.support] + [dot(w, g) for g in I.generators])
    return max(DEFAULT_TRUNCATION, top + 1)


def certificate_arc(f: Polynomial, I: MonomialIdeal, truncation: Optional[int] = None) -> Arc:
    """Monomial arc along the certificate facet, with coefficients avoiding cancellation."""
    w = nubar(f, I, check=False).certificate.normal
    T = truncation or truncation_for(w, f, I)
    return valuation_arc(w, generic_coefficients(f, w), T)


def random_monomial_arcs(n: int, count: int, seed: int, max_weight: int = 8) -> List[Tuple]:
    """``count`` (weights, coefficients) pairs, weights in ``[1..max_weight]^n``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        w = tuple(rng.randint(1, max_weight) for _ in range(n))
        c = tuple(rng.choice(ARC_COEFFS) for _ in range(n))
        out.append((w, c))
    return out


@dataclass(frozen=True)
class ArcReport:
    nubar: Fraction
    ratios: Tuple[Fraction, ...]  # sorted exact ratios
    indeterminate: int
    min_ratio: Optional[Fraction]
    attained: bool
    lower_bound_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_bound_ok and self.attained


def arc_infimum_check(f: Polynomial, I: MonomialIdeal, arcs: Sequence[Arc]) -> ArcReport:
    """Every exact arc ratio is at least ``nubar_I(f)``; the certificate arc attains it.

    The certificate arc is always added to ``arcs``.
    """
    if f.is_zero():
        raise ZeroPolynomial("arc check of the zero polynomial")
    value = nubar(f, I).value
    ratios = []
    indet = 0
    for h in list(arcs) + [certificate_arc(f, I)]:
        try:
            ratios.append(arc_ratio(f, I, h))
        except IndeterminateOrder:
            indet += 1
    ratios.sort()
    low = ratios[0] if ratios else None
    return ArcReport(
        nubar=value,
        ratios=tuple(ratios),
        indeterminate=indet,
        min_ratio=low,
        attained=low == value,
        lower_bound_ok=all(r >= value for r in ratios),
    )


def random_arcs_for(
    f: Polynomial, I: MonomialIdeal, count: int, seed: int, truncation: Optional[int] = None
) -> List[Arc]:
    """Random monomial arcs; the truncation defaults to one that is always large enough."""
    arcs = []
    for w, c in random_monomial_arcs(f.n, count, seed):
        arcs.append(monomial_arc(w, c, truncation or truncation_for(w, f, I)))
    return arcs


def facet_arcs(f: Polynomial, I: MonomialIdeal) -> List[Tuple[Tuple[int, ...], Arc]]:
    """One arc per facet valuation of ``NP(I)``, coefficients generic for ``f``."""
    out = []
    for w in facets(I).facets:
        T = truncation_for(w.normal, f, I)
        out.append((w.normal, valuation_arc(w.normal, generic_coefficients(f, w.normal), T)))
    return out
