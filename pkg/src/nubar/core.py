"""Exact scalars, polynomials over Q, monomial ideals and the I-adic order.

Rationals are :class:`fractions.Fraction`; the extra value :data:`INF`
stands for the order of the zero element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product as _cartesian
from typing import Callable, Iterable, Mapping, Sequence, Tuple, Union

from .errors import (
    DimensionMismatch,
    EmptyGeneratorSet,
    ParseError,
    UnitIdeal,
    ZeroDenominator,
)

Exponent = Tuple[int, ...]
Rational = Fraction


class _Infinity:
    """Absorbing top element: greater than every number, ``oo + x == oo``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __hash__(self):
        return hash("nubar.INF")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        if other is not self and other <= 0:
            raise ValueError("INF times a non-positive number is undefined")
        return self

    __rmul__ = __mul__

    def __truediv__(self, other):
        if other is self or other <= 0:
            raise ValueError("undefined quotient of INF")
        return self

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
Value = Union[Fraction, _Infinity]


def is_inf(x) -> bool:
    return x is INF


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"p/q"`` or an integer string; a unicode minus is accepted."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"coefficient must be a string or integer, got {type(text).__name__}")
    s = text.strip().replace("−", "-")
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"not a rational: {text!r}") from None
    if q == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x: Value) -> str:
    if x is INF:
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# exponent vectors


def vadd(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def vscale(k: int, a: Exponent) -> Exponent:
    return tuple(k * x for x in a)


def dominates(a: Exponent, b: Exponent) -> bool:
    """``a >= b`` componentwise, i.e. ``x^b`` divides ``x^a``."""
    return all(x >= y for x, y in zip(a, b))


def dot(w: Sequence, a: Sequence):
    return sum(x * y for x, y in zip(w, a))


def _check_exponent(a, n=None) -> Exponent:
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise ValueError(f"negative exponent in {a}")
    if n is not None and len(a) != n:
        raise DimensionMismatch(f"exponent {a} has length {len(a)}, expected {n}")
    return a


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with exact rational coefficients in ``n`` variables.

    Terms are kept sorted; the zero polynomial has no terms.
    """

    n: int
    items: Tuple[Tuple[Exponent, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, n: int, terms: Union[Mapping, Iterable]) -> "Polynomial":
        acc: dict = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in pairs:
            exp = _check_exponent(exp, n)
            acc[exp] = acc.get(exp, Fraction(0)) + parse_rational(coeff)
        return cls(n, tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "Polynomial":
        exp = _check_exponent(exp)
        return cls.from_terms(len(exp), [(exp, coeff)])

    @classmethod
    def constant(cls, n: int, c=1) -> "Polynomial":
        return cls.from_terms(n, [((0,) * n, c)])

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @property
    def terms(self) -> dict:
        return dict(self.items)

    @property
    def support(self) -> Tuple[Exponent, ...]:
        return tuple(e for e, _ in self.items)

    def is_zero(self) -> bool:
        return not self.items

    def is_monomial(self) -> bool:
        return len(self.items) == 1

    def degree(self) -> int:
        return max((sum(e) for e in self.support), default=-1)

    def _check(self, other: "Polynomial"):
        if self.n != other.n:
            raise DimensionMismatch(f"polynomials in {self.n} and {other.n} variables")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial.from_terms(self.n, list(self.items) + list(other.items))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, tuple((e, -c) for e, c in self.items))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc: dict = {}
        for e1, c1 in self.items:
            for e2, c2 in other.items:
                e = vadd(e1, e2)
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(self.n, tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def initial_form(self, w: Sequence[int]) -> "Polynomial":
        """Terms of minimal ``w``-weight."""
        if self.is_zero():
            return self
        m = min(dot(w, e) for e in self.support)
        return Polynomial(self.n, tuple((e, c) for e, c in self.items if dot(w, e) == m))

    def evaluate(self, point: Sequence):
        """Evaluate at ``point``.

        Coordinates may be ints/Fractions (exact), floats or numpy arrays
        (double precision) or ``mpmath.mpf`` (coefficients converted at the
        working precision).
        """
        x0 = point[0] if len(point) else 0
        if isinstance(x0, (int, Fraction)):
            conv = lambda c: c  # noqa: E731
        elif type(x0).__module__.startswith("mpmath"):
            import mpmath

            conv = lambda c: mpmath.mpf(c.numerator) / c.denominator  # noqa: E731
        else:
            conv = float
        total = 0
        for e, c in self.items:
            term = conv(c)
            for x, k in zip(point, e):
                if k:
                    term = term * x**k
            total = total + term
        return total

    def __str__(self):
        if self.is_zero():
            return "0"
        names = "xyzw" if self.n <= 4 else None
        parts = []
        for e, c in self.items:
            mono = "*".join(
                (names[i] if names else f"x{i + 1}") + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e)
                if k
            )
            coeff = format_rational(c)
            if not mono:
                parts.append(coeff)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# monomial ideals


@dataclass(frozen=True)
class MonomialIdeal:
    """Proper monomial ideal, stored by its minimal generators (sorted)."""

    n: int
    generators: Tuple[Exponent, ...]

    def __post_init__(self):
        if not self.generators:
            raise EmptyGeneratorSet("a monomial ideal needs at least one generator")
        for g in self.generators:
            if len(g) != self.n:
                raise DimensionMismatch(f"generator {g} not of length {self.n}")
            if not any(g):
                raise UnitIdeal("the zero exponent generates the unit ideal")

    @classmethod
    def of(cls, *gens: Sequence[int]) -> "MonomialIdeal":
        return normalize(gens)

    def contains_monomial(self, a: Exponent) -> bool:
        return any(dominates(a, g) for g in self.generators)

    def contains(self, other: "MonomialIdeal") -> bool:
        """``other`` is a subset of ``self``."""
        _same_dim(self, other)
        return all(self.contains_monomial(g) for g in other.generators)

    def max_exponents(self) -> Exponent:
        return tuple(max(g[i] for g in self.generators) for i in range(self.n))

    def is_primary(self) -> bool:
        """Every axis carries a pure-power generator (finite colength)."""
        return all(any(g[i] > 0 and sum(g) == g[i] for g in self.generators) for i in range(self.n))

    def pure_powers(self) -> Exponent:
        """Smallest ``p_i`` with ``x_i^{p_i}`` in the ideal (requires primary)."""
        return tuple(
            min(g[i] for g in self.generators if g[i] > 0 and sum(g) == g[i]) for i in range(self.n)
        )

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __str__(self):
        names = "xyzw" if self.n <= 4 else None
        out = []
        for g in self.generators:
            out.append(
                "*".join(
                    (names[i] if names else f"x{i + 1}") + (f"^{k}" if k > 1 else "")
                    for i, k in enumerate(g)
                    if k
                )
            )
        return "(" + ", ".join(out) + ")"


def normalize(generators: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Reduce a generating set to its antichain of minimal elements."""
    gens = {_check_exponent(g) for g in generators}
    if not gens:
        raise EmptyGeneratorSet("a monomial ideal needs at least one generator")
    dims = {len(g) for g in gens}
    if len(dims) != 1:
        raise DimensionMismatch(f"generators of different lengths {sorted(dims)}")
    n = dims.pop()
    if (0,) * n in gens:
        raise UnitIdeal("the zero exponent generates the unit ideal")
    minimal = [g for g in gens if not any(h != g and dominates(g, h) for h in gens)]
    return MonomialIdeal(n, tuple(sorted(minimal)))


def _same_dim(*objs):
    dims = {o.n for o in objs}
    if len(dims) != 1:
        raise DimensionMismatch(f"ambient dimensions differ: {sorted(dims)}")


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    return normalize(vadd(g, h) for g in I.generators for h in J.generators)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("ideal powers are taken for k >= 1")
    return reduce(product, [I] * k)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    return normalize(I.generators + J.generators)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return normalize(tuple(1 if x else 0 for x in g) for g in I.generators)


# ---------------------------------------------------------------------------
# the I-adic order


Bound = Callable[[Exponent], int]


def _degree_bound(I: MonomialIdeal) -> Bound:
    dmin = min(sum(g) for g in I.generators)
    return lambda r: sum(r) // dmin


def _search_order(I: MonomialIdeal):
    # small generators first: deep branches are found early
    return sorted(I.generators, key=lambda g: (sum(g), g))


def monomial_in_power(a: Sequence[int], I: MonomialIdeal, k: int, bound: Bound = None) -> bool:
    """Whether ``x^a`` lies in ``I^k``.

    Depth-first search over multisets of generators, memoized on the
    residual vector.  ``bound(r)`` must be an upper bound on the order of
    ``x^r``; it prunes branches that cannot reach ``k``.
    """
    a = _check_exponent(a, I.n)
    if k <= 0:
        return True
    gens = _search_order(I)
    bound = bound or _degree_bound(I)
    failed = set()

    def dfs(r, start, need):
        if need == 0:
            return True
        key = (r, start, need)
        if key in failed or bound(r) < need:
            return False
        for j in range(start, len(gens)):
            g = gens[j]
            if dominates(r, g) and dfs(vsub(r, g), j, need - 1):
                return True
        failed.add(key)
        return False

    return dfs(a, 0, k)


def monomial_order(a: Sequence[int], I: MonomialIdeal, bound: Bound = None) -> int:
    """``max{k : x^a in I^k}`` by branch and bound."""
    a = _check_exponent(a, I.n)
    gens = _search_order(I)
    bound = bound or _degree_bound(I)
    best = 0
    seen: dict = {}

    def dfs(r, start, count):
        nonlocal best
        if count > best:
            best = count
        if count + bound(r) <= best:
            return
        key = (r, start)
        if seen.get(key, -1) >= count:
            return
        seen[key] = count
        for j in range(start, len(gens)):
            g = gens[j]
            if dominates(r, g):
                dfs(vsub(r, g), j, count + 1)

    dfs(a, 0, 0)
    return best


def _facet_bound(I: MonomialIdeal) -> Bound:
    # imported here: polyhedra depends on this module
    from .polyhedra import facets

    return facets(I).order_bound


def nu_order(f: Polynomial, I: MonomialIdeal) -> Value:
    """I-adic order of ``f``.

    ``I^k`` is a monomial ideal, so ``f`` lies in it iff every term does;
    hence the order of ``f`` is the minimum over its terms.
    """
    _same_dim(f, I)
    if f.is_zero():
        return INF
    bound = _facet_bound(I)
    best = None
    # likely minimizers first; later terms only need a membership test
    for a in sorted(f.support, key=bound):
        if best is not None and monomial_in_power(a, I, best, bound):
            continue
        best = monomial_order(a, I, bound)
    return Fraction(best)


def oracle_sequence(f: Polynomial, I: MonomialIdeal, K: int) -> list:
    """``u_k = nu_I(f^k)/k`` for ``k = 1..K`` with ``f^k`` expanded exactly."""
    _same_dim(f, I)
    if K < 1:
        raise ValueError("K must be >= 1")
    if f.is_zero():
        raise ValueError("the oracle sequence of 0 is identically infinite")
    out = []
    fk = Polynomial.constant(f.n, 1)
    for k in range(1, K + 1):
        fk = fk * f
        out.append(nu_order(fk, I) / k)
    return out


def box(upper: Sequence[int]):
    """All integer vectors ``0 <= a <= upper``."""
    return _cartesian(*(range(u + 1) for u in upper))


def lcm(values: Iterable[int]) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)
