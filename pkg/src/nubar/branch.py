"""Plane-branch invariants from a Puiseux characteristic ``(b0, b1, ..., bg)``.

Everything here is determined by the value semigroup ``Gamma``: the
branch algebra is never represented by series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidCharSequence, SmoothBranch, VerificationFailed
from .polygon import ElementaryPolygon, NewtonPolygonSum


@dataclass(frozen=True)
class CharSequence:
    beta: Tuple[int, ...]

    def __post_init__(self):
        beta = tuple(self.beta)
        object.__setattr__(self, "beta", beta)
        if not beta or any(not isinstance(b, int) or b < 1 for b in beta):
            raise InvalidCharSequence(f"characteristic must be positive integers, got {beta}")
        if any(a >= b for a, b in zip(beta, beta[1:])):
            raise InvalidCharSequence(f"characteristic must be strictly increasing: {beta}")
        e = gcd_sequence(beta)
        if any(a <= b for a, b in zip(e, e[1:])):
            raise InvalidCharSequence(f"gcds {e} must strictly decrease")
        if e[-1] != 1:
            raise InvalidCharSequence(f"gcd of {beta} must be 1")

    @classmethod
    def parse(cls, text: str) -> "CharSequence":
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",")))
        except ValueError:
            raise InvalidCharSequence(f"cannot read characteristic {text!r}") from None

    @property
    def b0(self) -> int:
        return self.beta[0]

    @property
    def g(self) -> int:
        return len(self.beta) - 1

    @property
    def smooth(self) -> bool:
        return self.beta[0] == 1

    def __str__(self):
        return "(" + ",".join(map(str, self.beta)) + ")"


def gcd_sequence(beta: Sequence[int]) -> Tuple[int, ...]:
    e = [beta[0]]
    for b in beta[1:]:
        e.append(math.gcd(e[-1], b))
    return tuple(e)


def semigroup_generators(c: CharSequence) -> Tuple[int, ...]:
    """``bb_0 = b_0``, ``bb_1 = b_1``, ``bb_{j+1} = n_j bb_j + b_{j+1} - b_j``."""
    beta, e = c.beta, gcd_sequence(c.beta)
    gens = list(beta[:2])
    for j in range(1, c.g):
        n_j = e[j - 1] // e[j]
        gens.append(n_j * gens[j] + beta[j + 1] - beta[j])
    return tuple(gens)


def membership_bits(gens: Sequence[int], limit: int) -> int:
    """Bit ``k`` set iff ``k`` is a sum of ``gens`` (``0 <= k < limit``)."""
    mask = (1 << limit) - 1
    bits = 1
    for g in gens:
        # closing under +g: repeated doubling of the shift
        step = g
        while step < limit:
            bits |= (bits << step) & mask
            step *= 2
    return bits


def _membership_limit(gens: Sequence[int]) -> int:
    # Frobenius number of a numerical semigroup containing g0 and gmax is < g0 * gmax
    return gens[0] * max(gens) + 1


@dataclass(frozen=True)
class BranchInvariants:
    char: CharSequence
    e: Tuple[int, ...]
    n: Tuple[int, ...]
    semigroup_generators: Tuple[int, ...]
    delta: int
    conductor: int
    gap_count: int
    two_delta_formula: int
    membership: Tuple[bool, ...]  # gamma in Gamma for 0 <= gamma <= conductor

    def in_semigroup(self, gamma: int) -> bool:
        if gamma < 0:
            return False
        return gamma >= self.conductor or self.membership[gamma]

    @property
    def gaps(self) -> List[int]:
        return [k for k, m in enumerate(self.membership) if not m]

    @property
    def symmetric(self) -> bool:
        c = self.conductor
        return all(self.in_semigroup(k) != self.in_semigroup(c - 1 - k) for k in range(c))


def two_delta(c: CharSequence) -> int:
    """``1 - b_0 + sum_j (e_{j-1} - e_j) b_j``."""
    e = gcd_sequence(c.beta)
    return 1 - c.b0 + sum((e[j - 1] - e[j]) * c.beta[j] for j in range(1, c.g + 1))


def invariants(c: CharSequence) -> BranchInvariants:
    e = gcd_sequence(c.beta)
    n = tuple(e[j - 1] // e[j] for j in range(1, len(e)))
    if c.smooth:
        gens: Tuple[int, ...] = (1,)
    else:
        gens = semigroup_generators(c)
    limit = _membership_limit(gens)
    bits = membership_bits(gens, limit)
    gaps = limit - bin(bits).count("1")
    # first k past which every integer below limit is present
    conductor = (~bits & ((1 << limit) - 1)).bit_length()
    formula = two_delta(c)
    if formula != 2 * gaps:
        raise VerificationFailed(f"2*delta formula {formula} disagrees with gap count {gaps} for {c}")
    membership = tuple(bool(bits >> k & 1) for k in range(conductor + 1))
    return BranchInvariants(c, e, n, gens, gaps, conductor, gaps, formula, membership)


def double_point_polygon(c: CharSequence) -> NewtonPolygonSum:
    """``sum_j (e_{j-1} - e_j) {(b_j - 1) / 1}``."""
    if c.smooth:
        raise SmoothBranch("the double-point polygon needs a singular branch")
    e = gcd_sequence(c.beta)
    return NewtonPolygonSum.of(
        (e[j - 1] - e[j], ElementaryPolygon(c.beta[j] - 1, 1)) for j in range(1, c.g + 1)
    )


@dataclass(frozen=True)
class ClosurePower:
    k: int
    threshold: int
    members: Tuple[int, ...]  # semigroup elements in [threshold, conductor + threshold)

    def describe(self) -> str:
        return _closure_text(str(self.threshold))


def _closure_text(bound: str) -> str:
    return "\\overline{I^n}=\\{\\Sigma a_it^i\\in\\cb\\{t\\},a_i=0,i<" + bound + "\\}"


def closure_power_rule(c: CharSequence, var: str = "n") -> str:
    """The closure of ``m^var`` written with a symbolic exponent, in TeX."""
    return _closure_text(var if c.b0 == 1 else f"{c.b0}{var}")


def closure_power_of_m(c: CharSequence, k: int) -> ClosurePower:
    """The closure of ``m^k`` in the branch algebra: t-order at least ``k * b0``."""
    if k < 1:
        raise ValueError("k must be positive")
    inv = invariants(c)
    t = k * c.b0
    members = tuple(g for g in range(t, inv.conductor + t) if inv.in_semigroup(g))
    return ClosurePower(k, t, members)


@dataclass(frozen=True)
class GradedDegrees:
    degrees: Tuple[Fraction, ...]
    generator_degrees: Tuple[Fraction, ...]
    denominator: int


def graded_degrees(c: CharSequence, limit: Optional[int] = None) -> GradedDegrees:
    """Degrees ``gamma / b0`` of the graded pieces, for ``gamma`` in ``Gamma`` up to ``limit``.

    The default limit, ``conductor + 2 b0 - 1``, shows two full periods
    past the conductor.
    """
    inv = invariants(c)
    if limit is None:
        limit = inv.conductor + 2 * c.b0 - 1
    degs = tuple(Fraction(g, c.b0) for g in range(limit + 1) if inv.in_semigroup(g))
    gen_degs = tuple(Fraction(g, c.b0) for g in inv.semigroup_generators)
    den = math.lcm(*(d.denominator for d in degs + gen_degs))
    return GradedDegrees(degs, gen_degs, den)


def valid_sequences(max_b0: int, max_bg: int) -> Iterator[CharSequence]:
    """Every singular characteristic with ``b0 <= max_b0`` and ``b_g <= max_bg``."""

    def extend(beta, e):
        if e == 1:
            yield CharSequence(tuple(beta))
            return
        for b in range(beta[-1] + 1, max_bg + 1):
            e2 = math.gcd(e, b)
            if e2 < e:
                yield from extend(beta + [b], e2)

    for b0 in range(2, max_b0 + 1):
        yield from extend([b0], b0)
