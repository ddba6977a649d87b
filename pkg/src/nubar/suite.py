"""The fixed regression suite: 30 monomial ideals, 10 polynomials each.

Ideals have ``n <= 3``, at most four generators and degree at most six.
Polynomials are drawn once from a seeded generator: five monomials and
five polynomials with two or three terms, all of degree at most six.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .core import MonomialIdeal, Polynomial

SUITE_SEED = 20240
COEFFS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 2))

IDEALS_2 = [
    [(1, 0), (0, 1)],
    [(2, 0), (0, 2)],
    [(2, 0), (0, 3)],
    [(3, 0), (0, 5)],
    [(2, 0), (1, 1), (0, 2)],
    [(3, 0), (1, 1), (0, 3)],
    [(4, 0), (1, 2), (0, 5)],
    [(5, 0), (2, 1), (0, 4)],
    [(6, 0), (3, 1), (1, 3), (0, 6)],
    [(4, 0), (2, 2), (0, 4)],
    [(3, 0), (1, 2), (0, 4)],
    [(5, 0), (3, 1), (0, 2)],
    [(6, 0), (2, 2), (0, 3)],
    [(4, 0), (2, 1), (0, 6)],
    [(1, 0), (0, 6)],
    # not primary
    [(2, 1), (1, 2)],
    [(2, 0), (1, 1)],
]

IDEALS_3 = [
    [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
    [(2, 0, 0), (0, 2, 0), (0, 0, 2)],
    [(2, 0, 0), (0, 3, 0), (0, 0, 4)],
    [(1, 0, 0), (0, 2, 0), (0, 0, 3)],
    [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)],
    [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)],
    [(4, 0, 0), (0, 4, 0), (0, 0, 2), (1, 1, 1)],
    [(3, 0, 0), (0, 4, 0), (0, 0, 5), (1, 1, 1)],
    [(2, 0, 0), (0, 3, 0), (0, 0, 6), (1, 1, 1)],
    [(6, 0, 0), (0, 6, 0), (0, 0, 6), (2, 2, 2)],
    # not primary
    [(1, 1, 0), (0, 1, 1), (1, 0, 1)],
    [(2, 0, 0), (0, 1, 1)],
    [(1, 1, 1)],
]


@dataclass(frozen=True)
class SuiteCase:
    index: int
    ideal: MonomialIdeal
    polys: Tuple[Polynomial, ...]


def _exponent(rng: random.Random, n: int, max_degree: int) -> Tuple[int, ...]:
    d = rng.randint(0, max_degree)
    cuts = sorted(rng.randint(0, d) for _ in range(n - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [d])]
    return tuple(parts)


def _polys(rng: random.Random, I: MonomialIdeal) -> Tuple[Polynomial, ...]:
    n = I.n
    out: List[Polynomial] = [Polynomial.monomial(rng.choice(I.generators))]
    while len(out) < 5:
        a = _exponent(rng, n, 6)
        if any(a) or len(out) == 4:
            out.append(Polynomial.monomial(a, rng.choice(COEFFS)))
    while len(out) < 10:
        k = rng.randint(2, 3)
        f = Polynomial.from_terms(n, [(_exponent(rng, n, 6), rng.choice(COEFFS)) for _ in range(k)])
        if not f.is_zero() and not f.is_monomial():
            out.append(f)
    return tuple(out)


@lru_cache(maxsize=None)
def suite() -> Tuple[SuiteCase, ...]:
    rng = random.Random(SUITE_SEED)
    cases = []
    for i, gens in enumerate(IDEALS_2 + IDEALS_3):
        I = MonomialIdeal.of(*gens)
        cases.append(SuiteCase(i, I, _polys(rng, I)))
    return tuple(cases)


def suite_pairs():
    for case in suite():
        for f in case.polys:
            yield case.ideal, f


def primary_ideals(n: int) -> List[MonomialIdeal]:
    return [c.ideal for c in suite() if c.ideal.n == n and c.ideal.is_primary()]


def random_ideal(rng: random.Random, n: int, primary: bool = False) -> MonomialIdeal:
    gens = set()
    if primary:
        gens.update(tuple(rng.randint(1, 6) if i == j else 0 for i in range(n)) for j in range(n))
    target = rng.randint(len(gens) or 1, 4) if n < 4 else len(gens)
    while len(gens) < target:
        a = _exponent(rng, n, 6)
        if any(a):
            gens.add(a)
    return MonomialIdeal.of(*gens)


def random_poly(rng: random.Random, n: int, max_terms: int = 3) -> Polynomial:
    while True:
        k = rng.randint(1, max_terms)
        f = Polynomial.from_terms(n, [(_exponent(rng, n, 6), rng.choice(COEFFS)) for _ in range(k)])
        if not f.is_zero():
            return f


def random_instances(seed: int, count: int):
    """``(f, I, p, q)`` with ``p/q`` equal to ``nubar`` about a third of the time."""
    from .polyhedra import nubar

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice((2, 2, 3))
        I = random_ideal(rng, n, primary=rng.random() < 0.7)
        f = random_poly(rng, n)
        value = nubar(f, I).value
        if value > 0 and rng.random() < 1 / 3:
            p, q = value.numerator, value.denominator
        else:
            p, q = rng.randint(1, 4), rng.randint(1, 4)
        out.append((f, I, p, q))
    return out
