"""Brute-force reference implementations.

Nothing here imports the facet machinery or the simplex code: orders come
from exhaustive products, asymptotic orders from LP vertex enumeration
with a private Gaussian elimination, and counts from enumerating boxes.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

Exp = Tuple[int, ...]


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def brute_in_power(a: Exp, gens: Sequence[Exp], k: int) -> bool:
    if k <= 0:
        return True
    for combo in itertools.combinations_with_replacement(gens, k):
        s = tuple(sum(col) for col in zip(*combo))
        if leq(s, a):
            return True
    return False


def brute_order(a: Exp, gens: Sequence[Exp]) -> int:
    k = 0
    while brute_in_power(a, gens, k + 1):
        k += 1
    return k


def brute_nu(support: Sequence[Exp], gens: Sequence[Exp]) -> int:
    return min(brute_order(a, gens) for a in support)


def _solve(M: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """Unique solution of a square system, or None when singular."""
    n = len(M)
    A = [row[:] + [r] for row, r in zip(M, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return None
        A[c], A[piv] = A[piv], A[c]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c] / A[c][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [A[i][n] / A[i][i] for i in range(n)]


def lp_value(a: Exp, gens: Sequence[Exp]) -> Fraction:
    return _lp_value(tuple(a), tuple(map(tuple, gens)))


@lru_cache(maxsize=None)
def _lp_value(a: Exp, gens: Tuple[Exp, ...]) -> Fraction:
    """``max sum(lam)`` over ``lam >= 0`` with ``sum lam_i g_i <= a``, by vertex enumeration."""
    m, n = len(gens), len(a)
    # constraints as rows: G^T lam <= a (n rows), -lam <= 0 (m rows)
    rows = [[Fraction(g[i]) for g in gens] for i in range(n)]
    rows += [[Fraction(-1 if j == i else 0) for j in range(m)] for i in range(m)]
    rhs = [Fraction(x) for x in a] + [Fraction(0)] * m
    best = None
    for tight in itertools.combinations(range(n + m), m):
        lam = _solve([rows[i] for i in tight], [rhs[i] for i in tight])
        if lam is None:
            continue
        if all(sum(r * x for r, x in zip(row, lam)) <= b for row, b in zip(rows, rhs)):
            v = sum(lam)
            if best is None or v > best:
                best = v
    return best


def lp_nubar(support: Sequence[Exp], gens: Sequence[Exp]) -> Fraction:
    return min(lp_value(a, gens) for a in support)


def _minimal(points: List[Exp]) -> Tuple[Exp, ...]:
    pts = set(points)
    return tuple(sorted(p for p in pts if not any(q != p and leq(q, p) for q in pts)))


def brute_frac_closure(gens: Sequence[Exp], p: int, q: int) -> Tuple[Exp, ...]:
    t = Fraction(p, q)
    n = len(gens[0])
    upper = [math.ceil(t * max(g[i] for g in gens)) for i in range(n)]
    pts = [a for a in itertools.product(*(range(u + 1) for u in upper)) if lp_value(a, gens) >= t]
    return _minimal(pts)


def brute_closure(gens: Sequence[Exp]) -> Tuple[Exp, ...]:
    return brute_frac_closure(gens, 1, 1)


def brute_colength(gens: Sequence[Exp], k: int) -> int:
    """Lattice points outside ``k * NP`` for a primary ideal."""
    n = len(gens[0])
    pure = [min(g[i] for g in gens if g[i] == sum(g) and g[i] > 0) for i in range(n)]
    return sum(
        1 for a in itertools.product(*(range(k * d) for d in pure)) if lp_value(a, gens) < k
    )


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> List[Fraction]:
    """Coefficients (low to high) of the interpolating polynomial."""
    n = len(xs)
    M = [[Fraction(x) ** j for j in range(n)] for x in xs]
    return _solve(M, [Fraction(y) for y in ys])


def ehrhart_multiplicity(gens: Sequence[Exp]) -> Tuple[int, bool]:
    """Fit the colength polynomial on ``k = 1..n+1``; return ``n! * lead`` and whether it predicts ``k = n+2, n+3``."""
    n = len(gens[0])
    ks = list(range(1, n + 2))
    coeffs = _interpolate(ks, [brute_colength(gens, k) for k in ks])

    def ev(k):
        return sum(c * k**j for j, c in enumerate(coeffs))

    predicts = all(ev(k) == brute_colength(gens, k) for k in (n + 2, n + 3))
    lead = coeffs[-1] * math.factorial(n)
    assert lead.denominator == 1
    return int(lead), predicts


def support_value(chain: Sequence[Tuple[int, int]], w: Tuple[int, int]) -> int:
    return min(w[0] * x + w[1] * y for x, y in chain)


def semigroup_gaps(gens: Sequence[int]) -> List[int]:
    """Gaps of the numerical semigroup generated by ``gens`` (gcd 1)."""
    limit = min(gens) * max(gens) + 1
    member = [False] * limit
    member[0] = True
    for k in range(1, limit):
        member[k] = any(k >= g and member[k - g] for g in gens)
    return [k for k in range(limit) if not member[k]]


def quotient_length(gens: Sequence[Exp], k: int, g: Exp) -> int:
    """``dim k[x,y] / (I^k + (x^g))`` by counting standard monomials."""
    powers = {tuple(0 for _ in gens[0])}
    for _ in range(k):
        powers = {tuple(x + y for x, y in zip(p, h)) for p in powers for h in gens}
    bound = max(max(p) for p in powers) + 1
    count = 0
    for a in itertools.product(range(bound), repeat=len(g)):
        if leq(g, a) or any(leq(p, a) for p in powers):
            continue
        count += 1
    return count


def orders_table(gens: Sequence[Exp], box_upper: Sequence[int]) -> Dict[Exp, int]:
    return {a: brute_order(a, gens) for a in itertools.product(*(range(u + 1) for u in box_upper))}
