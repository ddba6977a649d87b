"""Newton polyhedra of monomial ideals and their facet valuations.

``NP(I) = conv(exponents of generators) + R^n_{>=0}``.  Each facet with
positive level gives a monomial valuation ``v_w(x^a) = <w, a>`` (a Rees
valuation of ``I``), and the asymptotic order is

    nubar_I(f) = min_w  v_w(f) / v_w(I).

Everything is exact; the dimension is capped at 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from . import lp
from .core import (
    Exponent,
    MonomialIdeal,
    Polynomial,
    _same_dim,
    box,
    dominates,
    dot,
    lcm,
    normalize,
    radical,
)
from .errors import (
    ContainmentViolated,
    DimensionTooLarge,
    NotPrimary,
    VerificationFailed,
    ZeroPolynomial,
)

MAX_DIM = 4


@dataclass(frozen=True)
class FacetValuation:
    """Facet ``<normal, x> >= level`` of a Newton polyhedron.

    ``lattice_degree`` is the lattice length of the facet segment; it is
    only defined for compact facets in two variables (``None`` otherwise).
    """

    normal: Exponent
    level: int
    lattice_degree: Optional[int] = None

    def __call__(self, a: Sequence[int]) -> int:
        return dot(self.normal, a)

    def of_poly(self, f: Polynomial) -> int:
        return min(dot(self.normal, a) for a in f.support)

    def of_ideal(self, J: MonomialIdeal) -> int:
        return min(dot(self.normal, g) for g in J.generators)

    @property
    def compact(self) -> bool:
        return all(self.normal)


@dataclass(frozen=True)
class NewtonPolyhedron:
    source: MonomialIdeal
    facets: Tuple[FacetValuation, ...]
    # tight generators per facet, same order as ``facets``
    tight: Tuple[Tuple[Exponent, ...], ...] = field(repr=False, default=())

    def contains(self, a: Sequence[int], scale=1) -> bool:
        """``a`` lies in ``scale * NP(I)``."""
        return all(dot(w.normal, a) >= scale * w.level for w in self.facets)

    def nubar_monomial(self, a: Sequence[int]) -> Fraction:
        return min(Fraction(dot(w.normal, a), w.level) for w in self.facets)

    def order_bound(self, r: Sequence[int]) -> int:
        """Upper bound ``floor(nubar(x^r))`` on the I-adic order of ``x^r``."""
        return min(dot(w.normal, r) // w.level for w in self.facets)


def _primitive(v) -> Tuple[int, ...]:
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def nullspace_vector(rows: Sequence[Sequence[int]], n: int) -> Optional[Tuple[int, ...]]:
    """Primitive integer generator of the kernel when it is one-dimensional."""
    M = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [x / piv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        return None
    fc = free[0]
    v = [Fraction(0)] * n
    v[fc] = Fraction(1)
    for i, pc in enumerate(pivots):
        v[pc] = -M[i][fc]
    return _primitive(v)


def _lattice_length(points: Sequence[Exponent]) -> int:
    lo, hi = min(points), max(points)
    return math.gcd(*(h - l for h, l in zip(hi, lo)))


def hull_vertices(gens: Sequence[Exponent]) -> Tuple[Exponent, ...]:
    """Generators that are vertices of ``conv(gens) + orthant``.

    ``g`` is not a vertex exactly when it lies in the polyhedron of the
    other generators, i.e. when their LP value at ``g`` reaches 1.
    """
    gens = tuple(gens)
    if len(gens) <= 2:
        return gens
    n = len(gens[0])
    out = []
    for j, g in enumerate(gens):
        others = gens[:j] + gens[j + 1 :]
        A = [[h[i] for h in others] for i in range(n)]
        if lp.maximize([1] * len(others), A, list(g)).value < 1:
            out.append(g)
    return tuple(out)


@lru_cache(maxsize=4096)
def facets(I: MonomialIdeal) -> NewtonPolyhedron:
    """All facets of ``NP(I)`` with positive level, sorted by normal.

    A facet is spanned by ``n`` affinely independent elements among the
    generators (points) and coordinate directions (rays).  Candidate
    normals are the kernels of those spanning sets; a candidate is kept
    when it is nonnegative, valid on every generator and has positive
    level.  Independence of the spanning set makes every kept candidate a
    genuine facet, so no further redundancy filter is needed.
    """
    n = I.n
    if n > MAX_DIM:
        raise DimensionTooLarge(f"facet enumeration supports n <= {MAX_DIM}, got {n}")
    gens = hull_vertices(I.generators)
    found = {}
    for s in range(1, n + 1):
        for pts in combinations(gens, s):
            base = pts[0]
            diffs = [tuple(p - b for p, b in zip(q, base)) for q in pts[1:]]
            for rays in combinations(range(n), n - s):
                rows = diffs + [tuple(1 if i == j else 0 for i in range(n)) for j in rays]
                w = nullspace_vector(rows, n)
                if w is None:
                    continue
                if all(x <= 0 for x in w):
                    w = tuple(-x for x in w)
                if any(x < 0 for x in w):
                    continue
                level = dot(w, base)
                if level <= 0 or w in found:
                    continue
                if all(dot(w, g) >= level for g in gens):
                    found[w] = level
    out = []
    tight = []
    for w in sorted(found):
        level = found[w]
        on = tuple(g for g in I.generators if dot(w, g) == level)
        deg = _lattice_length(on) if (n == 2 and all(w)) else None
        out.append(FacetValuation(w, level, deg))
        tight.append(on)
    return NewtonPolyhedron(I, tuple(out), tuple(tight))


# ---------------------------------------------------------------------------
# asymptotic order


@dataclass(frozen=True)
class NubarResult:
    value: Fraction
    certificate: FacetValuation
    witness_term: Exponent

    def check(self, f: Polynomial, I: MonomialIdeal) -> bool:
        """Recompute both certificate invariants."""
        w = self.certificate
        if Fraction(w(self.witness_term), w.level) != self.value:
            return False
        if self.witness_term not in f.support:
            return False
        return all(
            Fraction(v(a), v.level) >= self.value for v in facets(I).facets for a in f.support
        )


def nubar_lp(a: Sequence[int], I: MonomialIdeal) -> Fraction:
    """``max sum(mu)`` subject to ``sum(mu_j g_j) <= a``, ``mu >= 0``."""
    res = lp_certificate(a, I)
    return res.value


def lp_certificate(a: Sequence[int], I: MonomialIdeal) -> lp.LPResult:
    gens = I.generators
    A = [[g[i] for g in gens] for i in range(I.n)]
    res = lp.maximize([1] * len(gens), A, list(a))
    if res.status != lp.OPTIMAL:
        raise VerificationFailed(f"LP for {a} over {I} ended with status {res.status}")
    return res


def nubar(f: Polynomial, I: MonomialIdeal, check: bool = True) -> NubarResult:
    """Asymptotic order of ``f`` with respect to ``I``, with its certificate.

    Minimum over facets of ``v_w(f)/level(w)``; ties go to the
    lexicographically smallest normal and then the smallest term.  With
    ``check`` the value is recomputed term by term through the LP and the
    two are required to agree.
    """
    _same_dim(f, I)
    if f.is_zero():
        raise ZeroPolynomial("nubar of the zero polynomial is infinite")
    P = facets(I)
    best = None
    for w in P.facets:
        for a in f.support:
            key = (Fraction(w(a), w.level), w.normal, a)
            if best is None or key < best[0]:
                best = (key, w, a)
    (value, _, _), w, a = best
    if check:
        via_lp = min(nubar_lp(t, I) for t in f.support)
        if via_lp != value:
            raise VerificationFailed(f"facet minimum {value} != LP value {via_lp} for {f} over {I}")
    return NubarResult(value, w, a)


def nubar_value(f: Polynomial, I: MonomialIdeal) -> Fraction:
    return nubar(f, I, check=False).value


def nubar_ideal(J: MonomialIdeal, I: MonomialIdeal) -> Fraction:
    _same_dim(J, I)
    P = facets(I)
    return min(P.nubar_monomial(g) for g in J.generators)


# ---------------------------------------------------------------------------
# closures


def _minimal_points(P: NewtonPolyhedron, scale: Fraction, upper: Sequence[int]):
    """Minimal integer points of ``scale * NP`` inside the box ``[0, upper]``.

    Each column (fixed prefix) contributes at most its lowest point; the
    result is then minimal in the last coordinate and is tested in the
    others.
    """
    n = len(upper)
    out = []
    for pre in box(tuple(upper[:-1])):
        t = 0
        for w in P.facets:
            rest = scale * w.level - dot(w.normal[:-1], pre)
            if rest <= 0:
                continue
            if w.normal[-1] == 0:
                t = None
                break
            t = max(t, math.ceil(rest / w.normal[-1]))
        if t is None or t > upper[-1]:
            continue
        a = pre + (t,)
        if all(not a[i] or not P.contains(a[:i] + (a[i] - 1,) + a[i + 1 :], scale) for i in range(n - 1)):
            out.append(a)
    return out


def fractional_closure(I: MonomialIdeal, p: int, q: int) -> MonomialIdeal:
    """Monomials ``x^a`` with ``nubar_I(x^a) >= p/q``.

    A minimal such ``a`` satisfies ``a_i <= ceil(p/q * M_i)`` with ``M`` the
    componentwise maximum of the generators: writing ``a = (p/q) y + r``
    with ``y`` in the hull and ``r >= 0``, a larger ``a_i`` forces
    ``r_i >= 1`` and ``a - e_i`` still qualifies.
    """
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    P = facets(I)
    lam = Fraction(p, q)
    upper = tuple(math.ceil(lam * m) for m in I.max_exponents())
    return normalize(_minimal_points(P, lam, upper))


def closure(I: MonomialIdeal) -> MonomialIdeal:
    """Integral closure: the integer points of ``NP(I)``."""
    return fractional_closure(I, 1, 1)


def universal_denominator(I: MonomialIdeal) -> int:
    return lcm(w.level for w in facets(I).facets)


def _require_primary(I: MonomialIdeal):
    if not I.is_primary():
        raise NotPrimary(f"{I} is not primary to the maximal ideal")


def _hull_2d(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _det(rows) -> Fraction:
    M = [[Fraction(x) for x in r] for r in rows]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det


def multiplicity(I: MonomialIdeal) -> int:
    """``n!`` times the volume of the orthant minus ``NP(I)``.

    The region is the union of the cones from the origin over the compact
    facets; each facet is fan-triangulated and every simplex
    ``(0, v_1, .., v_n)`` contributes ``|det(v_1, .., v_n)|``.
    """
    _require_primary(I)
    n = I.n
    if n > 3:
        raise DimensionTooLarge("multiplicity supports n <= 3")
    if n == 1:
        return I.generators[0][0]
    P = facets(I)
    total = Fraction(0)
    for w, on in zip(P.facets, P.tight):
        if n == 2:
            total += abs(_det([min(on), max(on)]))
        else:
            k = next(i for i in range(3) if w.normal[i])
            proj = {tuple(v[j] for j in range(3) if j != k): v for v in on}
            ring = [proj[p] for p in _hull_2d(list(proj))]
            for i in range(1, len(ring) - 1):
                total += abs(_det([ring[0], ring[i], ring[i + 1]]))
    if total.denominator != 1:
        raise VerificationFailed(f"non-integral multiplicity {total} for {I}")
    return int(total)


def colength_closure(I: MonomialIdeal, k: int) -> int:
    """Number of monomials outside ``k * NP(I)``, i.e. the colength of the closure of ``I^k``."""
    _require_primary(I)
    if I.n > 3:
        raise DimensionTooLarge("colength supports n <= 3")
    if k < 1:
        raise ValueError("k must be positive")
    P = facets(I)
    n = I.n
    pp = I.pure_powers()
    # for each prefix, the smallest admissible last coordinate
    count = 0
    for pre in box(tuple(k * p - 1 for p in pp[:-1])):
        need = 0
        for w in P.facets:
            rest = k * w.level - dot(w.normal[:-1], pre)
            if rest > 0:
                need = max(need, -(-rest // w.normal[-1]))
        count += need
    return count


# ---------------------------------------------------------------------------
# several ideals


@dataclass(frozen=True)
class HalfSpace:
    """``sum(coeffs[i] * m_i) + coeffs[-1] * n >= 0`` over ``(m_1..m_k, n)``."""

    coeffs: Tuple[int, ...]

    def __call__(self, point) -> bool:
        return dot(self.coeffs, point) >= 0


def _irredundant(forms: List[Tuple[Fraction, ...]]) -> List[int]:
    """Indices of linear forms that are the strict minimum somewhere on the simplex."""
    keep = []
    k = len(forms[0])
    for i, L in enumerate(forms):
        others = [M for j, M in enumerate(forms) if j != i]
        if not others:
            keep.append(i)
            continue
        # maximize s: L(m) - M(m) + s <= 0 for every other M, sum(m) = 1, m >= 0
        # variables (m_1..m_k, s+, s-)
        A, b = [], []
        for M in others:
            A.append([L[t] - M[t] for t in range(k)] + [1, -1])
            b.append(0)
        A.append([1] * k + [0, 0])
        b.append(1)
        A.append([-1] * k + [0, 0])
        b.append(-1)
        res = lp.maximize([0] * k + [1, -1], A, b)
        if res.status == lp.UNBOUNDED or (res.status == lp.OPTIMAL and res.value > 0):
            keep.append(i)
    return keep


def asymptotic_cone(Js: Sequence[MonomialIdeal], I: MonomialIdeal) -> List[HalfSpace]:
    """Closure of the cone of ``(m, n)`` with ``J_1^{m_1}...J_k^{m_k}`` in ``I^n``.

    It is ``n * level(w) <= sum_i m_i * w(J_i)`` over the facets ``w`` of
    ``NP(I)`` (inside the nonnegative orthant, which is left implicit);
    redundant inequalities are dropped by an LP test.
    """
    if not Js:
        raise ValueError("need at least one ideal J")
    _same_dim(I, *Js)
    rad = radical(I)
    for J in Js:
        if not rad.contains(J):
            raise ContainmentViolated(f"{J} is not contained in the radical of {I}")
    P = facets(I)
    forms, rows = [], []
    seen = set()
    for w in P.facets:
        row = tuple(w.of_ideal(J) for J in Js) + (-w.level,)
        row = _primitive(row)
        if row in seen:
            continue
        seen.add(row)
        rows.append(row)
        forms.append(tuple(Fraction(w.of_ideal(J), w.level) for J in Js))
    return [HalfSpace(rows[i]) for i in _irredundant(forms)]
