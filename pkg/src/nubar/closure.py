"""Integral dependence: membership, certificates, equivalence checks and
the invariants derived from nubar (Lojasiewicz exponent, type, Izumi gap).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arcs import arc_ratio, facet_arcs, generic_coefficients
from .core import (
    INF,
    MonomialIdeal,
    Polynomial,
    _same_dim,
    dominates,
    lcm,
    monomial_order,
    normalize,
    power,
    radical,
    vadd,
    vscale,
    vsub,
)
from .errors import (
    CertificateNotFound,
    IndeterminateOrder,
    InvalidExponent,
    NotIntegral,
    NotMonomial,
    NotPrimary,
    VerificationFailed,
    ZeroPolynomial,
)
from .numeric import SLOPE_TOL, arc_probe, sample_check
from .polyhedra import closure as integral_closure
from .polyhedra import facets, lp_certificate, nubar, nubar_ideal, nubar_lp

DEFAULT_M_MAX = 16


def is_integral(f: Polynomial, I: MonomialIdeal, p: int = 1, q: int = 1) -> bool:
    """``f^q`` lies in the integral closure of ``I^p``."""
    if f.is_zero():
        raise ZeroPolynomial("membership of 0 is trivial and excluded")
    return nubar(f, I).value >= Fraction(p, q)


# ---------------------------------------------------------------------------
# dependence relations


def power_witness(a: Sequence[int], I: MonomialIdeal, k: int) -> Optional[Tuple[int, ...]]:
    """Generator multiplicities ``mu`` with ``sum(mu) = k`` and ``sum(mu_j g_j) <= a``."""
    gens = I.generators
    bound = facets(I).order_bound
    failed = set()
    mu = [0] * len(gens)

    def dfs(r, start, need):
        if need == 0:
            return True
        key = (r, start, need)
        if key in failed or bound(r) < need:
            return False
        for j in range(start, len(gens)):
            if dominates(r, gens[j]):
                mu[j] += 1
                if dfs(vsub(r, gens[j]), j, need - 1):
                    return True
                mu[j] -= 1
        failed.add(key)
        return False

    return tuple(mu) if dfs(tuple(a), 0, k) else None


@dataclass(frozen=True)
class DependenceCertificate:
    """``f`` monomial with ``(f^q)^m`` in ``(I^p)^m``.

    This is the integral dependence relation ``T^m + a_m = 0`` for
    ``T = f^q`` over ``I^p`` with ``a_m = -(f^q)^m``.  ``multiplicities``
    lists how many copies of each generator of ``I`` divide ``(f^q)^m``.
    """

    f: Polynomial
    I: MonomialIdeal
    p: int
    q: int
    m: int
    multiplicities: Tuple[int, ...]

    @property
    def relation_note(self) -> str:
        return f"T^{self.m} - ({self.f})^{self.q * self.m} = 0 with ({self.f})^{self.q * self.m} in (I^{self.p})^{self.m}"

    def verify(self) -> bool:
        (a,) = self.f.support
        target = vscale(self.q * self.m, a)
        used = (0,) * self.I.n
        for g, k in zip(self.I.generators, self.multiplicities):
            used = vadd(used, vscale(k, g))
        return sum(self.multiplicities) == self.p * self.m and dominates(target, used)


def sufficient_m(a: Sequence[int], I: MonomialIdeal, p: int, q: int) -> Optional[int]:
    """An ``m`` that is guaranteed to work when ``nubar(x^a) >= p/q``.

    Scaling a basic optimal LP solution for ``q*a`` by the lcm of its
    denominators gives integral multiplicities.  Returns ``None`` when
    ``x^a`` is not integral.
    """
    res = lp_certificate(tuple(q * x for x in a), I)
    if res.value < p:
        return None
    return lcm(x.denominator for x in res.x)


def dependence_certificate(
    f: Polynomial, I: MonomialIdeal, p: int = 1, q: int = 1, m_max: int = DEFAULT_M_MAX
) -> DependenceCertificate:
    """Smallest ``m <= m_max`` with ``(f^q)^m`` in ``(I^p)^m``."""
    _same_dim(f, I)
    if not f.is_monomial():
        raise NotMonomial("dependence certificates are built for monomials")
    if not is_integral(f, I, p, q):
        raise NotIntegral(f"nubar({f}) < {p}/{q}")
    (a,) = f.support
    for m in range(1, m_max + 1):
        mu = power_witness(vscale(q * m, a), I, p * m)
        if mu is not None:
            return DependenceCertificate(f, I, p, q, m, mu)
    raise CertificateNotFound(f"no relation with m <= {m_max} for {f} over {I}, p/q = {p}/{q}")


# ---------------------------------------------------------------------------
# five-way equivalence


@dataclass
class EquivalenceReport:
    p: int
    q: int
    nubar: Fraction
    facet_witness: Tuple[int, ...]
    verdicts: Dict[str, bool]
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts.values())) == 1

    @property
    def verdict(self) -> bool:
        if not self.consistent:
            raise VerificationFailed(f"inconsistent verdicts {self.verdicts}")
        return next(iter(self.verdicts.values()))


def _closure_membership(f: Polynomial, I: MonomialIdeal, p: int, q: int) -> bool:
    # explicit generators of the closure of I^p, from its own polyhedron
    target = integral_closure(power(I, p))
    return all(target.contains_monomial(b) for b in (f**q).support)


def _certificate_verdict(f: Polynomial, I: MonomialIdeal, p: int, q: int, m_max: int):
    if f.is_monomial():
        cases = [(f, q)]
    else:
        # f^q is in the closure of I^p iff each of its terms is
        cases = [(Polynomial.monomial(b), 1) for b in (f**q).support]
    found = []
    for mono, qq in cases:
        (a,) = mono.support
        bound = sufficient_m(a, I, p, qq)
        if bound is None:
            return False, found
        cert = dependence_certificate(mono, I, p, qq, max(m_max, bound))
        if not cert.verify():
            raise VerificationFailed(f"certificate for {mono} does not verify")
        found.append(cert.m)
    return True, found


def verify_equivalences(
    f: Polynomial,
    I: MonomialIdeal,
    p: int,
    q: int,
    samples: int = 100,
    seed: int = 0,
    m_max: int = DEFAULT_M_MAX,
) -> EquivalenceReport:
    """Decide ``f^q in closure(I^p)`` five independent ways.

    1. explicit generators of the closure of ``I^p`` (integer points);
    2. the LP value of every term against ``p/q``;
    3. arcs realizing each facet valuation: every ratio ``>= p/q``;
    4. integral dependence relations (per term of ``f^q`` for polynomials);
    5. floats: ``|f|^{q/p} <= C max|g_i|`` along the certificate arc and on
       random samples of the unit cube.
    """
    _same_dim(f, I)
    if f.is_zero():
        raise ZeroPolynomial("verify needs a nonzero f")
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    target = Fraction(p, q)
    res = nubar(f, I)
    verdicts: Dict[str, bool] = {}
    details: Dict[str, object] = {}

    verdicts["closure"] = _closure_membership(f, I, p, q)

    via_lp = min(nubar_lp(a, I) for a in f.support)
    verdicts["lp"] = via_lp >= target
    details["lp_value"] = via_lp

    ratios = {}
    for w, h in facet_arcs(f, I):
        try:
            ratios[w] = arc_ratio(f, I, h)
        except IndeterminateOrder:  # pragma: no cover - generic coefficients prevent it
            raise VerificationFailed(f"facet arc {w} gave an indeterminate order")
    verdicts["arcs"] = all(r >= target for r in ratios.values())
    details["arc_ratios"] = ratios

    ok, ms = _certificate_verdict(f, I, p, q, m_max)
    verdicts["certificate"] = ok
    details["certificate_m"] = ms

    w = res.certificate.normal
    probe = arc_probe(f, I, w, generic_coefficients(f, w))
    power_ = Fraction(q, p)
    arc_exp = probe.log_ratio_exponent(power_)
    arc_ok = arc_exp >= -SLOPE_TOL
    sc = sample_check(f, I, power_, samples, seed, probe)
    verdicts["numeric"] = arc_ok and sc.ok
    details["numeric"] = {
        "arc_exponent": arc_exp,
        "arc_bounded": arc_ok,
        "samples_ok": sc.ok,
        "log_fitted_c": sc.fitted_log_c,
        "worst_log_ratio": sc.worst_log_ratio,
    }
    return EquivalenceReport(p, q, res.value, w, verdicts, details)


# ---------------------------------------------------------------------------
# Lojasiewicz exponent


@dataclass(frozen=True)
class LojasiewiczReport:
    theta: object  # Fraction or INF
    weights: Tuple[int, ...]
    coefficients: Tuple[Fraction, ...]
    f_exponent: Optional[float]
    g_exponent: Optional[float]
    slope: Optional[float]
    numeric_samples: List[Tuple[Tuple[float, ...], float, float]]
    samples_ok: bool
    slope_ok: bool

    @property
    def verdict(self) -> bool:
        return self.samples_ok and self.slope_ok


def lojasiewicz(f: Polynomial, I: MonomialIdeal, samples: int = 100, seed: int = 0) -> LojasiewiczReport:
    """Optimal exponent ``theta`` in ``|f|^theta <= C max|g_i|`` near 0.

    ``theta = 1/nubar_I(f)``; the floats only corroborate it.
    """
    _same_dim(f, I)
    if not I.is_primary():
        raise NotPrimary(f"{I} is not primary")
    if f.is_zero():
        raise ZeroPolynomial("Lojasiewicz exponent of 0")
    res = nubar(f, I)
    w = res.certificate.normal
    c = generic_coefficients(f, w)
    if res.value == 0:
        # f(0) != 0: no finite exponent works
        return LojasiewiczReport(INF, w, c, None, None, None, [], True, f.evaluate((Fraction(0),) * f.n) != 0)
    theta = 1 / res.value
    probe = arc_probe(f, I, w, c)
    sc = sample_check(f, I, theta, samples, seed, probe)
    return LojasiewiczReport(
        theta=theta,
        weights=w,
        coefficients=c,
        f_exponent=probe.f_exponent,
        g_exponent=probe.g_exponent,
        slope=probe.slope,
        numeric_samples=sc.points,
        samples_ok=sc.ok,
        slope_ok=abs(probe.slope - float(res.value)) <= SLOPE_TOL,
    )


# ---------------------------------------------------------------------------
# gradient inequality for Brieskorn polynomials


@dataclass(frozen=True)
class GradientReport:
    exponents: Tuple[int, ...]
    nubar_jacobian: Fraction
    theta: Fraction
    nubar_euler: Fraction

    @property
    def ok(self) -> bool:
        return self.nubar_jacobian > 1 and self.nubar_euler == 1


def brieskorn(exponents: Sequence[int]) -> Polynomial:
    n = len(exponents)
    return Polynomial.from_terms(
        n, [(tuple(a if i == j else 0 for i in range(n)), 1) for j, a in enumerate(exponents)]
    )


def gradient_suite(exponents: Sequence[int]) -> GradientReport:
    """``f = sum x_i^{a_i}``: nubar of ``f`` against its jacobian ideal and against ``(x_i df/dx_i)``."""
    exponents = tuple(int(a) for a in exponents)
    if not 1 <= len(exponents) <= 4:
        raise InvalidExponent("between 1 and 4 exponents expected")
    if any(a < 2 for a in exponents):
        raise InvalidExponent(f"Brieskorn exponents must be >= 2, got {exponents}")
    n = len(exponents)
    f = brieskorn(exponents)
    unit = lambda i, k: tuple(k if j == i else 0 for j in range(n))  # noqa: E731
    jac = normalize(unit(i, a - 1) for i, a in enumerate(exponents))
    euler = normalize(unit(i, a) for i, a in enumerate(exponents))
    nj = nubar(f, jac).value
    return GradientReport(exponents, nj, 1 / nj, nubar(f, euler).value)


# ---------------------------------------------------------------------------
# type of an ideal


@dataclass(frozen=True)
class TypeReport:
    value: Fraction
    inclusions: Dict[int, bool]


def type_report(I: MonomialIdeal, m_range: Sequence[int] = (1, 2, 3, 4)) -> TypeReport:
    if not I.is_primary():
        raise NotPrimary(f"{I} is not primary")
    rad = radical(I)
    t = 1 / nubar_ideal(rad, I)
    checks = {}
    for m in m_range:
        k = math.ceil(m * t)
        checks[m] = integral_closure(power(I, m)).contains(power(rad, k))
    return TypeReport(t, checks)


def type_of_ideal(I: MonomialIdeal) -> Fraction:
    """``1 / nubar_I(sqrt I)``, after checking ``sqrt(I)^ceil(mt)`` lies in the closure of ``I^m``."""
    rep = type_report(I)
    if not all(rep.inclusions.values()):
        raise VerificationFailed(f"type inclusion failed for {I}: {rep.inclusions}")
    return rep.value


# ---------------------------------------------------------------------------
# Izumi gap


@dataclass(frozen=True)
class GapScan:
    observed_gap: Fraction
    by_degree: Tuple[Fraction, ...]  # max gap among monomials of each total degree
    argmax: Tuple[int, ...]
    stabilized: bool


def _monomials_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def izumi_gap_scan(I: MonomialIdeal, degree_bound: int = 8) -> GapScan:
    """Largest ``nubar - nu`` over monomials of degree ``<= degree_bound``.

    This is an observed value, not a proved bound.  ``stabilized`` is true
    when the last two degree slices do not raise the maximum.
    """
    if not I.is_primary():
        raise NotPrimary(f"{I} is not primary")
    if not 0 <= degree_bound <= 12:
        raise ValueError("degree_bound must lie in 0..12")
    P = facets(I)
    best = (Fraction(-1), None)
    by_degree = []
    for d in range(degree_bound + 1):
        top = Fraction(-1)
        for a in _monomials_of_degree(I.n, d):
            gap = P.nubar_monomial(a) - monomial_order(a, I, P.order_bound)
            if gap < 0:
                raise VerificationFailed(f"negative gap at {a}")
            if gap > top:
                top = gap
            if gap > best[0]:
                best = (gap, a)
        by_degree.append(top)
    head = max(by_degree[:-2], default=Fraction(-1))
    stabilized = len(by_degree) > 2 and max(by_degree[-2:]) <= head
    return GapScan(best[0], tuple(by_degree), best[1], stabilized)
