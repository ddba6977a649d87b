"""Floating-point corroboration of Lojasiewicz-type inequalities.

Nothing here decides an exact claim.  Arc probes run in mpmath so that
high powers of small parameters neither underflow nor lose relative
accuracy; random samples use double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import mpmath
import numpy as np

from .core import MonomialIdeal, Polynomial, dot

PROBE_TS = (1e-2, 1e-3, 1e-4, 1e-5)
SLOPE_TOL = 1e-6
SAMPLE_FACTOR = 10.0
_DPS = 60


def fit_slope(xs: Sequence, ys: Sequence) -> float:
    """Least-squares slope of ``ys`` against ``xs``."""
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


def probe_scale(f: Polynomial, I: MonomialIdeal, w: Sequence[int], c: Sequence[Fraction]) -> Fraction:
    """Parameter rescaling ``s = scale * t`` for the arc probe.

    Along ``t -> c * t^w`` the terms of ``f`` off the initial face, and the
    non-tight generators, are smaller than the leading ones by a factor
    ``O(t)``.  The scale is the largest power of ten keeping that relative
    size below ``1e-12`` at the coarsest probe point, so the measured
    slopes reflect the exponents rather than the correction terms.
    """
    def rel_size(poly_terms):
        lead = min(dot(w, a) for a, _ in poly_terms)
        head = abs(sum(coef * _mono(c, a) for a, coef in poly_terms if dot(w, a) == lead))
        tail = sum(abs(coef * _mono(c, a)) for a, coef in poly_terms if dot(w, a) > lead)
        return Fraction(tail) / Fraction(head) if tail else Fraction(0)

    worst = max(
        rel_size(list(f.items)),
        rel_size([(g, Fraction(1)) for g in I.generators]),
        Fraction(1),
    )
    scale = Fraction(1)
    while worst * scale * Fraction(PROBE_TS[0]) > Fraction(1, 10**12):
        scale /= 10
    return scale


def _mono(c, a):
    out = Fraction(1)
    for x, k in zip(c, a):
        out *= Fraction(x) ** k
    return out


@dataclass(frozen=True)
class ArcProbe:
    weights: Tuple[int, ...]
    coefficients: Tuple[Fraction, ...]
    scale: Fraction
    ts: Tuple[float, ...]
    log_f: Tuple[float, ...]
    log_g: Tuple[float, ...]

    @property
    def f_exponent(self) -> float:
        """Measured exponent of ``|f|`` in the probe parameter."""
        return fit_slope([math.log(t) for t in self.ts], self.log_f)

    @property
    def g_exponent(self) -> float:
        return fit_slope([math.log(t) for t in self.ts], self.log_g)

    @property
    def slope(self) -> float:
        """Log-log slope of ``|f|`` against ``max |g_i|``."""
        return fit_slope(self.log_g, self.log_f)

    def log_ratio_exponent(self, power: Fraction) -> float:
        """Exponent in ``t`` of ``|f|^power / max|g|``; negative means unbounded."""
        logs = [float(power) * a - b for a, b in zip(self.log_f, self.log_g)]
        return fit_slope([math.log(t) for t in self.ts], logs)

    def max_log_ratio(self, power: Fraction) -> float:
        return max(float(power) * a - b for a, b in zip(self.log_f, self.log_g))


def arc_probe(f: Polynomial, I: MonomialIdeal, w: Sequence[int], c: Sequence[Fraction]) -> ArcProbe:
    scale = probe_scale(f, I, w, c)
    log_f, log_g = [], []
    with mpmath.workdps(_DPS):
        s0 = mpmath.mpf(scale.numerator) / scale.denominator
        cs = [mpmath.mpf(Fraction(x).numerator) / Fraction(x).denominator for x in c]
        for t in PROBE_TS:
            s = s0 * mpmath.mpf(t)
            point = [ci * s**wi for ci, wi in zip(cs, w)]
            fv = abs(f.evaluate(point))
            gv = max(abs(_eval_mono(point, g)) for g in I.generators)
            log_f.append(float(mpmath.log(fv)))
            log_g.append(float(mpmath.log(gv)))
    return ArcProbe(tuple(w), tuple(Fraction(x) for x in c), scale, PROBE_TS, tuple(log_f), tuple(log_g))


def _eval_mono(point, g):
    out = 1
    for x, k in zip(point, g):
        if k:
            out = out * x**k
    return out


def sample_points(n: int, count: int, seed: int) -> np.ndarray:
    """Points of ``(0,1]^n`` spread log-uniformly down to ``1e-4``."""
    rng = np.random.default_rng(seed)
    u = rng.uniform(0.0, 1.0, size=(count, n))
    return 10.0 ** (-4.0 * u)


def _values(f: Polynomial, I: MonomialIdeal, pts: np.ndarray):
    cols = [pts[:, i] for i in range(pts.shape[1])]
    # a constant f evaluates to a scalar
    fv = np.abs(np.broadcast_to(f.evaluate(cols), (len(pts),)))
    gv = np.max(np.stack([np.broadcast_to(_eval_mono(cols, g), (len(pts),)) for g in I.generators]), axis=0)
    return fv, gv


def log_ratios(f: Polynomial, I: MonomialIdeal, power: Fraction, pts: np.ndarray) -> np.ndarray:
    """``log(|f|^power / max_i |g_i|)`` at each row of ``pts``."""
    fv, gv = _values(f, I, pts)
    with np.errstate(divide="ignore"):
        return float(power) * np.log(fv) - np.log(gv)


LOG10_FLOOR = -4.0


def refine_max(f: Polynomial, I: MonomialIdeal, power: Fraction, starts: np.ndarray) -> float:
    """Coordinate ascent of the log-ratio in ``log10`` coordinates on ``[-4, 0]^n``.

    ``starts`` holds ``log10`` points.  Steps halve from 0.5 down to
    ``2^-10``; the result is a local maximum near the best starts.
    """
    U = np.array(starts, dtype=float)
    val = log_ratios(f, I, power, 10.0**U)
    n = U.shape[1]
    step = 0.5
    while step >= 2.0**-10:
        for _ in range(64):
            moved = False
            for i in range(n):
                for sign in (1.0, -1.0):
                    cand = U.copy()
                    cand[:, i] = np.clip(cand[:, i] + sign * step, LOG10_FLOOR, 0.0)
                    v = log_ratios(f, I, power, 10.0**cand)
                    better = v > val
                    if better.any():
                        U[better], val[better] = cand[better], v[better]
                        moved = True
            if not moved:
                break
        step /= 2
    return float(np.max(val))


@dataclass(frozen=True)
class SampleCheck:
    fitted_log_c: float
    worst_log_ratio: float
    points: List[Tuple[Tuple[float, ...], float, float]]  # (point, |f|, max|g|)

    @property
    def ok(self) -> bool:
        return self.worst_log_ratio <= self.fitted_log_c + math.log(SAMPLE_FACTOR)


def sample_check(
    f: Polynomial, I: MonomialIdeal, power: Fraction, samples: int, seed: int, probe: ArcProbe = None
) -> SampleCheck:
    """Fit ``C`` on the arc probe and the first half of the samples, test the rest.

    The fitted constant is the largest ratio seen on the fit data, refined
    by local ascent from the best fit points and from ``(1, ..., 1)``; the
    held-out half is never consulted.  The check passes when every
    held-out sample satisfies ``|f|^power <= 10 * C * max|g|``.
    """
    pts = sample_points(f.n, samples, seed)
    lr = log_ratios(f, I, power, pts)
    half = max(1, samples // 2)
    fit = list(lr[:half])
    if probe is not None:
        fit.append(probe.max_log_ratio(power))
    best = np.argsort(-lr[:half])[:4]
    starts = np.vstack([np.log10(pts[best]), np.zeros((1, f.n))])
    fit.append(refine_max(f, I, power, starts))
    fitted = max(fit)
    held = lr[half:] if samples > half else lr
    fv, gv = _values(f, I, pts)
    rows = [(tuple(float(x) for x in p), float(a), float(b)) for p, a, b in zip(pts, fv, gv)]
    return SampleCheck(float(fitted), float(np.max(held)), rows)
