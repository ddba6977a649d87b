import math
from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from nubar.arcs import generic_coefficients
from nubar.core import MonomialIdeal, Polynomial
from nubar.numeric import SLOPE_TOL, arc_probe, fit_slope, log_ratios, sample_check, sample_points
from nubar.polyhedra import nubar

from strategies import ideals, polys

X2Y3 = MonomialIdeal.of((2, 0), (0, 3))


@given(st.floats(-5, 5), st.floats(-5, 5))
def test_fit_slope_exact_line(a, b):
    xs = [0.0, 1.0, 2.5, 4.0]
    assert math.isclose(fit_slope(xs, [a * x + b for x in xs]), a, abs_tol=1e-9)


def test_sample_points_deterministic_and_in_range():
    p = sample_points(3, 50, 7)
    assert np.array_equal(p, sample_points(3, 50, 7))
    assert p.min() >= 1e-4 and p.max() <= 1.0


def test_probe_exponents_for_cusp_ideal():
    f = Polynomial.monomial((1, 1))
    probe = arc_probe(f, X2Y3, (3, 2), (1, 1))
    assert abs(probe.f_exponent - 5) < 1e-9
    assert abs(probe.g_exponent - 6) < 1e-9
    assert abs(probe.slope - 5 / 6) < SLOPE_TOL
    assert probe.log_ratio_exponent(Fraction(6, 5)) > -1e-9
    assert probe.log_ratio_exponent(Fraction(1)) < -0.5


@given(st.data())
def test_probe_slope_is_nubar(data):
    I = data.draw(ideals(n=2, primary=True))
    f = data.draw(polys(2))
    r = nubar(f, I)
    if r.value == 0:
        return
    w = r.certificate.normal
    probe = arc_probe(f, I, w, generic_coefficients(f, w))
    assert abs(probe.slope - float(r.value)) <= SLOPE_TOL


def test_sample_check_accepts_true_exponent_and_flags_wrong_one():
    f = Polynomial.monomial((0, 1))
    good = sample_check(f, X2Y3, Fraction(3), 100, 0)
    assert good.ok
    # exponent 1 is below theta = 3: along the diagonal |y| / x^2 blows up
    lr = log_ratios(f, X2Y3, Fraction(1), np.array([[10.0**-k, 10.0**-k] for k in range(1, 5)]))
    assert np.all(np.diff(lr) > 0)


def test_constant_polynomial_is_handled():
    c = Polynomial.constant(2, 3)
    chk = sample_check(c, X2Y3, Fraction(1), 20, 0)
    assert math.isfinite(chk.fitted_log_c)
