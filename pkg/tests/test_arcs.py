from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nubar.arcs import (
    Arc,
    OrderValue,
    TruncatedSeries,
    arc_infimum_check,
    arc_ratio,
    certificate_arc,
    compose_order,
    facet_arcs,
    ideal_order,
    monomial_arc,
    random_arcs_for,
    valuation_arc,
)
from nubar.core import MonomialIdeal, Polynomial
from nubar.errors import IndeterminateOrder, NonPositiveWeight, TruncationMismatch, TruncationTooSmall
from nubar.polyhedra import nubar

from strategies import ideals, polys

X2Y3 = MonomialIdeal.of((2, 0), (0, 3))


def P(n, *terms):
    return Polynomial.from_terms(n, terms)


def series(d, T=64):
    return TruncatedSeries.from_dict(d, T)


def test_series_basics():
    s = series({1: 1, 2: -1}, 5)
    assert (s * s).as_dict == {2: 1, 3: -2, 4: 1}
    assert (s**3).as_dict == {3: 1, 4: -3}  # exponents from 5 on are unknown
    assert (s + s.scale(-1)).is_zero()
    assert series({}, 5).order() is not None


def test_arc_validation():
    with pytest.raises(TruncationMismatch):
        Arc((series({1: 1}, 8), series({1: 1}, 9)))
    with pytest.raises(ValueError):
        Arc((series({0: 1}), series({0: 2})))
    with pytest.raises(NonPositiveWeight):
        monomial_arc((0, 1), (1, 1))


def test_compose_examples():
    cusp = monomial_arc((2, 3), (1, 1), 12)
    assert compose_order(P(2, ((1, 0), 1)), cusp) == OrderValue.exactly(2)
    assert compose_order(P(2, ((3, 0), 1), ((0, 2), -1)), cusp) == OrderValue.at_least(12)
    assert compose_order(P(2, ((3, 0), 1), ((0, 2), 1)), cusp) == OrderValue.exactly(6)


def test_static_bound_refuses_small_truncation():
    h = monomial_arc((4, 5), (1, 1), 8)
    with pytest.raises(TruncationTooSmall):
        compose_order(P(2, ((2, 0), 1)), h)


def test_ideal_order_examples():
    assert ideal_order(MonomialIdeal.of((1, 0), (0, 1)), monomial_arc((2, 3), (1, 1))) == OrderValue.exactly(2)
    assert ideal_order(X2Y3, monomial_arc((1, 1), (1, 1))) == OrderValue.exactly(2)
    inside = valuation_arc((0, 1), (1, 1), 16)
    h = Arc((series({}, 16), inside.components[1]))
    assert ideal_order(MonomialIdeal.of((1, 0)), h) == OrderValue.at_least(16)


def test_arc_ratio_examples():
    h = monomial_arc((3, 2), (1, 1))
    assert monomial_arc((3, 2), (1, 1)).components[0].as_dict == {3: 1}
    assert arc_ratio(P(2, ((1, 1), 1)), X2Y3, h) == Fraction(5, 6)
    assert arc_ratio(P(2, ((1, 0), 1)), MonomialIdeal.of((1, 0), (0, 1)), monomial_arc((1, 2), (1, 1))) == 1
    assert arc_ratio(P(2, ((0, 1), 1)), X2Y3, h) == Fraction(1, 3)
    cusp = monomial_arc((2, 3), (1, 1), 20)
    with pytest.raises(IndeterminateOrder):
        arc_ratio(P(2, ((3, 0), 1), ((0, 2), -1)), X2Y3, cusp)


def test_certificate_arc_for_example():
    f = P(2, ((1, 1), 1))
    h = certificate_arc(f, X2Y3)
    assert [s.order() for s in h.components] == [3, 2]
    rep = arc_infimum_check(f, X2Y3, random_arcs_for(f, X2Y3, 50, seed=0))
    assert rep.ok and rep.min_ratio == Fraction(5, 6)


def test_generator_ratio_at_least_one():
    f = P(2, ((2, 0), 1))
    rep = arc_infimum_check(f, X2Y3, random_arcs_for(f, X2Y3, 20, seed=1))
    assert rep.min_ratio >= 1 and rep.attained


def test_zero_set_arcs_are_indeterminate():
    f = P(2, ((3, 0), 1), ((0, 2), -1))
    rep = arc_infimum_check(f, X2Y3, [monomial_arc((2, 3), (1, 1), 30)])
    assert rep.indeterminate == 1 and rep.ok


@given(st.data())
def test_lower_bound_law(data):
    n = data.draw(st.integers(2, 3))
    I = data.draw(ideals(n=n))
    f = data.draw(polys(n))
    rep = arc_infimum_check(f, I, random_arcs_for(f, I, 10, seed=data.draw(st.integers(0, 99))))
    assert rep.lower_bound_ok and rep.attained


@given(st.data())
def test_valuation_law(data):
    n = 2
    f, g = data.draw(polys(n)), data.draw(polys(n))
    w = data.draw(st.tuples(st.integers(1, 5), st.integers(1, 5)))
    c = data.draw(st.tuples(st.sampled_from([1, -1, 2, Fraction(1, 2)]), st.sampled_from([1, -2, 3])))
    h = monomial_arc(w, c, 200)
    of, og, ofg = compose_order(f, h), compose_order(g, h), compose_order(f * g, h)
    if of.exact and og.exact:
        assert ofg == OrderValue.exactly(of.value + og.value)
    s = f + g
    if not s.is_zero() and of.exact and og.exact:
        os_ = compose_order(s, h)
        assert os_.value >= min(of.value, og.value)


@given(st.data())
def test_reparametrization_keeps_ratio(data):
    I = data.draw(ideals(n=2))
    f = data.draw(polys(2))
    k = data.draw(st.integers(2, 3))
    h = certificate_arc(f, I)
    hk = h.reparametrize(k)
    assert compose_order(f, hk).value == k * compose_order(f, h).value
    assert arc_ratio(f, I, hk) == arc_ratio(f, I, h)


@given(st.data())
def test_truncation_safety(data):
    f = data.draw(polys(2))
    w = data.draw(st.tuples(st.integers(1, 4), st.integers(1, 4)))
    low = monomial_arc(w, (1, -1), 40)
    high = monomial_arc(w, (1, -1), 120)
    a, b = compose_order(f, low), compose_order(f, high)
    if a.exact:
        assert b == a
    else:
        assert b.value >= a.value


def test_facet_arcs_realize_valuations():
    I = MonomialIdeal.of((4, 0), (1, 2), (0, 5))
    f = P(2, ((1, 1), 1), ((0, 3), 2))
    for w, h in facet_arcs(f, I):
        assert compose_order(f, h).value == min(w[0] * a + w[1] * b for a, b in f.support)
    assert min(arc_ratio(f, I, h) for _, h in facet_arcs(f, I)) == nubar(f, I).value
