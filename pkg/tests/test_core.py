from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nubar.core import (
    INF,
    MonomialIdeal,
    Polynomial,
    format_rational,
    ideal_sum,
    monomial_in_power,
    monomial_order,
    normalize,
    nu_order,
    oracle_sequence,
    parse_rational,
    power,
    product,
    radical,
)
from nubar.errors import (
    DimensionMismatch,
    EmptyGeneratorSet,
    ParseError,
    UnitIdeal,
    ZeroDenominator,
)

import oracles
from strategies import exponents, ideals, polys

X2Y3 = MonomialIdeal.of((2, 0), (0, 3))
X2Y2 = MonomialIdeal.of((2, 0), (0, 2))


def mono(*a):
    return Polynomial.monomial(a)


# --- scalars


def test_inf_is_absorbing_top():
    assert INF + 3 == INF and 3 + INF == INF
    assert INF > Fraction(10**9) and not INF < 5
    assert min(INF, Fraction(1, 2)) == Fraction(1, 2)
    assert format_rational(INF) == "inf"


@pytest.mark.parametrize("text,value", [("3", 3), ("-1/2", Fraction(-1, 2)), ("−1/2", Fraction(-1, 2)), (" 4/6 ", Fraction(2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


def test_parse_rational_errors():
    with pytest.raises(ZeroDenominator):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("1.5")
    with pytest.raises(ParseError):
        parse_rational(True)


@given(st.fractions())
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


# --- polynomials


def test_polynomial_arithmetic():
    x, y = mono(1, 0), mono(0, 1)
    f = x + y
    assert (f * f).terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (f - f).is_zero()
    assert (f**0) == Polynomial.constant(2)
    assert Polynomial.from_terms(2, [((1, 0), 1), ((1, 0), -1)]).is_zero()


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        mono(1, 0) + mono(1, 0, 0)
    with pytest.raises(DimensionMismatch):
        nu_order(mono(1, 0, 0), X2Y3)


# --- ideals


def test_normalize_examples():
    assert normalize([(2, 0), (0, 3), (2, 1)]).generators == ((0, 3), (2, 0))
    assert set(normalize([(1, 0), (0, 1)]).generators) == {(1, 0), (0, 1)}
    assert len(normalize([(2, 0), (1, 1), (0, 2)]).generators) == 3


def test_ideal_errors():
    with pytest.raises(UnitIdeal):
        MonomialIdeal.of((0, 0))
    with pytest.raises(EmptyGeneratorSet):
        normalize([])


def test_ideal_ops_examples():
    assert radical(X2Y3) == MonomialIdeal.of((1, 0), (0, 1))
    assert product(MonomialIdeal.of((1, 0)), MonomialIdeal.of((0, 1))) == MonomialIdeal.of((1, 1))
    assert power(MonomialIdeal.of((1, 0), (0, 1)), 2) == MonomialIdeal.of((2, 0), (1, 1), (0, 2))
    assert ideal_sum(MonomialIdeal.of((1, 0)), MonomialIdeal.of((0, 1))) == MonomialIdeal.of((1, 0), (0, 1))


@given(ideals(), st.data())
def test_normalize_idempotent_and_membership(I, data):
    J = normalize(I.generators + I.generators[:1])
    assert J == I and normalize(J.generators) == J
    for a in data.draw(st.lists(exponents(I.n, 6), max_size=20)):
        naive = any(oracles.leq(g, a) for g in I.generators)
        assert I.contains_monomial(a) == naive


def test_monomial_in_power_examples():
    assert not monomial_in_power((1, 1), X2Y2, 1)
    assert monomial_in_power((2, 2), X2Y2, 2)
    # (2,0) + (0,3) = (2,3) <= (3,3), so the multiset {x^2, y^3} works
    assert monomial_in_power((3, 3), X2Y3, 2)
    assert not monomial_in_power((3, 2), X2Y3, 2)


@given(ideals(max_entry=3), st.data())
def test_order_matches_enumeration(I, data):
    a = data.draw(exponents(I.n, 12 // I.n))
    assert monomial_order(a, I) == oracles.brute_order(a, I.generators)


def test_nu_order_examples():
    assert nu_order(Polynomial.constant(2), X2Y3) == 0
    assert nu_order(Polynomial.zero(2), X2Y3) is INF
    assert nu_order(mono(1, 1), X2Y2) == 0
    assert nu_order(mono(2, 2), X2Y2) == 2


@given(st.data())
def test_order_function_axioms(data):
    n = data.draw(st.integers(2, 3))
    I = data.draw(ideals(n=n, max_entry=3))
    f = data.draw(polys(n, max_entry=3))
    g = data.draw(polys(n, max_entry=3))
    nf, ng = nu_order(f, I), nu_order(g, I)
    assert nu_order(f + g, I) >= min(nf, ng)
    assert nu_order(f * g, I) >= nf + ng
    assert nu_order(f, I) == oracles.brute_nu(f.support, I.generators)


def test_oracle_sequence_examples():
    u = oracle_sequence(mono(0, 1), X2Y3, 6)
    assert u == [0, 0, Fraction(1, 3), Fraction(1, 4), Fraction(1, 5), Fraction(1, 3)]
    assert oracle_sequence(mono(1), MonomialIdeal.of((1,)), 5) == [1] * 5
    assert oracle_sequence(mono(1, 1), X2Y2, 2) == [0, 1]


@given(st.data())
def test_oracle_subsequence_monotone(data):
    I = data.draw(ideals(n=2, max_entry=3))
    f = data.draw(polys(2, max_terms=2, max_entry=3))
    i = data.draw(st.integers(2, 3))
    u = oracle_sequence(f, I, i**2)
    assert u[i - 1] <= u[i * i - 1]
