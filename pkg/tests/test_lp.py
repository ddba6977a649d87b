from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from nubar import lp

import oracles


def test_small_program():
    # max x + y, x + 2y <= 4, 3x + y <= 6
    res = lp.maximize([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert res.status == lp.OPTIMAL
    assert res.value == Fraction(14, 5)
    assert res.x == (Fraction(8, 5), Fraction(6, 5))


def test_unbounded_and_infeasible():
    assert lp.maximize([1, 0], [[0, 1]], [1]).status == lp.UNBOUNDED
    assert lp.maximize([1], [[1], [-1]], [1, -2]).status == lp.INFEASIBLE


def test_negative_rhs_feasible():
    # x >= 1 written as -x <= -1, x <= 3
    res = lp.maximize([-1], [[-1], [1]], [-1, 3])
    assert res.status == lp.OPTIMAL and res.value == -1


def test_degenerate_problem_terminates():
    # many constraints tight at the origin
    A = [[1, -1, 0], [0, 1, -1], [-1, 0, 1], [1, 1, 1]]
    res = lp.maximize([1, 1, 1], A, [0, 0, 0, 3])
    assert res.status == lp.OPTIMAL and res.value == 3


gens = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)).filter(any), min_size=1, max_size=4)


@given(gens, st.tuples(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8)))
def test_matches_vertex_enumeration(g, a):
    A = [[h[i] for h in g] for i in range(3)]
    res = lp.maximize([1] * len(g), A, list(a))
    assert res.status == lp.OPTIMAL
    assert res.value == oracles.lp_value(a, g)
    # primal feasibility and weak duality certificate
    assert all(x >= 0 for x in res.x)
    assert all(sum(A[i][j] * res.x[j] for j in range(len(g))) <= a[i] for i in range(3))
    assert all(y >= 0 for y in res.dual)
    assert sum(y * b for y, b in zip(res.dual, a)) == res.value
