"""Hypothesis strategies for small exponent data."""

from hypothesis import strategies as st

from nubar.core import MonomialIdeal, Polynomial


def exponents(n, max_entry=4):
    return st.tuples(*[st.integers(0, max_entry)] * n)


def nonzero_exponents(n, max_entry=4):
    return exponents(n, max_entry).filter(any)


@st.composite
def ideals(draw, n=None, max_gens=4, max_entry=4, primary=False):
    if n is None:
        n = draw(st.integers(2, 3))
    gens = draw(st.lists(nonzero_exponents(n, max_entry), min_size=1, max_size=max_gens))
    if primary:
        for i in range(n):
            d = draw(st.integers(1, max_entry))
            gens.append(tuple(d if j == i else 0 for j in range(n)))
    return MonomialIdeal.of(*gens)


coeffs = st.sampled_from(["1", "-1", "2", "1/2", "-3/2"])


@st.composite
def polys(draw, n, max_terms=3, max_entry=4, nonzero=True):
    terms = draw(st.lists(st.tuples(exponents(n, max_entry), coeffs), min_size=1, max_size=max_terms))
    f = Polynomial.from_terms(n, terms)
    if nonzero:
        from hypothesis import assume

        assume(not f.is_zero())
    return f
