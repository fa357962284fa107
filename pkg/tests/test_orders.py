import itertools

import pytest
from hypothesis import given, strategies as st

from groebner.monomials import UNIT, make_pp, pp_mul, stimes
from groebner.orders import EQ, GT, LT, Extension, MonomialOrder, TermOrder, compare_pp, compare_term

from _util import P

pps = st.lists(st.integers(0, 4), max_size=4).map(make_pp)
terms = st.tuples(pps, st.integers(0, 2))
ALL = list(MonomialOrder)
TORDS = [TermOrder(b, e) for b in MonomialOrder for e in Extension]


def reference_cmp(kind, s, t, n=6):
    """Textbook comparators on dense vectors, x_{n-1} most significant."""
    a = list(s) + [0] * (n - len(s))
    b = list(t) + [0] * (n - len(t))
    if kind is not MonomialOrder.LEX and sum(a) != sum(b):
        return GT if sum(a) > sum(b) else LT
    if kind is MonomialOrder.DEGREVLEX:
        for i in range(n):  # least significant variable first; smaller exponent wins
            if a[i] != b[i]:
                return GT if a[i] < b[i] else LT
        return EQ
    for i in reversed(range(n)):
        if a[i] != b[i]:
            return GT if a[i] > b[i] else LT
    return EQ


def test_lex_golden():
    assert compare_pp(MonomialOrder.LEX, make_pp([1, 2]), make_pp([2, 1])) == GT
    assert compare_pp(MonomialOrder.LEX, make_pp([1, 1]), make_pp([2])) == GT


@pytest.mark.parametrize("kind", ALL)
def test_unit_is_minimal(kind):
    for t in [make_pp([1]), make_pp([0, 0, 3]), make_pp([2, 1])]:
        assert compare_pp(kind, UNIT, t) == LT


def test_degrevlex_exhaustive_two_variables():
    mons = [make_pp([a, d - a]) for d in range(6) for a in range(d + 1)]
    assert len(mons) == 21
    for s, t in itertools.product(mons, repeat=2):
        assert compare_pp(MonomialOrder.DEGREVLEX, s, t) == reference_cmp(MonomialOrder.DEGREVLEX, s, t)


@pytest.mark.parametrize("kind", ALL)
def test_against_reference_three_variables(kind):
    mons = [make_pp([a, b, c]) for a in range(4) for b in range(4) for c in range(4)]
    for s, t in itertools.product(mons, repeat=2):
        assert compare_pp(kind, s, t) == reference_cmp(kind, s, t)


def test_pot_top_leading_terms():
    # p = (x1^2 - x0*x1, 2*x0 + 3)
    src = "x1^2*e0 - x0*x1*e0 + 2*x0*e1 + 3*e1"
    pot = P(src, TermOrder(MonomialOrder.LEX, Extension.POT))
    top = P(src, TermOrder(MonomialOrder.LEX, Extension.TOP))
    assert pot.items[0] == ((make_pp([1]), 1), 2)
    assert top.items[0] == ((make_pp([0, 2]), 0), 1)


@given(st.sampled_from(TORDS), terms)
def test_reflexive(tord, u):
    assert compare_term(tord, u, u) == EQ


@given(st.sampled_from(ALL), pps, pps, pps)
def test_linear_order_and_admissible(kind, s, t, u):
    c = compare_pp(kind, s, t)
    assert compare_pp(kind, t, s) == -c
    assert (c == EQ) == (s == t)
    if c != GT:
        assert compare_pp(kind, pp_mul(s, u), pp_mul(t, u)) != GT
    if compare_pp(kind, s, t) != GT and compare_pp(kind, t, u) != GT:
        assert compare_pp(kind, s, u) != GT


@given(st.sampled_from(TORDS), terms, terms, terms, pps)
def test_term_order_axioms(tord, u, v, w, t):
    c = tord.compare(u, v)
    assert tord.compare(v, u) == -c
    if c != GT:
        assert tord.compare(stimes(t, u), stimes(t, v)) != GT
    if tord.compare(u, v) != GT and tord.compare(v, w) != GT:
        assert tord.compare(u, w) != GT
    s, i = u
    r, j = v
    if compare_pp(tord.base, s, r) != GT and i <= j:
        assert tord.compare(u, v) != GT


def test_names():
    assert TermOrder.from_names("drlex", "top") == TermOrder(MonomialOrder.DEGREVLEX, Extension.TOP)
    with pytest.raises(ValueError):
        MonomialOrder.parse("weird")
