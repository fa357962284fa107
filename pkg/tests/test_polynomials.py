import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from groebner.monomials import make_pp, stimes
from groebner.orders import TermOrder
from groebner.polynomials import (
    ZERO_POLY,
    Combination,
    coeff,
    compare_poly_strict,
    from_dict,
    leading,
    make_monic,
    monom_mult,
    monomial,
    poly_add,
    poly_mul,
    poly_neg,
    poly_sub,
    proj_component,
    resort,
    tail,
    validate,
    vec_inject,
)

from _util import LEX, ORDERS, P, random_poly

seeds = st.integers(0, 2**32 - 1)
orders = st.sampled_from(ORDERS)


def rp(seed, order, ncomps=2):
    return random_poly(random.Random(seed), order, nvars=3, maxdeg=3, nterms=6, ncomps=ncomps, rational=True)


def test_add_cancellation():
    assert poly_add(P("x1^2 - x0*x1"), P("x0*x1"), LEX) == P("x1^2")
    p = P("x1^2 - x0*x1")
    assert poly_add(p, ZERO_POLY, LEX) == p


def test_spoly_arithmetic():
    f1, f2 = P("x1^2"), P("x0*x1 + x0^2")
    s = poly_sub(monom_mult(1, make_pp([1]), f1), monom_mult(1, make_pp([0, 1]), f2), LEX)
    assert s == P("-x0^2*x1")


def test_monom_mult():
    assert monom_mult(1, make_pp([1]), P("x1^2")) == P("x0*x1^2")
    assert monom_mult(0, make_pp([1]), P("x1^2")) == ZERO_POLY


def test_coeff_lookup():
    p = P("x1^2*e0 - x0*x1*e0 + 2*x0*e1 + 3*e1")
    assert coeff(p, (make_pp([1]), 1)) == 2
    assert coeff(ZERO_POLY, (make_pp([1]), 1)) == 0


def test_leading_pot_top():
    src = "x1^2*e0 - x0*x1*e0 + 2*x0*e1 + 3*e1"
    assert leading(P(src, TermOrder.from_names("lex", "pot"))) == ((make_pp([1]), 1), make_pp([1]), 2)
    assert leading(P(src, TermOrder.from_names("lex", "top"))) == ((make_pp([0, 2]), 0), make_pp([0, 2]), 1)
    assert leading(monomial(Fraction(3, 4), (make_pp([2]), 1))) == ((make_pp([2]), 1), make_pp([2]), Fraction(3, 4))


def test_leading_of_zero_raises():
    for fn in (leading, tail, make_monic):
        with pytest.raises(ValueError):
            fn(ZERO_POLY)


def test_tail_and_monic():
    assert tail(P("x1^2 - x0*x1")) == P("-x0*x1")
    assert tail(P("3*x0")) == ZERO_POLY
    assert make_monic(P("2*x0 + 4")) == P("x0 + 2")
    assert make_monic(P("x0 + 2")) == P("x0 + 2")


def test_vec_inject_and_projection():
    assert vec_inject(1, P("x0*x1 - x2")) == P("x0*x1*e1 - x2*e1")
    assert vec_inject(0, P("x0")) == P("x0")
    with pytest.raises(ValueError):
        vec_inject(1, P("x0*e1"))
    v = P("x1^2*e0 + 2*x0*e1")
    assert proj_component(v, 1) == P("2*x0")
    assert proj_component(v, 5) == ZERO_POLY


def test_strict_order_examples():
    p = P("x0^2 + x1")
    assert compare_poly_strict(ZERO_POLY, p, LEX)
    assert not compare_poly_strict(p, p, LEX)


def _strict_oracle(p, q, order):
    """Unfold the definition over every term that occurs in either polynomial."""
    allterms = order.sort_desc(set(p.as_dict) | set(q.as_dict))
    for v in allterms:
        a, b = coeff(p, v), coeff(q, v)
        if a != b:
            return a == 0 and b != 0
    return False


@given(seeds, seeds, orders)
def test_strict_order_matches_definition(s1, s2, order):
    p, q = rp(s1, order), rp(s2, order)
    # share a prefix sometimes so the interesting branches get exercised
    q2 = poly_add(p, monomial(1, ((), 0)), order)
    for a, b in ((p, q), (q, p), (p, q2), (q2, p)):
        assert compare_poly_strict(a, b, order) == _strict_oracle(a, b, order)


@given(seeds, seeds, seeds, orders)
def test_ring_axioms_and_invariant(s1, s2, s3, order):
    p, q, r = rp(s1, order), rp(s2, order), rp(s3, order)
    add = lambda a, b: poly_add(a, b, order)
    assert add(add(p, q), r) == add(p, add(q, r))
    assert add(p, q) == add(q, p)
    assert poly_sub(p, p, order) == ZERO_POLY
    assert add(p, poly_neg(p)) == ZERO_POLY
    for x in (add(p, q), poly_sub(p, q, order)):
        validate(x, order)
    for v in set(p.as_dict) | set(q.as_dict):
        assert coeff(add(p, q), v) == coeff(p, v) + coeff(q, v)


@given(seeds, seeds, orders, st.integers(-3, 3))
def test_monom_mult_properties(s1, s2, order, c):
    rng = random.Random(s1)
    p, q = rp(s1, order), rp(s2, order)
    t = make_pp([rng.randint(0, 2) for _ in range(3)])
    m = monom_mult(c, t, p)
    validate(m, order)
    naive = from_dict({stimes(t, v): c * d for v, d in p.items if c * d}, order)
    assert m == naive
    assert monom_mult(c, t, poly_add(p, q, order)) == poly_add(m, monom_mult(c, t, q), order)
    if c and p:
        assert leading(m)[0] == stimes(t, leading(p)[0])
        assert leading(m)[2] == c * leading(p)[2]


@given(seeds, orders)
def test_head_tail_monic(seed, order):
    p = rp(seed, order)
    if not p:
        return
    v, _, c = leading(p)
    assert poly_add(monomial(c, v), tail(p), order) == p
    assert leading(make_monic(p))[0] == v and leading(make_monic(p))[2] == 1


@given(seeds, orders)
def test_inject_project_round_trip(seed, order):
    p = rp(seed, order)
    s = rp(seed + 1, order, ncomps=1)
    assert proj_component(vec_inject(3, s), 3) == s
    comps = {k for (_, k), _ in p.items}
    acc = ZERO_POLY
    for i in comps:
        acc = poly_add(acc, vec_inject(i, proj_component(p, i)), order)
    assert acc == p


@given(seeds, orders)
def test_resort_between_orders(seed, order):
    p = rp(seed, LEX)
    q = resort(p, order)
    validate(q, order)
    assert q.as_dict == p.as_dict


def test_poly_mul_and_combination():
    o = LEX
    gens = [P("x0*x1 - x2"), P("x0 - 1")]
    c = Combination()
    c.add(0, P("x1"), o)
    c.add(1, P("x2 + 1"), o)
    expected = poly_add(poly_mul(P("x1"), gens[0], o), poly_mul(P("x2 + 1"), gens[1], o), o)
    assert c.evaluate(gens, o) == expected
    with pytest.raises(ValueError):
        poly_mul(P("x0*e1"), gens[0], o)
