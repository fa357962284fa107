import random

from hypothesis import given, strategies as st

from groebner.monomials import (
    UNIT,
    dvd_term,
    format_pp,
    make_pp,
    pp_degree,
    pp_divides,
    pp_gcd,
    pp_lcm,
    pp_mul,
    stimes,
)

pps = st.lists(st.integers(0, 6), max_size=5).map(make_pp)
terms = st.tuples(pps, st.integers(0, 3))


def test_mul():
    assert pp_mul(make_pp([1, 2]), make_pp([2])) == make_pp([3, 2])
    assert pp_mul(make_pp([0, 4]), UNIT) == make_pp([0, 4])


def test_divides():
    assert pp_divides(make_pp([1]), make_pp([1, 2])) == make_pp([0, 2])
    assert pp_divides(make_pp([2]), make_pp([1, 1])) is None
    # lcm(x0, x1) / x0 = x1, the multiplier in spoly(f1, f2)
    assert pp_divides(make_pp([1]), pp_lcm(make_pp([1]), make_pp([0, 1]))) == make_pp([0, 1])


def test_lcm_gcd():
    assert pp_lcm(make_pp([0, 2]), make_pp([1, 1])) == make_pp([1, 2])
    assert pp_lcm(make_pp([3]), UNIT) == make_pp([3])
    assert pp_gcd(make_pp([1, 1]), make_pp([0, 1, 1])) == make_pp([0, 1])
    assert pp_gcd(make_pp([1]), make_pp([0, 1])) == UNIT


def test_degree():
    assert pp_degree(make_pp([2, 1])) == 3
    assert pp_degree(UNIT) == 0


def test_canonical_trimming():
    assert make_pp([1, 0, 0]) == (1,)
    assert make_pp({3: 2}) == (0, 0, 0, 2)
    assert pp_gcd(make_pp([1, 2]), make_pp([0, 0, 3])) == UNIT


def test_stimes_and_dvd_term():
    assert stimes(make_pp([1]), (make_pp([0, 1]), 1)) == (make_pp([1, 1]), 1)
    assert stimes(UNIT, (make_pp([2]), 4)) == (make_pp([2]), 4)
    assert dvd_term((make_pp([1]), 1), (make_pp([1, 1]), 1)) == make_pp([0, 1])
    assert dvd_term((make_pp([1]), 0), (make_pp([1, 1]), 1)) is None
    # x0^5 ->_{f3, x0^2} 0 with f3 = x0^3
    assert dvd_term((make_pp([3]), 0), (make_pp([5]), 0)) == make_pp([2])


def test_format():
    assert format_pp(make_pp([1, 2])) == "x0*x1^2"
    assert format_pp(UNIT) == "1"


def _dense(t, n=6):
    return list(t) + [0] * (n - len(t))


@given(pps, pps)
def test_mul_pointwise_and_commutative(s, t):
    assert _dense(pp_mul(s, t)) == [a + b for a, b in zip(_dense(s), _dense(t))]
    assert pp_mul(s, t) == pp_mul(t, s)


@given(pps, pps, pps)
def test_monoid_laws(s, t, u):
    assert pp_mul(pp_mul(s, t), u) == pp_mul(s, pp_mul(t, u))
    assert pp_mul(s, UNIT) == s


@given(pps, pps)
def test_divides_iff_pointwise(s, t):
    ok = all(a <= b for a, b in zip(_dense(s), _dense(t)))
    q = pp_divides(s, t)
    assert (q is not None) == ok
    if ok:
        assert pp_mul(s, q) == t


@given(pps, pps)
def test_lcm_gcd_identities(s, t):
    l, g = pp_lcm(s, t), pp_gcd(s, t)
    assert _dense(l) == [max(a, b) for a, b in zip(_dense(s), _dense(t))]
    assert pp_divides(s, l) is not None and pp_divides(t, l) is not None
    assert pp_mul(g, l) == pp_mul(s, t)
    assert pp_degree(pp_mul(s, t)) == pp_degree(s) + pp_degree(t)


@given(pps, pps, terms)
def test_stimes_is_an_action(s, t, v):
    assert stimes(s, stimes(t, v)) == stimes(pp_mul(s, t), v)
    assert stimes(t, v)[1] == v[1]


def test_dickson_spot_check():
    rng = random.Random(7)
    seq = [make_pp([rng.randint(0, 10) for _ in range(5)]) for _ in range(10_000)]
    seen = []
    found = False
    for t in seq:
        if any(pp_divides(s, t) is not None for s in seen):
            found = True
            break
        seen.append(t)
    assert found
