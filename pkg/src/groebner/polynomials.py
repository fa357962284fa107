"""Sparse vector-polynomials over Q.

A :class:`Poly` is an immutable sequence of ``(term, coeff)`` pairs with
nonzero coefficients and strictly descending terms under whatever
:class:`~groebner.orders.TermOrder` built it. The polynomial does not carry its
order; operations that have to compare terms take it explicitly. Re-sorting
under a different order is done with :func:`resort`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from .coefficients import format_rational
from .monomials import PowerProduct, Term, format_pp, pp_mul
from .orders import TermOrder


class Poly:
    __slots__ = ("items", "_dict")

    def __init__(self, items: Iterable[Tuple[Term, Fraction]] = ()):
        # trusted constructor: callers guarantee the representation invariant
        self.items = tuple(items)
        self._dict = None

    @property
    def as_dict(self) -> Dict[Term, Fraction]:
        if self._dict is None:
            self._dict = dict(self.items)
        return self._dict

    def __bool__(self) -> bool:
        return bool(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        if self.items == other.items:
            return True
        return len(self.items) == len(other.items) and self.as_dict == other.as_dict

    def __hash__(self) -> int:
        return hash(frozenset(self.items))

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def terms(self):
        return [t for t, _ in self.items]


ZERO_POLY = Poly()


def poly(pairs: Iterable[Tuple[Term, object]], order: TermOrder) -> Poly:
    """Build a polynomial from arbitrary ``(term, coeff)`` pairs, summing duplicates."""
    acc: Dict[Term, Fraction] = {}
    for t, c in pairs:
        acc[t] = acc.get(t, 0) + Fraction(c)
    return from_dict(acc, order)


def from_dict(d: Dict[Term, Fraction], order: TermOrder) -> Poly:
    key = order.desc_key
    return Poly(sorted(((t, c) for t, c in d.items() if c), key=lambda tc: key(tc[0])))


def monomial(c, v: Term) -> Poly:
    c = Fraction(c)
    return Poly([(v, c)]) if c else ZERO_POLY


def constant(c, component: int = 0) -> Poly:
    return monomial(c, ((), component))


def resort(p: Poly, order: TermOrder) -> Poly:
    return from_dict(dict(p.items), order)


def _merge(p: Poly, q: Poly, order: TermOrder, sign: int) -> Poly:
    a, b = p.items, q.items
    if not b:
        return p
    if not a:
        return q if sign > 0 else poly_neg(q)
    key = order.desc_key
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    ka = key(a[0][0])
    kb = key(b[0][0])
    while True:
        if ka < kb:
            out.append(a[i])
            i += 1
            if i == na:
                break
            ka = key(a[i][0])
        elif kb < ka:
            t, c = b[j]
            out.append((t, c if sign > 0 else -c))
            j += 1
            if j == nb:
                break
            kb = key(b[j][0])
        else:
            c = a[i][1] + b[j][1] if sign > 0 else a[i][1] - b[j][1]
            if c:
                out.append((a[i][0], c))
            i += 1
            j += 1
            if i == na or j == nb:
                break
            ka = key(a[i][0])
            kb = key(b[j][0])
    if i < na:
        out.extend(a[i:])
    if j < nb:
        out.extend(b[j:] if sign > 0 else ((t, -c) for t, c in b[j:]))
    return Poly(out)


def poly_add(p: Poly, q: Poly, order: TermOrder) -> Poly:
    return _merge(p, q, order, 1)


def poly_sub(p: Poly, q: Poly, order: TermOrder) -> Poly:
    return _merge(p, q, order, -1)


def poly_neg(p: Poly) -> Poly:
    return Poly((t, -c) for t, c in p.items)


def poly_scale(c, p: Poly) -> Poly:
    c = Fraction(c)
    if not c:
        return ZERO_POLY
    if c == 1:
        return p
    return Poly((t, c * d) for t, d in p.items)


def monom_mult(c, t: PowerProduct, p: Poly) -> Poly:
    """``c * t * p``; admissibility keeps the monomials in order."""
    c = Fraction(c)
    if not c:
        return ZERO_POLY
    if not t:
        return poly_scale(c, p)
    if c == 1:
        return Poly(((pp_mul(t, s), k), d) for (s, k), d in p.items)
    return Poly(((pp_mul(t, s), k), c * d) for (s, k), d in p.items)


def poly_mul(s: Poly, p: Poly, order: TermOrder) -> Poly:
    """Product of a scalar polynomial ``s`` with a vector-polynomial ``p``."""
    if any(k != 0 for (_, k), _ in s.items):
        raise ValueError("left factor must be a scalar polynomial")
    acc: Dict[Term, Fraction] = {}
    for (t, _), c in s.items:
        for (u, k), d in p.items:
            v = (pp_mul(t, u), k)
            acc[v] = acc.get(v, 0) + c * d
    return from_dict(acc, order)


def coeff(p: Poly, v: Term) -> Fraction:
    return p.as_dict.get(v, Fraction(0))


def lt(p: Poly) -> Term:
    if not p.items:
        raise ValueError("leading term of the zero polynomial")
    return p.items[0][0]


def lp(p: Poly) -> PowerProduct:
    return lt(p)[0]


def lc(p: Poly) -> Fraction:
    if not p.items:
        raise ValueError("leading coefficient of the zero polynomial")
    return p.items[0][1]


def leading(p: Poly) -> Tuple[Term, PowerProduct, Fraction]:
    v = lt(p)
    return v, v[0], p.items[0][1]


def tail(p: Poly) -> Poly:
    if not p.items:
        raise ValueError("tail of the zero polynomial")
    return Poly(p.items[1:])


def make_monic(p: Poly) -> Poly:
    c = lc(p)
    if c == 1:
        return p
    inv = 1 / c
    return Poly((t, d * inv) for t, d in p.items)


def components(p: Poly) -> set:
    return {k for (_, k), _ in p.items}


def is_scalar(p: Poly) -> bool:
    return all(k == 0 for (_, k), _ in p.items)


def vec_inject(i: int, p: Poly) -> Poly:
    if not is_scalar(p):
        raise ValueError("vec_inject expects a scalar polynomial")
    if i == 0:
        return p
    return Poly(((t, i), c) for (t, _), c in p.items)


def proj_component(p: Poly, i: int) -> Poly:
    return Poly(((t, 0), c) for (t, k), c in p.items if k == i)


def shift_components(p: Poly, m: int) -> Poly:
    """Add ``m`` to every component index; order is preserved under POT and TOP."""
    return Poly(((t, k + m), c) for (t, k), c in p.items)


def compare_poly_strict(p: Poly, q: Poly, order: TermOrder) -> bool:
    """``p < q`` in the polynomial order induced by the term order."""
    key = order.desc_key
    a, b = p.items, q.items
    for i in range(min(len(a), len(b))):
        (ta, ca), (tb, cb) = a[i], b[i]
        if ta == tb:
            if ca != cb:
                return False  # both have a nonzero coefficient at the first difference
            continue
        # the larger of the two terms is absent from the other polynomial
        return key(tb) < key(ta)
    return len(a) < len(b)


def validate(p: Poly, order: TermOrder) -> None:
    """Raise AssertionError if ``p`` breaks the representation invariant."""
    key = order.desc_key
    prev = None
    for t, c in p.items:
        assert isinstance(c, Fraction) and c != 0, f"bad coefficient {c!r}"
        assert isinstance(t, tuple) and len(t) == 2 and t[1] >= 0, f"bad term {t!r}"
        assert not t[0] or t[0][-1] != 0, f"untrimmed power-product {t[0]!r}"
        k = key(t)
        assert prev is None or prev < k, "terms not strictly descending"
        prev = k


def format_poly(p: Poly, names=None, scalar: Optional[bool] = None) -> str:
    """Canonical text form, monomials in stored order.

    The ``*e<j>`` component suffix is omitted for scalar polynomials unless
    ``scalar=False`` is passed.
    """
    if not p.items:
        return "0"
    if scalar is None:
        scalar = is_scalar(p)
    out = []
    for idx, ((t, k), c) in enumerate(p.items):
        neg = c < 0
        a = -c if neg else c
        factors = []
        if t:
            factors.append(format_pp(t, names))
        if not scalar:
            factors.append(f"e{k}")
        if a != 1 or not factors:
            factors.insert(0, format_rational(a))
        body = "*".join(factors)
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


@dataclass
class Combination:
    """``sum(multiplier * generators[index])`` as an explicit witness."""

    entries: Dict[int, Poly] = field(default_factory=dict)

    def add(self, index: int, mult: Poly, order: TermOrder) -> None:
        cur = self.entries.get(index, ZERO_POLY)
        new = poly_add(cur, mult, order)
        if new:
            self.entries[index] = new
        else:
            self.entries.pop(index, None)

    def add_monomial(self, index: int, c, t: PowerProduct, order: TermOrder) -> None:
        self.add(index, monomial(c, (t, 0)), order)

    def evaluate(self, generators, order: TermOrder) -> Poly:
        acc = ZERO_POLY
        for i, mult in self.entries.items():
            acc = poly_add(acc, poly_mul(mult, generators[i], order), order)
        return acc

    def compose(self, inner, order: TermOrder) -> "Combination":
        """Rewrite over an earlier generator list: ``generators[i] = inner[i].evaluate(...)``."""
        out = Combination()
        for i, mult in self.entries.items():
            for j, m2 in inner[i].entries.items():
                out.add(j, poly_mul(mult, m2, order), order)
        return out
