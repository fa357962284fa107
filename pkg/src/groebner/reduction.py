"""Polynomial reduction modulo a list and total reduction to normal form."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .monomials import PowerProduct, Term, dvd_term, pp_mul
from .orders import TermOrder
from .polynomials import Combination, Poly, coeff, lc, lt, monom_mult, poly_sub


class IterationCapExceeded(RuntimeError):
    """A loop that must terminate for admissible orders ran past its cap."""


@dataclass(frozen=True)
class ReductionStep:
    reducer_index: int
    multiplier_pp: PowerProduct
    target_term: Term


def red_single(p: Poly, f: Poly, t: PowerProduct, order: TermOrder) -> Poly:
    """One reduction step ``p ->_{f,t} q``."""
    if not f:
        raise ValueError("cannot reduce modulo the zero polynomial")
    s, j = lt(f)
    v = (pp_mul(t, s), j)
    c = coeff(p, v)
    if not c:
        raise ValueError(f"term {v!r} does not occur in p")
    return poly_sub(p, monom_mult(c / lc(f), t, f), order)


def find_reducer(p: Poly, v: Term, fs: Sequence[Poly]) -> Optional[ReductionStep]:
    """First element of ``fs`` (list order) whose leading term divides ``v``."""
    if not coeff(p, v):
        raise ValueError(f"term {v!r} does not occur in p")
    for i, f in enumerate(fs):
        if not f:
            continue
        q = dvd_term(lt(f), v)
        if q is not None:
            return ReductionStep(i, q, v)
    return None


def is_red(fs: Sequence[Poly], p: Poly) -> bool:
    leads = [lt(f) for f in fs if f]
    for v, _ in p.items:
        for u in leads:
            if dvd_term(u, v) is not None:
                return True
    return False


def _first_divisor(leads, pp: PowerProduct, comp: int):
    n = len(pp)
    for idx, (s, k) in leads:
        if k != comp or len(s) > n:
            continue
        for a, b in zip(s, pp):
            if a > b:
                break
        else:
            return idx, s
    return None


def trd(
    fs: Sequence[Poly],
    p: Poly,
    order: TermOrder,
    track: bool = False,
    iteration_cap: int = 10_000_000,
):
    """Totally reduce ``p`` modulo ``fs``.

    Terms are visited from the greatest down; each is reduced by the first
    element of ``fs`` whose leading term divides it. Reduction only creates
    strictly smaller terms, so a term once passed is never revisited. Zero
    entries of ``fs`` are ignored.

    With ``track=True`` returns ``(normal_form, combination)`` where
    ``p - normal_form == combination.evaluate(fs)``.
    """
    leads = [(i, lt(f)) for i, f in enumerate(fs) if f]
    comb = Combination() if track else None
    if not leads or not p:
        return (p, comb) if track else p
    tails = {i: (fs[i].items[1:], lc(fs[i])) for i, _ in leads}
    key = order.desc_key
    rem = dict(p.items)
    heap = [(key(t), t) for t, _ in p.items]
    heapq.heapify(heap)
    out: List[Tuple[Term, Fraction]] = []
    steps = 0
    while heap:
        _, v = heapq.heappop(heap)
        c = rem.pop(v)
        if not c:
            continue
        hit = _first_divisor(leads, v[0], v[1])
        if hit is None:
            out.append((v, c))
            continue
        steps += 1
        if steps > iteration_cap:
            raise IterationCapExceeded("trd exceeded its iteration cap")
        i, s = hit
        ftail, flc = tails[i]
        q = tuple([b - a for a, b in zip(s, v[0])]) + v[0][len(s):]
        while q and q[-1] == 0:
            q = q[:-1]
        m = c / flc
        if track:
            comb.add_monomial(i, m, q, order)
        for (u, k), d in ftail:
            w = (pp_mul(q, u), k)
            if w in rem:
                rem[w] -= m * d
            else:
                rem[w] = -m * d
                heapq.heappush(heap, (key(w), w))
    nf = Poly(out)
    return (nf, comb) if track else nf


def normal_form(fs: Sequence[Poly], p: Poly, order: TermOrder) -> Poly:
    return trd(fs, p, order)
