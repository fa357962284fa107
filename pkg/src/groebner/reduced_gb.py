"""Auto-reduction and the unique reduced Gröbner basis."""

from __future__ import annotations

from typing import List, Optional, Sequence

from .buchberger import GbConfig, gb, is_groebner_basis
from .monomials import dvd_term
from .orders import TermOrder
from .polynomials import Poly, lc, lt, make_monic
from .reduction import is_red, trd


def comp_red_monic_basis(xs: Sequence[Poly], order: TermOrder) -> List[Poly]:
    """Minimise, auto-reduce and normalise a list of polynomials.

    1. drop zeros and every element whose leading term is divisible by the
       leading term of another survivor (earliest wins on equal leads);
    2. totally reduce each survivor modulo the others;
    3. make everything monic.

    The result is sorted by leading term, descending. Applied to a Gröbner
    basis it yields the reduced Gröbner basis of the same submodule.
    """
    xs = [x for x in xs if x]
    keep: List[Poly] = []
    for i, x in enumerate(xs):
        v = lt(x)
        dominated = False
        for j, y in enumerate(xs):
            if i == j:
                continue
            u = lt(y)
            if dvd_term(u, v) is None:
                continue
            if u != v or j < i:
                dominated = True
                break
        if not dominated:
            keep.append(x)
    # leads are pairwise non-dividing, so reducing in place never changes a lead
    reduced = list(keep)
    for i in range(len(reduced)):
        others = reduced[:i] + reduced[i + 1:]
        reduced[i] = trd(others, reduced[i], order)
    out = [make_monic(p) for p in reduced]
    key = order.desc_key
    return sorted(out, key=lambda p: key(lt(p)))


def is_reduced_gb(G: Sequence[Poly], order: TermOrder) -> bool:
    G = list(G)
    if any(not g or lc(g) != 1 for g in G):
        return False
    for i, g in enumerate(G):
        if is_red(G[:i] + G[i + 1:], g):
            return False
    return is_groebner_basis(G, order)


def reduced_gb(inputs: Sequence[Poly], cfg: Optional[GbConfig] = None, algorithm: str = "buchberger") -> List[Poly]:
    cfg = cfg or GbConfig()
    if algorithm == "buchberger":
        G = gb(inputs, cfg)
    elif algorithm == "f4":
        from .f4 import f4

        G = f4(inputs, cfg)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return comp_red_monic_basis(G, cfg.term_order)
