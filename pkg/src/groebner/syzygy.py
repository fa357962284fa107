"""Gröbner bases of syzygy modules by component augmentation.

For generators ``b_0 .. b_{m-1}`` each ``b_i`` is moved up by ``m`` components
and prefixed with the unit vector ``e_i``. A Gröbner basis of these vectors
under a POT order has, in its elements living entirely in components ``< m``,
a Gröbner basis of the syzygy module; every element carries in its first ``m``
components the cofactors of its remaining part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .buchberger import GbConfig, gb
from .orders import Extension, MonomialOrder, TermOrder
from .polynomials import (
    ZERO_POLY,
    Poly,
    constant,
    from_dict,
    poly_add,
    poly_mul,
    poly_sub,
    proj_component,
    shift_components,
)
from .reduced_gb import comp_red_monic_basis


class SyzygyError(ArithmeticError):
    pass


@dataclass
class SyzygyProblem:
    generators: List[Poly]
    base_order: MonomialOrder = MonomialOrder.DEGREVLEX

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("syzygy generators must be pairwise distinct")

    @property
    def term_order(self) -> TermOrder:
        return TermOrder(self.base_order, Extension.POT)


def init_syzygy_list(bs: Sequence[Poly], order: TermOrder) -> List[Poly]:
    if len(set(bs)) != len(bs):
        raise ValueError("syzygy generators must be pairwise distinct")
    m = len(bs)
    return [poly_add(shift_components(b, m), constant(1, i), order) for i, b in enumerate(bs)]


def filter_syzygy_basis(m: int, gs: Sequence[Poly]) -> List[Poly]:
    return [g for g in gs if g and all(k < m for (_, k), _ in g.items)]


def split(m: int, g: Poly, order: TermOrder):
    """``(cofactors, value)``: components below ``m`` and the rest shifted back down."""
    cof = [proj_component(g, i) for i in range(m)]
    value = from_dict({(t, k - m): c for (t, k), c in g.items if k >= m}, order)
    return cof, value


def combine(cofactors: Sequence[Poly], bs: Sequence[Poly], order: TermOrder) -> Poly:
    acc = ZERO_POLY
    for s, b in zip(cofactors, bs):
        if s:
            acc = poly_add(acc, poly_mul(s, b, order), order)
    return acc


def cofactor_view(m: int, gs: Sequence[Poly], bs: Sequence[Poly], order: TermOrder):
    """Per element ``(cofactors, value)`` with ``value == sum(cofactors[i] * bs[i])`` checked."""
    out = []
    for g in gs:
        cof, value = split(m, g, order)
        if poly_sub(value, combine(cof, bs, order), order):
            raise SyzygyError("cofactor identity violated")
        out.append((cof, value))
    return out


def projection(m: int, gs: Sequence[Poly], order: TermOrder) -> List[Poly]:
    """Nonzero components-``>= m`` parts of ``gs``: a Gröbner basis of the generators."""
    vals = [split(m, g, order)[1] for g in gs]
    return [v for v in vals if v]


def syzygy_module_gb(problem: SyzygyProblem, cfg: Optional[GbConfig] = None) -> List[Poly]:
    """Full augmented Gröbner basis ``gs``; see :func:`syzygy_basis`."""
    cfg = cfg or GbConfig()
    tord = cfg.term_order
    if tord.extension is not Extension.POT:
        raise ValueError("syzygy computation requires a POT term order")
    if tord.base is not problem.base_order:
        tord = problem.term_order
    cfg = GbConfig(**{**cfg.__dict__, "term_order": tord})
    bs = [from_dict(dict(b.items), tord) for b in problem.generators]
    return gb(init_syzygy_list(bs, tord), cfg)


def syzygy_basis(problem: SyzygyProblem, cfg: Optional[GbConfig] = None, reduced: bool = False) -> List[Poly]:
    gs = syzygy_module_gb(problem, cfg)
    syz = filter_syzygy_basis(len(problem.generators), gs)
    if reduced:
        syz = comp_red_monic_basis(syz, problem.term_order)
    return syz
