"""Completion schema, Buchberger's algorithm, criteria and membership.

:func:`gb_schema` is the generic critical-pair completion loop, parametrised
by a pair selector and a completer. :func:`gb` plugs in single-pair selection
and reduction of the S-polynomial with :func:`~groebner.reduction.trd`;
:mod:`groebner.f4` plugs in batch selection and Macaulay-matrix reduction.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .monomials import pp_degree, pp_divides, pp_gcd, pp_is_divisor, pp_lcm
from .orders import TermOrder
from .polynomials import (
    Combination,
    Poly,
    components,
    is_scalar,
    lc,
    lp,
    lt,
    make_monic,
    monom_mult,
    monomial,
    poly_mul,
    poly_neg,
    poly_sub,
)
from .reduction import IterationCapExceeded, trd


@dataclass
class GbConfig:
    term_order: TermOrder = field(default_factory=TermOrder)
    use_product_criterion: bool = True
    use_chain_criterion: bool = True
    selection: str = "single"  # "single" or "degree_batch"
    iteration_cap: int = 100_000
    track_cofactors: bool = False
    batch_size_cap: Optional[int] = None
    monic: bool = True

    def __post_init__(self):
        if self.iteration_cap <= 0:
            raise ValueError("iteration_cap must be positive")
        if self.selection not in ("single", "degree_batch"):
            raise ValueError(f"unknown selection strategy {self.selection!r}")


@dataclass
class GbStats:
    iterations: int = 0
    pairs_generated: int = 0
    pairs_selected: int = 0
    pairs_reduced: int = 0
    component_mismatch: int = 0
    product_criterion: int = 0
    chain_criterion: int = 0
    zero_reductions: int = 0
    new_polys: int = 0
    matrices: List[Tuple[int, int, int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["matrices"] = [
            {"rows": r, "cols": c, "nnz": z, "density": (z / (r * c)) if r * c else 0.0}
            for r, c, z in self.matrices
        ]
        return d


@dataclass(frozen=True, eq=False)
class IdentifiedPoly:
    id: int
    poly: Poly

    def __post_init__(self):
        if not self.poly:
            raise ValueError("basis elements must be nonzero")


@dataclass(frozen=True)
class CriticalPair:
    a: IdentifiedPoly
    b: IdentifiedPoly

    def __post_init__(self):
        if self.a.id == self.b.id:
            raise ValueError("a critical pair needs two distinct elements")
        if self.a.id > self.b.id:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def ids(self) -> Tuple[int, int]:
        return (self.a.id, self.b.id)

    @property
    def lcm(self):
        return pp_lcm(lp(self.a.poly), lp(self.b.poly))

    def degree(self) -> int:
        return pp_degree(self.lcm)


@dataclass
class GbResult:
    basis: List[Poly]
    stats: GbStats
    cofactors: Optional[List[Combination]] = None


# --- S-polynomials and criteria ---------------------------------------------


def spoly_multipliers(p: Poly, q: Poly):
    """The two monomial multipliers ``(c_p, t_p), (c_q, t_q)`` of ``spoly(p, q)``."""
    l = pp_lcm(lp(p), lp(q))
    return (1 / lc(p), pp_divides(lp(p), l)), (1 / lc(q), pp_divides(lp(q), l))


def spoly(p: Poly, q: Poly, order: TermOrder) -> Poly:
    if not p or not q:
        raise ValueError("spoly of a zero polynomial")
    if lt(p)[1] != lt(q)[1]:
        return Poly()
    (cp, tp), (cq, tq) = spoly_multipliers(p, q)
    return poly_sub(monom_mult(cp, tp, p), monom_mult(cq, tq, q), order)


def product_criterion(p, q) -> bool:
    """True iff the leading power-products are coprime (scalar polynomials only)."""
    p = p.poly if isinstance(p, IdentifiedPoly) else p
    q = q.poly if isinstance(q, IdentifiedPoly) else q
    if not (is_scalar(p) and is_scalar(q)):
        raise ValueError("the product criterion only applies to scalar polynomials")
    return not pp_gcd(lp(p), lp(q))


def chain_criterion(pair: CriticalPair, bs: Sequence[IdentifiedPoly], pending) -> bool:
    """True iff some third basis element makes the pair useless.

    ``pending`` holds the id-pairs ``(i, j)``, ``i < j``, whose S-polynomials
    are not yet known to reduce to zero; the pair itself counts as pending.
    """
    ia, ib = pair.ids
    comp = lt(pair.a.poly)[1]
    l = pair.lcm
    for r in bs:
        ir = r.id
        if ir == ia or ir == ib:
            continue
        s, k = lt(r.poly)
        if k != comp or not pp_is_divisor(s, l):
            continue
        if (min(ia, ir), max(ia, ir)) in pending or (min(ib, ir), max(ib, ir)) in pending:
            continue
        return True
    return False


def gen_whole_module(bs: Sequence[Poly]) -> bool:
    polys = [b.poly if isinstance(b, IdentifiedPoly) else b for b in bs]
    polys = [b for b in polys if b]
    if not polys:
        return False
    comps = set()
    for b in polys:
        comps |= components(b)
    units = {lt(b)[1] for b in polys if not lp(b)}
    return comps <= units


def add_pairs(bs, ps0, hs) -> List[CriticalPair]:
    """``ps0`` extended by every ``(h, b)`` and one orientation of every ``(h1, h2)``."""
    out = list(ps0)
    for h in hs:
        for b in bs:
            out.append(CriticalPair(h, b))
    for h1, h2 in itertools.combinations(hs, 2):
        out.append(CriticalPair(h1, h2))
    return out


# --- selection and completion -----------------------------------------------


class PairQueue:
    """Pending critical pairs, popped by (lcm degree, id_a, id_b)."""

    def __init__(self):
        self._heap = []
        self.pending = set()

    def __len__(self) -> int:
        return len(self.pending)

    def push(self, pair: CriticalPair) -> None:
        heapq.heappush(self._heap, (pair.degree(), pair.ids, pair))
        self.pending.add(pair.ids)

    def pairs(self) -> List[CriticalPair]:
        return [p for _, _, p in sorted(self._heap)]

    def pop_single(self) -> List[CriticalPair]:
        _, _, pair = heapq.heappop(self._heap)
        return [pair]

    def pop_min_degree(self, cap: Optional[int] = None) -> List[CriticalPair]:
        d = self._heap[0][0]
        out = []
        while self._heap and self._heap[0][0] == d and (cap is None or len(out) < cap):
            out.append(heapq.heappop(self._heap)[2])
        return out


def select_single(bs, queue: PairQueue, cfg: GbConfig):
    return queue.pop_single()


def select_degree_batch(bs, queue: PairQueue, cfg: GbConfig):
    return queue.pop_min_degree(cfg.batch_size_cap)


def discard_useless(bs, queue: PairQueue, sps, cfg: GbConfig, stats: GbStats):
    """Apply the component check and both criteria to the selected pairs, in order.

    Pairs stay in ``queue.pending`` until examined, so a pair can only be
    justified by pairs that were handled before it.
    """
    keep = []
    for pair in sps:
        p, q = pair.a.poly, pair.b.poly
        if lt(p)[1] != lt(q)[1]:
            stats.component_mismatch += 1
        elif (
            cfg.use_product_criterion
            and is_scalar(p)
            and is_scalar(q)
            and product_criterion(p, q)
        ):
            stats.product_criterion += 1
        elif cfg.use_chain_criterion and chain_criterion(pair, bs, queue.pending):
            stats.chain_criterion += 1
        else:
            keep.append(pair)
        queue.pending.discard(pair.ids)
    return keep


def _spoly_combination(pair: CriticalPair, combs, order) -> Combination:
    (cp, tp), (cq, tq) = spoly_multipliers(pair.a.poly, pair.b.poly)
    out = Combination()
    for j, m in combs[pair.a.id].entries.items():
        out.add(j, poly_mul(monomial(cp, (tp, 0)), m, order), order)
    for j, m in combs[pair.b.id].entries.items():
        out.add(j, poly_mul(monomial(-cq, (tq, 0)), m, order), order)
    return out


def buchberger_completer(bs, queue, sps, cfg: GbConfig, stats: GbStats, combs=None):
    """Reduce each kept pair's S-polynomial modulo the current basis."""
    order = cfg.term_order
    polys = [b.poly for b in bs]
    hs = []
    for pair in discard_useless(bs, queue, sps, cfg, stats):
        stats.pairs_reduced += 1
        s = spoly(pair.a.poly, pair.b.poly, order)
        if combs is None:
            h = trd(polys, s, order)
            hcomb = None
        else:
            h, red = trd(polys, s, order, track=True)
            hcomb = _spoly_combination(pair, combs, order)
            for i, m in red.entries.items():
                for j, m2 in combs[bs[i].id].entries.items():
                    hcomb.add(j, poly_mul(poly_neg(m), m2, order), order)
        if not h:
            stats.zero_reductions += 1
            continue
        hs.append((h, hcomb))
    return hs


Selector = Callable[..., List[CriticalPair]]
Completer = Callable[..., list]


def gb_schema(
    inputs: Sequence[Poly],
    sel: Selector,
    compl: Completer,
    cfg: GbConfig,
    stats: Optional[GbStats] = None,
) -> GbResult:
    """Complete ``inputs`` to a Gröbner basis of the submodule they generate.

    ``compl(bs, queue, sps, cfg, stats, combs)`` returns ``(h, combination)``
    pairs with nonzero ``h`` whose leading terms are not divisible by any
    leading term of ``bs``.
    """
    stats = stats if stats is not None else GbStats()
    order = cfg.term_order
    ids = itertools.count()
    bs: List[IdentifiedPoly] = []
    combs: Optional[Dict[int, Combination]] = {} if cfg.track_cofactors else None
    for i, f in enumerate(inputs):
        if not f:
            continue
        b = IdentifiedPoly(next(ids), f)
        bs.append(b)
        if combs is not None:
            combs[b.id] = Combination({i: monomial(1, ((), 0))})
    queue = PairQueue()
    for pair in add_pairs([], [], bs):
        queue.push(pair)
        stats.pairs_generated += 1

    while len(queue) and not gen_whole_module(bs):
        stats.iterations += 1
        if stats.iterations > cfg.iteration_cap:
            raise IterationCapExceeded(
                f"completion exceeded {cfg.iteration_cap} iterations"
            )
        sps = sel(bs, queue, cfg)
        stats.pairs_selected += len(sps)
        new = compl(bs, queue, sps, cfg, stats, combs)
        hs = []
        for h, hcomb in new:
            scale = Fraction(1)
            if cfg.monic:
                scale = 1 / lc(h)
                h = make_monic(h)
            hid = IdentifiedPoly(next(ids), h)
            hs.append(hid)
            if combs is not None:
                c = Combination()
                for j, m in hcomb.entries.items():
                    c.add(j, poly_mul(monomial(scale, ((), 0)), m, order), order)
                combs[hid.id] = c
        stats.new_polys += len(hs)
        for pair in add_pairs(bs, [], hs):
            queue.push(pair)
            stats.pairs_generated += 1
        bs.extend(hs)

    basis = [make_monic(b.poly) if cfg.monic else b.poly for b in bs]
    cof = None
    if combs is not None:
        cof = []
        for b in bs:
            c = combs[b.id]
            if cfg.monic and lc(b.poly) != 1:
                scaled = Combination()
                for j, m in c.entries.items():
                    scaled.add(j, poly_mul(monomial(1 / lc(b.poly), ((), 0)), m, order), order)
                c = scaled
            cof.append(c)
    return GbResult(basis, stats, cof)


def gb(inputs: Sequence[Poly], cfg: Optional[GbConfig] = None, stats=None) -> List[Poly]:
    """Buchberger's algorithm: one pair per iteration, reduced with ``trd``."""
    cfg = cfg or GbConfig()
    sel = select_single if cfg.selection == "single" else select_degree_batch
    return gb_schema(inputs, sel, buchberger_completer, cfg, stats).basis


def gb_certified(inputs: Sequence[Poly], cfg: Optional[GbConfig] = None) -> GbResult:
    """Like :func:`gb` but every basis element comes with its cofactors over ``inputs``."""
    cfg = cfg or GbConfig()
    cfg = GbConfig(**{**cfg.__dict__, "track_cofactors": True})
    sel = select_single if cfg.selection == "single" else select_degree_batch
    return gb_schema(inputs, sel, buchberger_completer, cfg)


def is_groebner_basis(G: Sequence[Poly], order: TermOrder) -> bool:
    G = [g for g in G if g]
    for f, g in itertools.combinations(G, 2):
        if trd(G, spoly(f, g, order), order):
            return False
    return True


def in_pmdl(p: Poly, fs: Sequence[Poly], cfg: Optional[GbConfig] = None, certify: bool = False):
    """Decide ``p in pmdl(fs)``.

    With ``certify=True`` returns ``(member, combination)`` where, for members,
    ``p == combination.evaluate(fs)``.
    """
    cfg = cfg or GbConfig()
    order = cfg.term_order
    if not certify:
        G = gb(fs, cfg)
        return not trd(G, p, order)
    res = gb_certified(fs, cfg)
    nf, red = trd(res.basis, p, order, track=True)
    if nf:
        return False, None
    cert = red.compose(res.cofactors, order)
    return True, cert
