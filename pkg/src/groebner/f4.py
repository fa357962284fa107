"""Faugère's F4: symbolic preprocessing plus exact sparse row reduction.

Columns of a Macaulay matrix are terms in descending order, so column 0 is the
largest term and the pivot of a reduced row is its leading term.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .buchberger import (
    CriticalPair,
    GbConfig,
    GbStats,
    discard_useless,
    gb_schema,
    select_degree_batch,
    spoly_multipliers,
)
from .monomials import Term, dvd_term
from .orders import TermOrder
from .polynomials import Poly, lt, monom_mult

Row = Tuple[Tuple[int, Fraction], ...]


@dataclass(frozen=True)
class SparseMatrix:
    nrows: int
    ncols: int
    rows: Tuple[Row, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        for row in self.rows:
            prev = -1
            for j, v in row:
                if not (prev < j < self.ncols) or not v:
                    raise ValueError("malformed sparse row")
                prev = j

    @classmethod
    def from_dense(cls, dense) -> "SparseMatrix":
        dense = [list(r) for r in dense]
        ncols = len(dense[0]) if dense else 0
        rows = tuple(
            tuple((j, Fraction(v)) for j, v in enumerate(r) if v) for r in dense
        )
        return cls(len(dense), ncols, rows)

    def to_dense(self) -> List[List[Fraction]]:
        out = []
        for row in self.rows:
            r = [Fraction(0)] * self.ncols
            for j, v in row:
                r[j] = v
            out.append(r)
        return out

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)


def keys_to_list(fs: Sequence[Poly], order: TermOrder) -> List[Term]:
    seen = set()
    for f in fs:
        for t, _ in f.items:
            seen.add(t)
    return order.sort_desc(seen)


def polys_to_mat(vs: Sequence[Term], fs: Sequence[Poly]) -> SparseMatrix:
    index = {v: j for j, v in enumerate(vs)}
    rows = []
    for f in fs:
        try:
            row = sorted((index[t], c) for t, c in f.items)
        except KeyError as exc:
            raise ValueError(f"term {exc.args[0]!r} missing from column list") from None
        rows.append(tuple(row))
    return SparseMatrix(len(rows), len(vs), tuple(rows))


def mat_to_polys(vs: Sequence[Term], A: SparseMatrix) -> List[Poly]:
    if A.ncols != len(vs):
        raise ValueError("column count does not match the term list")
    # columns are in descending term order, so sorted rows are already sorted polys
    return [Poly((vs[j], c) for j, c in row) for row in A.rows]


def row_echelon(A: SparseMatrix) -> SparseMatrix:
    """Reduced row echelon form over Q.

    Pivot column: leftmost available. Pivot row: fewest nonzeros among the
    rows starting in that column, ties broken by row position.
    """
    work: List[Dict[int, Fraction]] = [dict(r) for r in A.rows if r]
    lead = [min(r) for r in work]
    active = set(range(len(work)))
    pivots: List[Tuple[int, Dict[int, Fraction]]] = []
    by_col: Dict[int, List[int]] = {}
    for i in active:
        by_col.setdefault(lead[i], []).append(i)
    cols = list(by_col)
    heapq.heapify(cols)
    while cols:
        col = heapq.heappop(cols)
        cands = [i for i in by_col.pop(col, ()) if i in active and lead[i] == col]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (len(work[i]), i))
        active.discard(piv)
        prow = work[piv]
        inv = 1 / prow[col]
        if inv != 1:
            for j in prow:
                prow[j] *= inv
        items = list(prow.items())
        for i in cands:
            if i == piv:
                continue
            r = work[i]
            f = r[col]
            for j, v in items:
                nv = r.get(j, 0) - f * v
                if nv:
                    r[j] = nv
                else:
                    del r[j]
            if r:
                lead[i] = min(r)
                if lead[i] not in by_col:
                    by_col[lead[i]] = []
                    heapq.heappush(cols, lead[i])
                by_col[lead[i]].append(i)
            else:
                active.discard(i)
        for _, r in pivots:
            f = r.get(col)
            if f:
                for j, v in items:
                    nv = r.get(j, 0) - f * v
                    if nv:
                        r[j] = nv
                    else:
                        del r[j]
        pivots.append((col, prow))
    rows = [tuple(sorted(r.items())) for _, r in pivots]
    rows.extend(() for _ in range(A.nrows - len(rows)))
    return SparseMatrix(A.nrows, A.ncols, tuple(rows))


def macaulay_mat(fs: Sequence[Poly], order: TermOrder) -> Tuple[List[Term], SparseMatrix]:
    vs = keys_to_list(fs, order)
    return vs, polys_to_mat(vs, fs)


def macaulay_red(fs: Sequence[Poly], order: TermOrder, stats: Optional[GbStats] = None) -> List[Poly]:
    """Row-reduce the Macaulay matrix of ``fs``; keep rows with new leading terms."""
    lts = {lt(f) for f in fs if f}
    vs, A = macaulay_mat(fs, order)
    if stats is not None:
        stats.matrices.append((A.nrows, A.ncols, A.nnz))
    gs = mat_to_polys(vs, row_echelon(A))
    return [g for g in gs if g and lt(g) not in lts]


def _pair_polys(pair):
    if isinstance(pair, CriticalPair):
        return pair.a.poly, pair.b.poly
    return pair


def sym_preproc(bs: Sequence[Poly], sps, order: TermOrder) -> List[Poly]:
    """Pair constituents followed by every reducer multiple they need."""
    fs1: List[Poly] = []
    for pair in sps:
        p, q = _pair_polys(pair)
        if lt(p)[1] != lt(q)[1]:
            continue
        (cp, tp), (cq, tq) = spoly_multipliers(p, q)
        fs1.append(monom_mult(cp, tp, p))
        fs1.append(monom_mult(cq, tq, q))
    key = order.desc_key
    seen = set()
    todo = []
    for f in fs1:
        for t, _ in f.items:
            if t not in seen:
                seen.add(t)
                todo.append((key(t), t))
    heapq.heapify(todo)
    leads = [(lt(b), b) for b in bs if b]
    fs2: List[Poly] = []
    while todo:
        _, v = heapq.heappop(todo)
        for u, b in leads:
            t = dvd_term(u, v)
            if t is None:
                continue
            f = monom_mult(1, t, b)
            fs2.append(f)
            for w, _ in f.items:
                if w not in seen:
                    seen.add(w)
                    heapq.heappush(todo, (key(w), w))
            break
    return fs1 + fs2


def f4_red(bs: Sequence[Poly], sps, order: TermOrder, stats: Optional[GbStats] = None) -> List[Poly]:
    hs = macaulay_red(sym_preproc(bs, sps, order), order, stats)
    leads = [lt(b) for b in bs if b]
    return [h for h in hs if not any(dvd_term(u, lt(h)) is not None for u in leads)]


def f4_completer(bs, queue, sps, cfg: GbConfig, stats: GbStats, combs=None):
    if combs is not None:
        raise ValueError("cofactor tracking is only available for Buchberger's algorithm")
    keep = discard_useless(bs, queue, sps, cfg, stats)
    if not keep:
        return []
    stats.pairs_reduced += len(keep)
    polys = [b.poly for b in bs]
    hs = f4_red(polys, keep, cfg.term_order, stats)
    stats.zero_reductions += max(0, len(keep) - len(hs))
    return [(h, None) for h in hs]


def f4(inputs: Sequence[Poly], cfg: Optional[GbConfig] = None, stats=None) -> List[Poly]:
    """F4: all pending pairs of minimal lcm degree are reduced together."""
    cfg = cfg or GbConfig()
    return gb_schema(inputs, select_degree_batch, f4_completer, cfg, stats).basis
