"""Benchmark harness over the Cyclic/Katsura systems.

Each cell runs in a child process so a timeout can actually stop it.
"""

from __future__ import annotations

import multiprocessing as mp
import os
import time
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

from .buchberger import GbConfig, GbStats, gb
from .f4 import f4
from .orders import TermOrder
from .problems import SUITE, benchmark_system
from .reduced_gb import comp_red_monic_basis

TIMEOUT_ENV = "GROEBNER_BENCH_TIMEOUT"
DEFAULT_TIMEOUT = 600.0

ALGORITHMS = {"buchberger": gb, "f4": f4}


def default_timeout() -> float:
    return float(os.environ.get(TIMEOUT_ENV, DEFAULT_TIMEOUT))


@dataclass
class BenchCell:
    problem: str
    algorithm: str
    order: str
    seconds: Optional[float]
    timeout: float
    gb_size: Optional[int] = None
    reduced_size: Optional[int] = None
    reduced_basis: Optional[List[str]] = None
    error: Optional[str] = None

    @property
    def timed_out(self) -> bool:
        return self.seconds is None and self.error is None

    def display(self) -> str:
        if self.error:
            return "error"
        if self.seconds is None:
            return f">{self.timeout:g}"
        return f"{self.seconds:.2f}"


def run_cell(problem: str, algorithm: str, order: str = "drlex", term_order: str = "pot"):
    """Run one cell in-process; returns (seconds, gb, reduced gb, stats)."""
    tord = TermOrder.from_names(order, term_order)
    cfg = GbConfig(term_order=tord)
    stats = GbStats()
    inputs = benchmark_system(problem, tord)
    t0 = time.perf_counter()
    G = ALGORITHMS[algorithm](inputs, cfg, stats)
    R = comp_red_monic_basis(G, tord)
    return time.perf_counter() - t0, G, R, stats


def _child(conn, problem, algorithm, order, term_order):
    from .polynomials import format_poly

    try:
        secs, G, R, _ = run_cell(problem, algorithm, order, term_order)
        conn.send(("ok", secs, len(G), [format_poly(r) for r in R]))
    except Exception as exc:  # reported, not raised, so the table still completes
        conn.send(("error", repr(exc)))
    finally:
        conn.close()


def bench_cell(problem: str, algorithm: str, timeout: Optional[float] = None, order: str = "drlex", term_order: str = "pot") -> BenchCell:
    timeout = default_timeout() if timeout is None else timeout
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    recv, send = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_child, args=(send, problem, algorithm, order, term_order), daemon=True)
    proc.start()
    send.close()
    cell = BenchCell(problem, algorithm, order, None, timeout)
    if recv.poll(timeout):
        try:
            msg = recv.recv()
        except EOFError:
            msg = ("error", "worker exited without a result")
        if msg[0] == "ok":
            _, cell.seconds, cell.gb_size, cell.reduced_basis = msg
            cell.reduced_size = len(cell.reduced_basis)
        else:
            cell.error = msg[1]
    proc.terminate()
    proc.join()
    return cell


def bench(suite: Sequence[str], algorithms: Sequence[str] = ("buchberger", "f4"), timeout: Optional[float] = None, order: str = "drlex", term_order: str = "pot") -> List[BenchCell]:
    for name in suite:
        if name not in SUITE:
            raise ValueError(f"unknown benchmark {name!r}; choose from {sorted(SUITE)}")
    for alg in algorithms:
        if alg not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {alg!r}")
    return [bench_cell(p, a, timeout, order, term_order) for a in algorithms for p in suite]


def format_table(cells: Sequence[BenchCell]) -> str:
    problems = list(dict.fromkeys(c.problem for c in cells))
    algs = list(dict.fromkeys(c.algorithm for c in cells))
    lookup = {(c.algorithm, c.problem): c for c in cells}
    width = max([len(p) for p in problems] + [8])
    head = " " * 11 + " | ".join(p.rjust(width) for p in problems)
    lines = [head, "-" * len(head)]
    for a in algs:
        row = [lookup[(a, p)].display().rjust(width) if (a, p) in lookup else "".rjust(width) for p in problems]
        lines.append(a.ljust(11) + " | ".join(row))
    return "\n".join(lines)


def cells_as_dicts(cells: Sequence[BenchCell]) -> List[dict]:
    return [dict(asdict(c), timed_out=c.timed_out) for c in cells]
