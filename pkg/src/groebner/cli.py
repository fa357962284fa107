"""Command-line front-end.

Exit codes: 0 success, 1 computation error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional

from . import bench as bench_mod
from .buchberger import GbConfig, GbStats, gb_certified, gb_schema, in_pmdl, is_groebner_basis, select_degree_batch, select_single, buchberger_completer
from .f4 import f4_completer
from .orders import Extension, TermOrder
from .parsing import ParseError, parse_poly, print_poly
from .polynomials import Poly, is_scalar
from .problems import ProblemFile, load_problem, parse_problem
from .reduced_gb import comp_red_monic_basis, is_reduced_gb
from .reduction import IterationCapExceeded, trd
from .syzygy import SyzygyProblem, cofactor_view, syzygy_basis


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    order: str = ""
    algorithm: str = ""
    vars: Optional[List[str]] = None
    scalar: bool = True
    basis: List[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def basis_from_report(text: str, tord: Optional[TermOrder] = None) -> List[Poly]:
    """Parse the basis of a JSON report back into polynomials."""
    data = json.loads(text)
    if tord is None:
        base, _, ext = data.get("order", "lex/pot").partition("/")
        tord = TermOrder.from_names(base or "lex", ext or "pot")
    return [parse_poly(s, data.get("vars"), tord) for s in data["basis"]]


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", help="problem file ('-' for stdin)")
    p.add_argument("--order", choices=["lex", "dlex", "drlex"])
    p.add_argument("--term-order", choices=["pot", "top"])
    p.add_argument("--algorithm", choices=["buchberger", "f4"], default="buchberger")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--no-product-criterion", action="store_true")
    p.add_argument("--no-chain-criterion", action="store_true")
    p.add_argument("--certify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--iteration-cap", type=int, default=100_000)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="groebner", description="Exact Gröbner bases over Q.")
    sub = ap.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("gb", help="compute a Gröbner basis"))
    m = sub.add_parser("member", help="decide submodule membership")
    _common(m)
    m.add_argument("--poly", required=True, help="polynomial to test")
    _common(sub.add_parser("syzygy", help="Gröbner basis of the syzygy module"))
    _common(sub.add_parser("check", help="is the input a (reduced) Gröbner basis?"))
    b = sub.add_parser("bench", help="run the Cyclic/Katsura benchmark table")
    b.add_argument("--suite", default="cyclic4,katsura3", help="comma-separated problem names")
    b.add_argument("--algorithms", default="buchberger,f4")
    b.add_argument("--timeout", type=float, default=None, help=f"seconds per cell (env {bench_mod.TIMEOUT_ENV})")
    b.add_argument("--order", choices=["lex", "dlex", "drlex"], default="drlex")
    b.add_argument("--term-order", choices=["pot", "top"], default="pot")
    b.add_argument("--json", action="store_true")
    return ap


def _load(args) -> ProblemFile:
    if not args.input:
        raise UsageError("--input is required")
    if args.input == "-":
        return parse_problem(sys.stdin.read())
    return load_problem(args.input)


def _config(args, prob: ProblemFile) -> GbConfig:
    tord = prob.term_order_obj(args.order, args.term_order)
    if args.iteration_cap <= 0:
        raise UsageError("--iteration-cap must be positive")
    return GbConfig(
        term_order=tord,
        use_product_criterion=not args.no_product_criterion,
        use_chain_criterion=not args.no_chain_criterion,
        iteration_cap=args.iteration_cap,
    )


def _compute(args, polys, cfg: GbConfig):
    stats = GbStats()
    if args.certify:
        if args.algorithm != "buchberger":
            raise UsageError("--certify requires --algorithm buchberger")
        res = gb_certified(polys, cfg)
        return res.basis, res.stats, res.cofactors
    if args.algorithm == "f4":
        res = gb_schema(polys, select_degree_batch, f4_completer, cfg, stats)
    else:
        sel = select_single if cfg.selection == "single" else select_degree_batch
        res = gb_schema(polys, sel, buchberger_completer, cfg, stats)
    return res.basis, res.stats, None


def _report(args, prob, cfg, scalar) -> RunReport:
    return RunReport(
        command=args.command,
        order=str(cfg.term_order),
        algorithm=args.algorithm,
        vars=prob.variables,
        scalar=scalar,
    )


def cmd_gb(args, out) -> RunReport:
    prob = _load(args)
    cfg = _config(args, prob)
    polys = prob.polys(cfg.term_order)
    scalar = all(is_scalar(p) for p in polys)
    rep = _report(args, prob, cfg, scalar)
    t0 = time.perf_counter()
    G, stats, cof = _compute(args, polys, cfg)
    if args.reduced:
        G = comp_red_monic_basis(G, cfg.term_order)
        cof = None
    rep.wall_time = time.perf_counter() - t0
    rep.basis = [print_poly(g, prob.variables, scalar) for g in G]
    rep.stats = stats.as_dict()
    if cof is not None:
        rep.extra["cofactors"] = [
            {str(i): print_poly(m, prob.variables, True) for i, m in sorted(c.entries.items())} for c in cof
        ]
    if not args.json:
        for line in rep.basis:
            print(line, file=out)
        if cof is not None:
            for k, c in enumerate(rep.extra["cofactors"]):
                terms = ", ".join(f"c{i} = {s}" for i, s in c.items())
                print(f"# g{k}: {terms}", file=out)
    return rep


def cmd_member(args, out) -> RunReport:
    prob = _load(args)
    cfg = _config(args, prob)
    polys = prob.polys(cfg.term_order)
    target = parse_poly(args.poly, prob.variables, cfg.term_order)
    scalar = all(is_scalar(p) for p in polys + [target])
    rep = _report(args, prob, cfg, scalar)
    t0 = time.perf_counter()
    if args.certify:
        member, cert = in_pmdl(target, polys, cfg, certify=True)
    else:
        G, stats, _ = _compute(args, polys, cfg)
        rep.stats = stats.as_dict()
        member, cert = not trd(G, target, cfg.term_order), None
    rep.wall_time = time.perf_counter() - t0
    rep.extra["member"] = member
    if cert is not None:
        rep.extra["certificate"] = {
            str(i): print_poly(m, prob.variables, True) for i, m in sorted(cert.entries.items())
        }
    if not args.json:
        print("true" if member else "false", file=out)
        if cert is not None:
            for i, s in rep.extra["certificate"].items():
                print(f"c{i} = {s}", file=out)
    return rep


def cmd_syzygy(args, out) -> RunReport:
    prob = _load(args)
    if args.algorithm != "buchberger":
        raise UsageError("syzygy computation uses --algorithm buchberger")
    cfg = _config(args, prob)
    if cfg.term_order.extension is not Extension.POT:
        raise UsageError("syzygy computation requires --term-order pot")
    polys = prob.polys(cfg.term_order)
    rep = _report(args, prob, cfg, False)
    t0 = time.perf_counter()
    problem = SyzygyProblem(polys, cfg.term_order.base)
    syz = syzygy_basis(problem, cfg, reduced=args.reduced)
    m = len(polys)
    rows = []
    for cof, _ in cofactor_view(m, syz, polys, cfg.term_order):
        rows.append({f"s{i}": print_poly(c, prob.variables, True) for i, c in enumerate(cof)})
    rep.wall_time = time.perf_counter() - t0
    rep.basis = [print_poly(s, prob.variables, False) for s in syz]
    rep.extra["syzygies"] = rows
    if not args.json:
        for k, row in enumerate(rows):
            print(f"# syzygy {k}", file=out)
            for name, s in row.items():
                print(f"{name} = {s}", file=out)
    return rep


def cmd_check(args, out) -> RunReport:
    prob = _load(args)
    cfg = _config(args, prob)
    polys = prob.polys(cfg.term_order)
    scalar = all(is_scalar(p) for p in polys)
    rep = _report(args, prob, cfg, scalar)
    t0 = time.perf_counter()
    rep.extra["is_groebner_basis"] = is_groebner_basis(polys, cfg.term_order)
    rep.extra["is_reduced_gb"] = is_reduced_gb(polys, cfg.term_order)
    rep.wall_time = time.perf_counter() - t0
    rep.basis = [print_poly(p, prob.variables, scalar) for p in polys]
    if not args.json:
        print(f"is_groebner_basis: {str(rep.extra['is_groebner_basis']).lower()}", file=out)
        print(f"is_reduced_gb: {str(rep.extra['is_reduced_gb']).lower()}", file=out)
    return rep


def cmd_bench(args, out) -> RunReport:
    suite = [s.strip() for s in args.suite.replace(" ", ",").split(",") if s.strip()]
    algs = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    try:
        cells = bench_mod.bench(suite, algs, args.timeout, args.order, args.term_order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = RunReport(command="bench", order=f"{args.order}/{args.term_order}")
    rep.extra["cells"] = bench_mod.cells_as_dicts(cells)
    rep.wall_time = sum(c.seconds or c.timeout for c in cells)
    if not args.json:
        print(f"# order: {args.order}/{args.term_order}", file=out)
        print(bench_mod.format_table(cells), file=out)
    if any(c.error for c in cells):
        rep.extra["failed"] = True
    return rep


COMMANDS = {
    "gb": cmd_gb,
    "member": cmd_member,
    "syzygy": cmd_syzygy,
    "check": cmd_check,
    "bench": cmd_bench,
}


def run_command(argv, out=None) -> RunReport:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    rep = COMMANDS[args.command](args, out)
    if getattr(args, "stats", False) and not args.json:
        for k, v in rep.stats.items():
            print(f"# {k}: {v}", file=out)
        print(f"# wall_time: {rep.wall_time:.3f}", file=out)
    if args.json:
        print(rep.to_json(), file=out)
    return rep


def main(argv=None) -> int:
    try:
        rep = run_command(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # argparse
        return int(exc.code or 0)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IterationCapExceeded, ArithmeticError, RuntimeError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 1
    return 1 if rep.extra.get("failed") else 0


if __name__ == "__main__":
    sys.exit(main())
