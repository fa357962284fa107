"""Problem files and the standard benchmark systems.

Problem file format (UTF-8, line oriented)::

    # comment
    vars: x, y, z          (optional; default names x0, x1, ...)
    order: drlex           (optional)
    term-order: pot        (optional)
    x*y - z                (one generator per line)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Union

from .monomials import variable
from .orders import TermOrder
from .parsing import ParseError, parse_poly
from .polynomials import Poly, is_scalar, monomial, poly

_HEADERS = ("vars", "order", "term-order")


@dataclass
class ProblemFile:
    generators: List[str]
    variables: Optional[List[str]] = None
    order: Optional[str] = None
    term_order: Optional[str] = None
    lines: List[int] = field(default_factory=list)

    def term_order_obj(self, order: Optional[str] = None, term_order: Optional[str] = None) -> TermOrder:
        return TermOrder.from_names(order or self.order or "lex", term_order or self.term_order or "pot")

    def polys(self, tord: TermOrder) -> List[Poly]:
        lines = self.lines or list(range(1, len(self.generators) + 1))
        return [parse_poly(src, self.variables, tord, line) for src, line in zip(self.generators, lines)]

    def is_scalar(self, tord: TermOrder) -> bool:
        return all(is_scalar(p) for p in self.polys(tord))


def parse_problem(text: str) -> ProblemFile:
    prob = ProblemFile(generators=[])
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if sep and head.strip().lower() in _HEADERS:
            key = head.strip().lower()
            rest = rest.strip()
            if key == "vars":
                names = [v for v in re.split(r"[,\s]+", rest) if v]
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable name", rest, 0, lineno)
                prob.variables = names
            elif key == "order":
                prob.order = rest
            else:
                prob.term_order = rest
            continue
        prob.generators.append(line)
        prob.lines.append(lineno)
    return prob


def load_problem(path: Union[str, Path]) -> ProblemFile:
    return parse_problem(Path(path).read_text(encoding="utf-8"))


# --- benchmark systems -------------------------------------------------------


def _var(i: int) -> Poly:
    return monomial(1, (variable(i), 0))


def cyclic(n: int, tord: TermOrder) -> List[Poly]:
    """Cyclic_n in x0..x_{n-1}.

    For d = 1..n-1: sum over i of x_i x_{i+1} ... x_{i+d-1} (indices mod n);
    last equation x0 x1 ... x_{n-1} - 1.
    """
    eqs = []
    for d in range(1, n):
        terms = []
        for i in range(n):
            exps = [0] * n
            for j in range(d):
                exps[(i + j) % n] += 1
            terms.append(((_trim(exps), 0), 1))
        eqs.append(poly(terms, tord))
    eqs.append(poly([((_trim([1] * n), 0), 1), (((), 0), -1)], tord))
    return eqs


def katsura(n: int, tord: TermOrder) -> List[Poly]:
    """Katsura_n in u_0..u_n (variables x0..xn).

    u_0 + 2 (u_1 + ... + u_n) - 1, and for m = 0..n-1:
    sum_{l=-n}^{n} u_|l| u_|m-l| - u_m, where u_k = 0 for k > n.
    """
    eqs = []
    lin = [((variable(0), 0), 1)] + [((variable(i), 0), 2) for i in range(1, n + 1)]
    eqs.append(poly(lin + [(((), 0), -1)], tord))
    for m in range(n):
        terms = []
        for l in range(-n, n + 1):
            a, b = abs(l), abs(m - l)
            if a > n or b > n:
                continue
            exps = [0] * (n + 1)
            exps[a] += 1
            exps[b] += 1
            terms.append(((_trim(exps), 0), 1))
        terms.append(((variable(m), 0), -1))
        eqs.append(poly(terms, tord))
    return eqs


def _trim(exps) -> tuple:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


SUITE = {
    "cyclic4": (cyclic, 4),
    "cyclic5": (cyclic, 5),
    "cyclic6": (cyclic, 6),
    "katsura3": (katsura, 3),
    "katsura4": (katsura, 4),
    "katsura5": (katsura, 5),
}


def benchmark_system(name: str, tord: TermOrder) -> List[Poly]:
    try:
        gen, n = SUITE[name]
    except KeyError:
        raise ValueError(f"unknown benchmark {name!r}; choose from {sorted(SUITE)}") from None
    return gen(n, tord)
