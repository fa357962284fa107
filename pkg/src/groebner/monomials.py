"""Power-products and terms.

A power-product is a tuple of exponents indexed by variable number, with
trailing zeros trimmed, so ``()`` is the unit ``1`` and ``(1, 2)`` is
``x0*x1^2``. Every power-product has exactly one such representation and the
number of variables is never fixed; tuples of different lengths combine by
padding with zeros.

A term ``t*e_j`` is the pair ``(t, j)``.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Optional, Tuple

PowerProduct = Tuple[int, ...]
Term = Tuple[PowerProduct, int]

UNIT: PowerProduct = ()


def _trim(exps) -> PowerProduct:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def make_pp(exponents=None) -> PowerProduct:
    """Build a power-product from an exponent sequence or an ``{index: exp}`` map."""
    if exponents is None:
        return UNIT
    if isinstance(exponents, dict):
        if not exponents:
            return UNIT
        if any(e < 0 or i < 0 for i, e in exponents.items()):
            raise ValueError("negative index or exponent")
        out = [0] * (max(exponents) + 1)
        for i, e in exponents.items():
            out[i] += e
        return _trim(out)
    exps = tuple(int(e) for e in exponents)
    if any(e < 0 for e in exps):
        raise ValueError("negative exponent")
    return _trim(exps)


def variable(i: int, e: int = 1) -> PowerProduct:
    if e == 0:
        return UNIT
    return (0,) * i + (e,)


def pp_support(t: PowerProduct) -> dict[int, int]:
    return {i: e for i, e in enumerate(t) if e}


def pp_mul(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    if len(s) < len(t):
        s, t = t, s
    if not t:
        return s
    n = len(t)
    return tuple([a + b for a, b in zip(s, t)]) + s[n:]


def pp_divides(s: PowerProduct, t: PowerProduct) -> Optional[PowerProduct]:
    """Quotient ``t / s`` if ``s`` divides ``t``, else ``None``."""
    if len(s) > len(t):
        return None
    q = []
    for a, b in zip(s, t):
        if a > b:
            return None
        q.append(b - a)
    q.extend(t[len(s):])
    return _trim(q)


def pp_is_divisor(s: PowerProduct, t: PowerProduct) -> bool:
    if len(s) > len(t):
        return False
    for a, b in zip(s, t):
        if a > b:
            return False
    return True


def pp_lcm(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    return tuple(max(a, b) for a, b in zip_longest(s, t, fillvalue=0))


def pp_gcd(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    return _trim(min(a, b) for a, b in zip(s, t))


def pp_degree(t: PowerProduct) -> int:
    return sum(t)


def nvars(t: PowerProduct) -> int:
    """One past the highest variable index occurring in ``t``."""
    return len(t)


def stimes(t: PowerProduct, v: Term) -> Term:
    return (pp_mul(t, v[0]), v[1])


def dvd_term(u: Term, v: Term) -> Optional[PowerProduct]:
    if u[1] != v[1]:
        return None
    return pp_divides(u[0], v[0])


def format_pp(t: PowerProduct, names=None) -> str:
    parts = []
    for i, e in enumerate(t):
        if not e:
            continue
        name = names[i] if names is not None else f"x{i}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_term(v: Term, names=None, scalar: bool = False) -> str:
    pp, comp = v
    if scalar:
        return format_pp(pp, names)
    if not pp:
        return f"e{comp}"
    return f"{format_pp(pp, names)}*e{comp}"
