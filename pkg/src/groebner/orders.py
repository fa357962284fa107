"""Admissible monomial orders and their extensions to terms.

Variable significance: a higher index is a lex-larger variable, so
``x0 < x1 < x2 < ...``. All golden examples depend on this convention.

Each order is realised as a *descending sort key*: ``desc_key(u) < desc_key(v)``
iff ``u`` is larger than ``v``. Sorting a list of terms by ``desc_key`` puts it
in descending order, and a min-heap keyed by it pops the largest term first.
Comparison helpers are derived from the same key.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .monomials import PowerProduct, Term

LT, EQ, GT = -1, 0, 1


class MonomialOrder(enum.Enum):
    LEX = "lex"
    DEGLEX = "dlex"
    DEGREVLEX = "drlex"

    @classmethod
    def parse(cls, name: str) -> "MonomialOrder":
        aliases = {
            "lex": cls.LEX,
            "dlex": cls.DEGLEX,
            "deglex": cls.DEGLEX,
            "grlex": cls.DEGLEX,
            "drlex": cls.DEGREVLEX,
            "degrevlex": cls.DEGREVLEX,
            "grevlex": cls.DEGREVLEX,
        }
        try:
            return aliases[name.lower()]
        except KeyError:
            raise ValueError(f"unknown monomial order {name!r}") from None


class Extension(enum.Enum):
    POT = "pot"
    TOP = "top"

    @classmethod
    def parse(cls, name: str) -> "Extension":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown term-order extension {name!r}") from None


# Descending pp keys. Trailing zeros are trimmed, so for lex a longer tuple
# has a larger most-significant variable; equal lengths compare reversed.
# For degrevlex, equal-degree tuples are never proper prefixes of one another.


def _lex_key(t: PowerProduct):
    return (-len(t), tuple([-e for e in reversed(t)]))


def _deglex_key(t: PowerProduct):
    return (-sum(t), -len(t), tuple([-e for e in reversed(t)]))


def _degrevlex_key(t: PowerProduct):
    return (-sum(t), t)


_PP_KEYS = {
    MonomialOrder.LEX: _lex_key,
    MonomialOrder.DEGLEX: _deglex_key,
    MonomialOrder.DEGREVLEX: _degrevlex_key,
}


def pp_desc_key(ord: MonomialOrder, t: PowerProduct):
    return _PP_KEYS[ord](t)


def compare_pp(ord: MonomialOrder, s: PowerProduct, t: PowerProduct) -> int:
    """Three-way comparison returning LT, EQ or GT."""
    ks, kt = _PP_KEYS[ord](s), _PP_KEYS[ord](t)
    if ks == kt:
        return EQ
    return GT if ks < kt else LT


@dataclass(frozen=True)
class TermOrder:
    """A monomial order extended to terms ``t*e_j`` by POT or TOP.

    The object is an immutable context value passed explicitly to every
    operation that needs to compare terms. Keys are memoised per instance.
    """

    base: MonomialOrder = MonomialOrder.LEX
    extension: Extension = Extension.POT
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @classmethod
    def from_names(cls, order: str = "lex", term_order: str = "pot") -> "TermOrder":
        return cls(MonomialOrder.parse(order), Extension.parse(term_order))

    def desc_key(self, v: Term):
        try:
            return self._cache[v]
        except KeyError:
            pass
        k = _PP_KEYS[self.base](v[0])
        key = (-v[1], k) if self.extension is Extension.POT else (k, -v[1])
        if len(self._cache) > 2_000_000:
            self._cache.clear()
        self._cache[v] = key
        return key

    def compare(self, u: Term, v: Term) -> int:
        ku, kv = self.desc_key(u), self.desc_key(v)
        if ku == kv:
            return EQ
        return GT if ku < kv else LT

    def max_term(self, terms):
        return min(terms, key=self.desc_key)

    def sort_desc(self, terms) -> list:
        return sorted(terms, key=self.desc_key)

    def __str__(self) -> str:
        return f"{self.base.value}/{self.extension.value}"


def compare_term(tord: TermOrder, u: Term, v: Term) -> int:
    return tord.compare(u, v)
