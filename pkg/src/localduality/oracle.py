"""Brute-force combinatorics on monomial ideals.

Everything here works on exponent tuples only and serves as ground truth for
the Gröbner-based code; it deliberately imports nothing from ``groebner``.
"""

from __future__ import annotations

import itertools
from functools import reduce
from typing import Iterable, Sequence

__all__ = [
    "MonomialIdeal", "mono_primary_decomposition", "mono_top_part",
    "mono_dimension", "mono_codim", "mono_intersect", "mono_quotient",
]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens):
    gens = sorted(set(tuple(g) for g in gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


class MonomialIdeal:
    """Monomial ideal stored as its minimal generators (exponent tuples)."""

    def __init__(self, generators: Iterable[Sequence[int]], nvars: int | None = None):
        gens = [tuple(int(x) for x in g) for g in generators]
        if nvars is None:
            if not gens:
                raise ValueError("nvars is required for the zero ideal")
            nvars = len(gens[0])
        if any(len(g) != nvars for g in gens) or any(x < 0 for g in gens for x in g):
            raise ValueError("bad exponent vector")
        self.nvars = nvars
        self.gens = _minimalize(gens)

    @classmethod
    def from_polys(cls, polys) -> "MonomialIdeal":
        polys = list(polys)
        exps = []
        for f in polys:
            if not f:
                continue
            if not f.is_monomial():
                raise ValueError(f"{f} is not a monomial")
            exps.append(f.lm)
        return cls(exps, polys[0].ring.nvars)

    def to_polys(self, ring):
        return [ring.monomial(e) for e in self.gens]

    def contains(self, e) -> bool:
        return any(_divides(g, e) for g in self.gens)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.gens

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.nvars == other.nvars and self.gens == other.gens

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({list(self.gens)})"


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal([_lcm(a, b) for a in I.gens for b in J.gens], I.nvars)


def mono_quotient(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J = intersection over generators m of J of (I : m)."""
    parts = []
    for m in J.gens:
        parts.append(MonomialIdeal([tuple(max(a - b, 0) for a, b in zip(g, m)) for g in I.gens],
                                   I.nvars))
    if not parts:
        return MonomialIdeal([(0,) * I.nvars], I.nvars)
    return reduce(mono_intersect, parts)


def mono_dimension(I: MonomialIdeal) -> int:
    """Largest set of variables containing no generator's support; -1 for the unit ideal."""
    if I.is_unit():
        return -1
    n = I.nvars
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in I.gens]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            S = frozenset(S)
            if not any(sup <= S for sup in supports):
                return size
    return 0


def mono_codim(I: MonomialIdeal) -> int:
    d = mono_dimension(I)
    if d < 0:
        raise ValueError("codimension of the unit ideal")
    return I.nvars - d


def _split(I: MonomialIdeal):
    for g in I.gens:
        support = [i for i, x in enumerate(g) if x]
        if len(support) > 1:
            i = support[0]
            u = tuple(g[i] if j == i else 0 for j in range(I.nvars))
            v = tuple(0 if j == i else g[j] for j in range(I.nvars))
            rest = [h for h in I.gens if h != g]
            return MonomialIdeal(rest + [u], I.nvars), MonomialIdeal(rest + [v], I.nvars)
    return None


def mono_primary_decomposition(I: MonomialIdeal) -> list:
    """Irredundant decomposition into ideals generated by pure powers of variables.

    A generator with mixed support x^a = u v (u the power of the first
    variable in its support) splits I into (I + u) ∩ (I + v).
    """
    if I.is_unit():
        raise ValueError("the unit ideal has no primary decomposition")
    stack = [I]
    comps = []
    while stack:
        J = stack.pop()
        parts = _split(J)
        if parts is None:
            comps.append(J)
        else:
            stack.extend(reversed(parts))
    uniq = []
    for c in comps:
        if c not in uniq:
            uniq.append(c)
    # drop components containing another component
    out = [c for c in uniq if not any(d != c and d.issubset(c) for d in uniq)]
    return sorted(out, key=lambda c: c.gens)


def mono_top_part(I: MonomialIdeal, p: int) -> MonomialIdeal:
    """Intersection of the components whose radical has p variables."""
    if mono_codim(I) != p:
        raise ValueError(f"ideal has codimension {mono_codim(I)}, not {p}")
    comps = [c for c in mono_primary_decomposition(I) if len(c.gens) == p]
    return reduce(mono_intersect, comps)
