"""Matroids realized by the columns of a rational matrix.

Subsets of the ground set are handled as frozensets of column indices; the
labels only matter for printing.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import GroundTooLarge, LoopPresent
from .exact import Mat, rank as mat_rank

__all__ = [
    "Matroid",
    "FlatLattice",
    "matroid_of",
    "circuits",
    "flats",
    "counts",
    "tutte",
    "evaluate",
    "broken_circuit_h_vector",
    "independence_h_vector",
    "h_vector",
    "max_ground",
]

DEFAULT_MAX_N = 24
MAX_FLAT_N = 16


def max_ground() -> int:
    return int(os.environ.get("ZONOTOPAL_MAX_N", DEFAULT_MAX_N))


class Matroid:
    """Rank oracle backed by column ranks of a realizing matrix."""

    def __init__(self, ground: Sequence[str], matrix: Mat):
        self.ground = tuple(ground)
        self.matrix = matrix
        self._rank: dict[frozenset, int] = {}

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def full_rank(self) -> int:
        return self.rank(range(self.n))

    def rank(self, s: Iterable[int]) -> int:
        s = frozenset(s)
        r = self._rank.get(s)
        if r is None:
            r = mat_rank(self.matrix.columns(sorted(s))) if s else 0
            self._rank[s] = r
        return r

    def corank(self, s: Iterable[int]) -> int:
        return self.full_rank - self.rank(s)

    def closure(self, s: Iterable[int]) -> frozenset:
        s = frozenset(s)
        rs = self.rank(s)
        return s | {e for e in range(self.n) if e not in s and self.rank(s | {e}) == rs}

    def is_independent(self, s) -> bool:
        s = frozenset(s)
        return self.rank(s) == len(s)

    def loops(self) -> list[int]:
        return [e for e in range(self.n) if self.rank([e]) == 0]

    def labels_of(self, s: Iterable[int]) -> list[str]:
        return [self.ground[i] for i in sorted(s)]

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.full_rank})"


def matroid_of(a) -> Matroid:
    return Matroid(a.labels, a.basis)


def _subsets(n: int):
    for size in range(n + 1):
        for s in combinations(range(n), size):
            yield frozenset(s)


def circuits(m: Matroid) -> list[frozenset]:
    """All minimal dependent sets, sorted by their index tuples."""
    out = []
    for s in _subsets(m.n):
        if not s:
            continue
        if any(c <= s for c in out):
            continue
        k = len(s)
        if m.rank(s) == k - 1 and all(m.rank(s - {e}) == k - 1 for e in s):
            out.append(s)
    return sorted(out, key=lambda c: tuple(sorted(c)))


@dataclass(frozen=True)
class FlatLattice:
    flats: tuple[frozenset, ...]
    ranks: dict = field(hash=False)
    mobius_to_top: dict = field(hash=False)

    def covers(self, f: frozenset) -> list[frozenset]:
        return [g for g in self.flats if f < g and self.ranks[g] == self.ranks[f] + 1]


def flats(m: Matroid) -> FlatLattice:
    if m.n > MAX_FLAT_N:
        raise GroundTooLarge(f"flat enumeration limited to n <= {MAX_FLAT_N}")
    found = {m.closure(s) for s in _subsets(m.n)}
    ordered = sorted(found, key=lambda f: (m.rank(f), len(f), tuple(sorted(f))))
    ranks = {f: m.rank(f) for f in ordered}
    top = frozenset(range(m.n))
    mu: dict[frozenset, int] = {}
    for f in reversed(ordered):
        mu[f] = 1 if f == top else -sum(mu[g] for g in ordered if f < g)
    return FlatLattice(tuple(ordered), ranks, mu)


def _guard(m: Matroid) -> None:
    if m.n > max_ground():
        raise GroundTooLarge(f"n={m.n} exceeds enumeration limit {max_ground()}")


def counts(m: Matroid) -> tuple[int, int, int]:
    """``(n_bases, n_independent, n_spanning)`` by exhaustive enumeration."""
    _guard(m)
    r = m.full_rank
    nb = ni = ns = 0
    for s in _subsets(m.n):
        rs = m.rank(s)
        ind = rs == len(s)
        sp = rs == r
        ni += ind
        ns += sp
        nb += ind and sp
    return nb, ni, ns


def tutte(m: Matroid) -> dict[tuple[int, int], int]:
    """Tutte polynomial by deletion-contraction, as ``{(i, j): coeff of x^i y^j}``.

    A minor is addressed by the pair (remaining elements, contracted set) over
    the original rank function: ``r'(T) = r(T | C) - r(C)``.
    """
    _guard(m)
    memo: dict = {}

    def rec(rest: frozenset, con: frozenset) -> Counter:
        key = (rest, con)
        if key in memo:
            return memo[key]
        if not rest:
            res = Counter({(0, 0): 1})
        else:
            e = min(rest)
            sub = rest - {e}
            rc = m.rank(con)
            is_loop = m.rank(con | {e}) == rc
            is_coloop = m.rank(con | rest) - m.rank(con | sub) == 1
            if is_loop:
                res = Counter({(i, j + 1): c for (i, j), c in rec(sub, con).items()})
            elif is_coloop:
                res = Counter({(i + 1, j): c for (i, j), c in rec(sub, con | {e}).items()})
            else:
                res = rec(sub, con) + rec(sub, con | {e})
        memo[key] = res
        return res

    return dict(sorted(rec(frozenset(range(m.n)), frozenset()).items()))


def evaluate(poly: dict[tuple[int, int], int], x, y):
    return sum(c * x**i * y**j for (i, j), c in poly.items())


def h_vector(f: Sequence[int], d: int) -> tuple[int, ...]:
    """h-vector from the f-vector ``f`` (``f[i]`` = number of faces of size i).

    Uses ``h(t) = sum_i f_{i-1} t^i (1-t)^{d-i}``; trailing zeros are stripped.
    """
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        if i > d or not fi:
            continue
        for j in range(d - i + 1):
            h[i + j] += fi * comb(d - i, j) * (-1) ** j
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def _order_positions(m: Matroid, ordering) -> dict[int, int]:
    if ordering is None:
        ordering = range(m.n)
    ordering = list(ordering)
    idx = [m.ground.index(str(x)) if not isinstance(x, int) else x for x in ordering]
    if sorted(idx) != list(range(m.n)):
        raise ValueError("ordering must be a permutation of the ground set")
    return {e: pos for pos, e in enumerate(idx)}


def broken_circuits(m: Matroid, ordering=None) -> list[frozenset]:
    pos = _order_positions(m, ordering)
    return [c - {min(c, key=pos.__getitem__)} for c in circuits(m)]


def broken_circuit_h_vector(m: Matroid, ordering=None) -> tuple[int, ...]:
    if m.loops():
        raise LoopPresent(f"loops {m.labels_of(m.loops())}")
    bcs = broken_circuits(m, ordering)
    f = Counter(len(s) for s in _subsets(m.n) if not any(b <= s for b in bcs))
    return h_vector([f[i] for i in range(m.n + 1)], m.full_rank)


def independence_h_vector(m: Matroid) -> tuple[int, ...]:
    if m.loops():
        raise LoopPresent(f"loops {m.labels_of(m.loops())}")
    f = Counter(len(s) for s in _subsets(m.n) if m.is_independent(s))
    return h_vector([f[i] for i in range(m.n + 1)], m.full_rank)


def dual_rank_check(m: Matroid, dual: Matroid) -> bool:
    """``r*(S) = |S| - r(E) + r(E - S)`` on every subset."""
    e = frozenset(range(m.n))
    return all(dual.rank(s) == len(s) - m.full_rank + m.rank(e - s) for s in _subsets(m.n))
