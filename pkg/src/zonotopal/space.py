"""Linear spaces ``(E, V, L)`` with ``V = F^E`` and ``L`` a row space.

The coordinate trivialization is the standard basis of ``F^E``: the vector
``v_e`` is the e-th unit vector, so the functional ``chi_e`` on ``L`` is simply
the e-th coordinate.  A space stores an RREF basis of ``L``; a point of ``L``
is written ``t @ basis`` and ``t`` (read off the pivot columns) gives its
coordinates, which are also the variables ``x_1..x_r`` of ``Sym L*``.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DisconnectedGraph, EmptyL, RankDeficient, UnknownLabel
from .exact import Mat, Rat, kernel_basis, rat, row_basis

__all__ = [
    "LinearSpace",
    "ElementaryVector",
    "make",
    "gale_dual",
    "localization",
    "contraction",
    "elementary_vectors",
    "rho",
    "from_graph",
]


@dataclass(frozen=True)
class LinearSpace:
    labels: tuple[str, ...]
    basis: Mat
    pivots: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def r(self) -> int:
        return self.basis.nrows

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise UnknownLabel(label) from None

    def indices(self, labels: Iterable) -> list[int]:
        return sorted({self.index(x) for x in labels})

    def chi(self, e: int) -> tuple[Rat, ...]:
        """The coordinate functional ``chi_e`` as a linear form in ``x_1..x_r``."""
        return self.basis.col(e)

    def coords(self, vec: Sequence[Rat]) -> tuple[Rat, ...]:
        """Coordinates ``t`` of a vector of ``L`` with respect to the stored basis."""
        return tuple(vec[p] for p in self.pivots)

    def vector(self, t: Sequence) -> tuple[Rat, ...]:
        t = [rat(x) for x in t]
        return tuple(sum((t[i] * self.basis[i, j] for i in range(self.r)), Rat(0))
                     for j in range(self.n))

    def __repr__(self) -> str:
        return f"LinearSpace(labels={list(self.labels)}, r={self.r})"


@dataclass(frozen=True)
class ElementaryVector:
    coeffs: tuple[Rat, ...]
    support: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.support)


def make(labels: Sequence, rows) -> LinearSpace:
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct")
    m = rows if isinstance(rows, Mat) else Mat.from_rows(rows, ncols=len(labels))
    if m.ncols != len(labels):
        raise ValueError(f"{m.ncols} columns but {len(labels)} labels")
    basis, piv = row_basis(m)
    if basis.nrows != m.nrows:
        raise RankDeficient(f"rows have rank {basis.nrows} < {m.nrows}")
    return LinearSpace(labels, basis, piv)


def _from_spanning(labels: Sequence[str], m: Mat) -> LinearSpace:
    basis, piv = row_basis(m)
    return LinearSpace(tuple(labels), basis, piv)


@lru_cache(maxsize=None)
def gale_dual(a: LinearSpace) -> LinearSpace:
    return _from_spanning(a.labels, kernel_basis(a.basis))


def localization(a: LinearSpace, s: Iterable) -> LinearSpace:
    """Projection ``L_S`` of ``L`` onto the coordinates in ``s``."""
    idx = a.indices(s)
    return _from_spanning([a.labels[i] for i in idx], a.basis.columns(idx))


def contraction(a: LinearSpace, s: Iterable) -> LinearSpace:
    """``L`` intersected with the coordinate subspace away from ``s``, on ``E - s``."""
    idx = a.indices(s)
    rest = [j for j in range(a.n) if j not in set(idx)]
    labels = [a.labels[j] for j in rest]
    if not idx:
        return a
    # t with t . basis vanishing on s
    ts = kernel_basis(a.basis.columns(idx).transpose())
    vecs = (ts @ a.basis).columns(rest) if ts.nrows else Mat(0, len(rest), ())
    return _from_spanning(labels, vecs)


def _normalized(vec: Sequence[Rat]) -> tuple[Rat, ...]:
    lead = next(x for x in vec if x)
    return tuple(x / lead for x in vec)


@lru_cache(maxsize=None)
def elementary_vectors(a: LinearSpace) -> tuple[ElementaryVector, ...]:
    """One normalized minimal-support vector of ``L`` per circuit of the dual matroid."""
    from .matroid import circuits, matroid_of

    if a.r == 0:
        return ()
    out = []
    for c in circuits(matroid_of(gale_dual(a))):
        off = [j for j in range(a.n) if j not in c]
        ts = kernel_basis(a.basis.columns(off).transpose())
        assert ts.nrows == 1, "circuit of the dual should cut out a line of L"
        vec = _normalized(a.vector(ts.row(0)))
        support = tuple(j for j, x in enumerate(vec) if x)
        assert set(support) == set(c)
        out.append(ElementaryVector(vec, support))
    out.sort(key=lambda ev: ev.support)
    return tuple(out)


def rho(a: LinearSpace) -> int:
    if a.r == 0:
        raise EmptyL("rho is undefined when L = 0")
    return min(ev.m for ev in elementary_vectors(a))


def from_graph(edges: Sequence[tuple], mode: str = "cographical") -> LinearSpace:
    """Cycle space (cographical) or cut space (graphical) of an oriented graph.

    ``edges`` is a sequence of ``(tail, head, label)``.  Each edge contributes
    ``head - tail`` to the boundary map; loops contribute nothing, so they are
    cycles on their own.
    """
    if mode not in ("graphical", "cographical"):
        raise ValueError(f"unknown mode {mode!r}")
    labels = [str(lab) for _, _, lab in edges]
    verts: list = []
    seen = set()
    for t, h, _ in edges:
        for v in (t, h):
            if v not in seen:
                seen.add(v)
                verts.append(v)
    _check_connected(verts, edges)
    vi = {v: i for i, v in enumerate(verts)}
    inc = [[0] * len(edges) for _ in verts]
    for j, (t, h, _) in enumerate(edges):
        if t != h:
            inc[vi[t]][j] -= 1
            inc[vi[h]][j] += 1
    cycles = kernel_basis(Mat.from_rows(inc, ncols=len(edges)))
    a = _from_spanning(labels, cycles)
    return a if mode == "cographical" else gale_dual(a)


def _check_connected(verts, edges) -> None:
    if not verts:
        return
    adj = defaultdict(set)
    for t, h, _ in edges:
        adj[t].add(h)
        adj[h].add(t)
    seen = {verts[0]}
    todo = deque([verts[0]])
    while todo:
        v = todo.popleft()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    if len(seen) != len(verts):
        raise DisconnectedGraph(f"{len(verts) - len(seen)} vertices unreachable")


def supports_brute_force(a: LinearSpace) -> list[tuple[int, ...]]:
    """Minimal supports of nonzero vectors of ``L`` by checking every subset.

    A subset ``S`` carries a vector of ``L`` supported inside it iff the
    subspace ``L cap V_S`` is nonzero; minimal such ``S`` are the supports of
    elementary vectors.  Used as an independent oracle in tests.
    """
    carrying = []
    for size in range(1, a.n + 1):
        for s in combinations(range(a.n), size):
            if any(set(c) <= set(s) for c in carrying):
                continue
            off = [j for j in range(a.n) if j not in s]
            if a.r and kernel_basis(a.basis.columns(off).transpose()).nrows:
                carrying.append(s)
    return sorted(carrying)
