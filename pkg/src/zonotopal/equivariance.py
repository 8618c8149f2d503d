"""Monomial automorphisms of a linear space and their traces on graded pieces.

An automorphism sends ``v_e`` to ``scalars[e] * v_{perm[e]}``.  It acts on
``L`` by right multiplication of coordinate rows, and on ``L*`` by pullback:
``(g.f)(v) = f(v.g)``, so a uniform scalar ``lam`` acts on ``L*`` as ``lam``.
The action extends multiplicatively to ``Sym L*``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .algebras import KIND_K, degree_cap, inverse_system
from .apolarity import linear_form, monomials, substitute_linear, sym_dim, to_vector
from .errors import DegreeOutOfRange, NotAutomorphism
from .exact import Mat, Rat, coordinates, rat, reduce_against, row_space_equal
from .orlik_terao import K_slices, otbar_hilbert
from .report import Check, Report
from .space import LinearSpace

__all__ = [
    "AutoElem",
    "check_auto",
    "action_on_Lstar",
    "sym_action",
    "char_on",
    "inverse",
    "verify_equivariant_internal",
    "WHICH",
]

WHICH = {"Pminus": -2, "Pcentral": -1, "Pplus": 0, "OTbar": None}


@dataclass(frozen=True)
class AutoElem:
    perm: tuple[int, ...]      # e -> perm[e], by index
    scalars: tuple[Rat, ...]

    @classmethod
    def from_labels(cls, a: LinearSpace, perm: Mapping | None = None,
                    scalars: Mapping | None = None) -> "AutoElem":
        """Build from label maps; labels missing from ``perm`` are fixed, missing scalars are 1."""
        p = list(range(a.n))
        for x, y in (perm or {}).items():
            p[a.index(x)] = a.index(y)
        if sorted(p) != list(range(a.n)):
            raise ValueError("perm is not a bijection of the ground set")
        s = [Rat(1)] * a.n
        for x, c in (scalars or {}).items():
            c = rat(c)
            if not c:
                raise ValueError("scalars must be nonzero")
            s[a.index(x)] = c
        return cls(tuple(p), tuple(s))

    @classmethod
    def identity(cls, n: int) -> "AutoElem":
        return cls(tuple(range(n)), (Rat(1),) * n)

    @classmethod
    def scalar(cls, n: int, lam) -> "AutoElem":
        return cls(tuple(range(n)), (rat(lam),) * n)

    def matrix(self) -> Mat:
        n = len(self.perm)
        rows = [[Rat(0)] * n for _ in range(n)]
        for e, f in enumerate(self.perm):
            rows[e][f] = self.scalars[e]
        return Mat.from_rows(rows, ncols=n)


def inverse(g: AutoElem) -> AutoElem:
    n = len(g.perm)
    p = [0] * n
    s = [Rat(1)] * n
    for e, f in enumerate(g.perm):
        p[f] = e
        s[f] = 1 / g.scalars[e]
    return AutoElem(tuple(p), tuple(s))


def check_auto(a: LinearSpace, g: AutoElem) -> bool:
    if len(g.perm) != a.n:
        return False
    if a.r == 0:
        return True
    return row_space_equal(a.basis @ g.matrix(), a.basis)


def action_on_Lstar(a: LinearSpace, g: AutoElem) -> Mat:
    """``M`` with ``g.x_i = sum_j M[j, i] x_j`` in the coordinates of ``Sym L*``."""
    if not check_auto(a, g):
        raise NotAutomorphism("map does not preserve L")
    moved = a.basis @ g.matrix()
    return moved.columns(a.pivots)


def sym_action(m: Mat, d: int) -> Mat:
    """Induced map on degree-``d`` polynomials; column ``j`` is the image of monomial ``j``."""
    nv = m.nrows
    images = [linear_form(m.col(i)) for i in range(nv)]
    cols = [to_vector(substitute_linear({mono: Rat(1)}, images, nv), nv, d)
            for mono in monomials(nv, d)]
    if not cols:
        return Mat(0, 0, ())
    return Mat.from_rows(zip(*cols), ncols=len(cols))


def _image(act: Mat, vec) -> list[Rat]:
    out = [Rat(0)] * act.nrows
    for j, x in enumerate(vec):
        if x:
            for i in range(act.nrows):
                y = act.data[i][j]
                if y:
                    out[i] += x * y
    return out


def char_on(a: LinearSpace, g: AutoElem, which: str, d: int) -> Rat:
    """Trace of ``g`` on the degree-``d`` piece of ``P_-``, ``P``, ``P_+`` or ``Sym L* / K``."""
    if which not in WHICH:
        raise ValueError(f"unknown space {which!r}; expected one of {sorted(WHICH)}")
    m = action_on_Lstar(a, g)
    k = WHICH[which]
    cap = degree_cap(a, -2 if k is None else k)
    if d < 0 or d > cap:
        raise DegreeOutOfRange(f"degree {d} outside 0..{cap}")
    act = sym_action(m, d)
    if k is not None:
        piece = inverse_system(a, k)[d]
        piv = [next(j for j, x in enumerate(row) if x) for row in piece.data]
        total = Rat(0)
        for i, row in enumerate(piece.data):
            total += coordinates(_image(act, row), piece, piv)[i]
        return total
    kd = K_slices(a)[d]
    piv = [next(j for j, x in enumerate(row) if x) for row in kd.data]
    total = Rat(0)
    for j in range(sym_dim(a.r, d)):
        if j in piv:
            continue
        unit = [Rat(int(i == j)) for i in range(sym_dim(a.r, d))]
        total += reduce_against(_image(act, unit), kd, piv)[j]
    return total


def verify_equivariant_internal(a: LinearSpace, g: AutoElem) -> Report:
    """Traces on ``P_-`` and on ``Sym L* / K`` agree in every degree."""
    if not check_auto(a, g):
        raise NotAutomorphism("map does not preserve L")
    top = max(len(inverse_system(a, KIND_K["internal"]).slices), len(otbar_hilbert(a)))
    top = min(top, degree_cap(a, -2))
    checks = []
    for d in range(top + 1):
        x, y = char_on(a, g, "Pminus", d), char_on(a, g, "OTbar", d)
        checks.append(Check(f"deg {d} trace", x == y, x, y))
    return Report("equivariant P_- = OTbar", tuple(checks))
