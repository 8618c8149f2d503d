"""Inverse systems ``C_{A,k}`` and Hilbert functions of zonotopal algebras.

``C_{A,k}`` is computed slice by slice as the common kernel of the operators
``alpha^(m(alpha)+k+1)`` for the elementary vectors ``alpha`` of ``L``, in
the coordinates ``x_1..x_r`` dual to the stored basis of ``L``.  Indices
k = -2, -1, 0 give the internal, central and external algebras.
"""
from __future__ import annotations

import random
from functools import lru_cache

from .apolarity import GradedSubspace, annihilator_degree, apply_power, sym_dim
from .errors import AuditFailure, CostGuard, KOutOfRange
from .matroid import counts, flats, matroid_of
from .report import Check, Report
from .space import LinearSpace, elementary_vectors, gale_dual, rho

__all__ = [
    "KIND_K",
    "check_k",
    "inverse_system",
    "hilbert",
    "degree_cap",
    "total_checks",
    "random_alpha_audit",
    "deformed_internal_dims",
    "deformed_internal",
]

KIND_K = {"internal": -2, "central": -1, "external": 0}


def check_k(a: LinearSpace, k: int) -> None:
    if k > 0:
        raise KOutOfRange(f"k={k}: only k <= 0 is supported")
    if a.r and k < -(rho(a) + 1):
        raise KOutOfRange(f"k={k} < -(rho+1) = {-(rho(a) + 1)}")


def degree_cap(a: LinearSpace, k: int) -> int:
    return a.r * (a.n + k + 1)


def constraints(a: LinearSpace, k: int) -> list[tuple[tuple, int]]:
    return [(a.coords(ev.coeffs), ev.m + k + 1) for ev in elementary_vectors(a)]


@lru_cache(maxsize=None)
def inverse_system(a: LinearSpace, k: int) -> GradedSubspace:
    check_k(a, k)
    cons = constraints(a, k)
    cap = degree_cap(a, k)
    slices = []
    for d in range(cap + 2):
        s = annihilator_degree(cons, d, a.r)
        if s.nrows == 0:
            break
        slices.append(s)
    else:
        raise RuntimeError(f"inverse system did not vanish below the degree cap {cap}")
    return GradedSubspace(a.r, tuple(slices))


def hilbert(a: LinearSpace, k: int) -> tuple[int, ...]:
    return inverse_system(a, k).dims


def total_checks(a: LinearSpace) -> Report:
    dual = matroid_of(gale_dual(a))
    nb, _, ns = counts(dual)
    if dual.loops():
        internal = 0
    else:
        lat = flats(dual)
        internal = abs(lat.mobius_to_top[frozenset()])
    sides = [
        ("internal total = |mu(0,E)|", sum(hilbert(a, -2)), internal),
        ("central total = bases", sum(hilbert(a, -1)), nb),
        ("external total = spanning sets", sum(hilbert(a, 0)), ns),
    ]
    return Report("totals", tuple(Check(name, l == r, l, r) for name, l, r in sides))


def random_alpha_audit(a: LinearSpace, k: int, trials: int = 100, seed: int = 0) -> bool:
    """Check random (typically non-minimal) ``alpha`` against ``inverse_system(a, k)``.

    Raises :class:`AuditFailure` on the first violation.
    """
    cs = inverse_system(a, k)
    if a.r == 0:
        return True
    rng = random.Random(seed)
    polys = [(d, f) for d in range(len(cs.slices)) for f in cs.basis_polys(d)]
    for _ in range(trials):
        t = [0] * a.r
        while not any(t):
            t = [rng.randint(-3, 3) for _ in range(a.r)]
        alpha = a.vector(t)
        p = sum(1 for x in alpha if x) + k + 1
        for d, f in polys:
            if p <= d and apply_power(t, p, f):
                raise AuditFailure(alpha, f, d)
    return True


def deformed_internal_dims(a: LinearSpace, d_max: int) -> tuple[int, ...]:
    """Dimensions of the deformation of ``P_-`` inside ``Sym V*``, degrees ``0..d_max``."""
    if d_max > 8:
        raise CostGuard(f"d_max={d_max} > 8")
    cons = [(ev.coeffs, ev.m - 1) for ev in elementary_vectors(a)]
    return tuple(annihilator_degree(cons, d, a.n).nrows for d in range(d_max + 1))


def deformed_internal(a: LinearSpace, d_max: int) -> Report:
    """Compare the deformation's dimensions with ``P_- (x) Sym L-perp``."""
    dims = deformed_internal_dims(a, d_max)
    pm = hilbert(a, -2)
    s = a.n - a.r
    expect = tuple(
        sum(pm[i] * sym_dim(s, d - i) for i in range(min(d, len(pm) - 1) + 1)) if pm else 0
        for d in range(d_max + 1)
    )
    checks = tuple(Check(f"deg {d}", x == y, x, y) for d, (x, y) in enumerate(zip(dims, expect)))
    return Report("free module over Sym L-perp", checks)
