"""Circuit forms, the ideals K, J and J-minus of ``Sym L*``, and the direct-sum checks.

Every ideal is handled one degree at a time: its degree-``d`` piece is the
span of all generator-times-monomial products, reduced to RREF.  Pushing a
polynomial in the ``w_e`` (coordinates of ``V*``) down to ``Sym L*`` means
substituting ``w_e -> chi_e``, the restriction of the coordinate to ``L``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebras import hilbert, inverse_system
from .apolarity import (
    GradedSubspace,
    Poly,
    apolar_complement,
    ideal_degree_piece,
    linear_form,
    poly_degree,
    poly_mul,
    poly_pow,
    substitute_linear,
    sym_dim,
    to_vector,
)
from .errors import LoopPresent
from .exact import Mat, Rat, rank, reduce_against, solve, stack
from .matroid import broken_circuit_h_vector, broken_circuits, circuits, matroid_of
from .report import Check, Report
from .space import ElementaryVector, LinearSpace, elementary_vectors, gale_dual

__all__ = [
    "CircuitForm",
    "circuit_form",
    "K_generators",
    "K_slices",
    "otbar_hilbert",
    "bc_hilbert_oracle",
    "J_slices",
    "srbar_hilbert",
    "Jminus_slices",
    "direct_sum_report",
    "verify_internal",
    "verify_central",
    "verify_hr_internal",
    "dual_system_check",
    "ot_iso_witness",
]


@dataclass(frozen=True)
class CircuitForm:
    alpha: ElementaryVector
    coeffs: Poly  # in the n variables w_e of Sym V*


def circuit_form(alpha: ElementaryVector) -> CircuitForm:
    """``h_alpha = sum_e alpha_e * prod_{f != e} w_f`` over the support of ``alpha``."""
    if not alpha.support:
        raise ValueError("elementary vectors have nonempty support")
    n = len(alpha.coeffs)
    supp = set(alpha.support)
    out: Poly = {}
    for e in alpha.support:
        mono = tuple(int(f in supp and f != e) for f in range(n))
        out[mono] = alpha.coeffs[e]
    return CircuitForm(alpha, out)


def _chi_forms(a: LinearSpace) -> list[Poly]:
    return [linear_form(a.chi(e)) for e in range(a.n)]


def K_generators(a: LinearSpace) -> list[Poly]:
    """Images of the circuit forms in ``Sym L*``, zeros dropped."""
    chis = _chi_forms(a)
    gens = [substitute_linear(circuit_form(ev).coeffs, chis, a.r) for ev in elementary_vectors(a)]
    return [g for g in gens if g]


def _chi_monomial(a: LinearSpace, s: Iterable[int], chis: Sequence[Poly]) -> Poly:
    out: Poly = {(0,) * a.r: Rat(1)}
    for e in s:
        out = poly_mul(out, chis[e])
    return out


def _finite_colength(gens: list[Poly], nvars: int, min_top: int, cap: int) -> GradedSubspace:
    """Ideal slices up to the first degree where the ideal is everything (and at least ``min_top``)."""
    slices = []
    d = 0
    while True:
        piece = ideal_degree_piece(gens, d, nvars)
        slices.append(piece)
        if piece.nrows == sym_dim(nvars, d) and d >= min_top:
            break
        d += 1
        if d > cap:
            raise RuntimeError(f"ideal still has nonzero quotient past degree {cap}")
    return GradedSubspace(nvars, tuple(slices), full_tail=True)


def _extent(a: LinearSpace, gens: list[Poly], k: int) -> tuple[int, int]:
    top = len(inverse_system(a, k).slices) - 1
    gdeg = max((poly_degree(g) for g in gens), default=0)
    return max(top, 0) + gdeg, a.n + gdeg + 2


def K_slices(a: LinearSpace) -> GradedSubspace:
    gens = K_generators(a)
    return _finite_colength(gens, a.r, *_extent(a, gens, -2))


def otbar_hilbert(a: LinearSpace) -> tuple[int, ...]:
    """Hilbert function of ``Sym L* / K``."""
    return K_slices(a).codims()


def _dual_matroid(a: LinearSpace):
    return matroid_of(gale_dual(a))


def bc_hilbert_oracle(a: LinearSpace, ordering=None) -> tuple[int, ...]:
    """h-vector of the broken circuit complex of the dual matroid."""
    return broken_circuit_h_vector(_dual_matroid(a), ordering)


def J_slices(a: LinearSpace) -> GradedSubspace:
    """Ideal generated by ``chi_C`` for the circuits ``C`` of the dual matroid."""
    chis = _chi_forms(a)
    gens = [_chi_monomial(a, c, chis) for c in circuits(_dual_matroid(a))]
    return _finite_colength(gens, a.r, *_extent(a, gens, -1))


def srbar_hilbert(a: LinearSpace) -> tuple[int, ...]:
    return J_slices(a).codims()


def Jminus_slices(a: LinearSpace, ordering=None) -> GradedSubspace:
    """Ideal generated by ``chi_{C - min C}`` over circuits ``C`` of the dual matroid."""
    dual = _dual_matroid(a)
    if dual.loops():
        raise LoopPresent(f"dual matroid has loops {dual.labels_of(dual.loops())}")
    chis = _chi_forms(a)
    gens = [_chi_monomial(a, sorted(b), chis) for b in broken_circuits(dual, ordering)]
    return _finite_colength(gens, a.r, *_extent(a, gens, -2))


def _pivots(m: Mat) -> list[int]:
    return [next(j for j, x in enumerate(row) if x) for row in m.data]


def direct_sum_report(title: str, sub: GradedSubspace, ideal: GradedSubspace,
                      top: int | None = None) -> Report:
    """Per-degree check that ``sub`` is a complement of ``ideal`` in the polynomial ring.

    Three tests per degree: dimensions add up, the two pieces meet only in 0,
    and ``sub`` maps with full rank into the quotient by ``ideal``.
    """
    nv = sub.nvars
    if top is None:
        top = max(len(sub.slices), len(ideal.slices))
    checks = []
    for d in range(top + 1):
        p, i = sub[d], ideal[d]
        n = sym_dim(nv, d)
        checks.append(Check(f"deg {d} dim", p.nrows + i.nrows == n, p.nrows + i.nrows, n))
        both = rank(stack([p, i], ncols=n)) if p.nrows and i.nrows else p.nrows + i.nrows
        checks.append(Check(f"deg {d} meet", both == p.nrows + i.nrows, both, p.nrows + i.nrows))
        piv = _pivots(i)
        red = [reduce_against(row, i, piv) for row in p.data]
        rk = rank(Mat.from_rows(red, ncols=n)) if red else 0
        checks.append(Check(f"deg {d} into quotient", rk == p.nrows, rk, p.nrows))
    return Report(title, tuple(checks))


def verify_internal(a: LinearSpace) -> Report:
    return direct_sum_report("P_- + K", inverse_system(a, -2), K_slices(a))


def verify_central(a: LinearSpace) -> Report:
    return direct_sum_report("P + J", inverse_system(a, -1), J_slices(a))


def default_orderings(a: LinearSpace, count: int = 3, seed: int = 0) -> list[tuple[str, ...]]:
    """Input order, reversed order, then seeded shuffles."""
    labels = list(a.labels)
    out = [tuple(labels), tuple(reversed(labels))]
    rng = random.Random(seed)
    while len(out) < count:
        perm = labels[:]
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out


def verify_hr_internal(a: LinearSpace, orderings=None) -> Report:
    """``P_-`` against ``J_-`` for each ordering (at least three by default)."""
    if _dual_matroid(a).loops():
        raise LoopPresent("J_- needs a loopless dual matroid")
    if orderings is None:
        orderings = default_orderings(a)
    sub = inverse_system(a, -2)
    checks = []
    for order in orderings:
        rep = direct_sum_report("", sub, Jminus_slices(a, order))
        tag = " ".join(str(x) for x in order)
        checks.extend(Check(f"[{tag}] {c.name}", c.passed, c.lhs, c.rhs) for c in rep.checks)
    return Report("P_- + J_-", tuple(checks))


def _power_ideal(a: LinearSpace, k: int, d: int) -> Mat:
    """Degree-``d`` piece of ``<alpha^(m+k+1)>`` in ``Sym L``."""
    gens = [poly_pow(linear_form(a.coords(ev.coeffs)), ev.m + k + 1, a.r)
            for ev in elementary_vectors(a)]
    return ideal_degree_piece(gens, d, a.r)


def dual_system_check(a: LinearSpace) -> Report:
    """Annihilators of K and J inside ``Sym L`` against the zonotopal quotients.

    The annihilator of each ideal slice must have the dimension of the matching
    quotient of ``Sym L`` and must meet the defining ideal trivially, so that
    it maps isomorphically onto the quotient.
    """
    ks, js = K_slices(a), J_slices(a)
    top = max(len(ks.slices), len(js.slices))
    checks = []
    for name, ideal, k in (("E", ks, -2), ("D", js, -1)):
        dims = []
        for d in range(top + 1):
            n = sym_dim(a.r, d)
            ann = apolar_complement(ideal[d], a.r, d)
            zon = _power_ideal(a, k, d)
            q = n - zon.nrows
            dims.append(ann.nrows)
            checks.append(Check(f"{name} deg {d} dim", ann.nrows == q, ann.nrows, q))
            both = rank(stack([ann, zon], ncols=n)) if ann.nrows and zon.nrows else ann.nrows + zon.nrows
            checks.append(Check(f"{name} deg {d} meet", both == ann.nrows + zon.nrows, both,
                                 ann.nrows + zon.nrows))
        while dims and dims[-1] == 0:
            dims.pop()
        checks.append(Check(f"{name} dims", tuple(dims) == hilbert(a, k), tuple(dims), hilbert(a, k)))
    return Report("dual systems", tuple(checks))


def ot_iso_witness(a: LinearSpace, d: int, source: Sequence[Poly] | None = None,
                   target: Sequence[Poly] | None = None) -> Mat:
    """Matrix of ``P_-^d -> Sym^d L* / K^d``.

    Columns follow ``source`` (default: the stored basis of ``P_-^d``), rows
    follow ``target``, a list of polynomials whose classes form a basis of the
    quotient (default: the monomials off the pivots of ``K^d``).
    """
    if _dual_matroid(a).loops():
        raise LoopPresent("the witness needs a loopless dual matroid")
    n = sym_dim(a.r, d)
    pm = inverse_system(a, -2)[d]
    kd = K_slices(a)[d]
    piv = _pivots(kd)
    if source is None:
        src = [list(row) for row in pm.data]
    else:
        src = [to_vector(f, a.r, d) for f in source]
        if src and rank(stack([pm, Mat.from_rows(src, ncols=n)], ncols=n)) != pm.nrows:
            raise ValueError("source polynomials do not lie in P_-")
    if target is None:
        off = [j for j in range(n) if j not in set(piv)]
        tgt = [[Rat(int(j == c)) for j in range(n)] for c in off]
    else:
        tgt = [reduce_against(to_vector(f, a.r, d), kd, piv) for f in target]
    if len(tgt) != n - kd.nrows:
        raise ValueError(f"target has {len(tgt)} elements, quotient has dimension {n - kd.nrows}")
    if not tgt:
        return Mat(0, len(src), ())
    tmat = Mat.from_rows(tgt, ncols=n).transpose()
    cols = [solve(tmat, reduce_against(v, kd, piv)) for v in src]
    if not cols:
        return Mat(len(tgt), 0, tuple(() for _ in tgt))
    return Mat.from_rows(zip(*cols), ncols=len(cols))
