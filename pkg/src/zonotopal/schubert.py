"""Flat strata, boundary divisors, Betti tables and Euler characteristic identities.

All geometric quantities are reached through combinatorics: strata are flats
of ``M_A``, section spaces are measured by ``C_{A,k}``, and the Betti table
is indexed by flats of the dual matroid.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebras import check_k, hilbert
from .errors import LoopPresent
from .exact import row_space_equal
from .matroid import counts, flats, matroid_of
from .report import Check, Report
from .space import ElementaryVector, LinearSpace, elementary_vectors, gale_dual, localization

__all__ = [
    "Stratum",
    "strata",
    "strata_report",
    "DivisorEntry",
    "DivisorData",
    "divisor",
    "h0_dim",
    "BettiEntry",
    "BettiTable",
    "betti_table",
    "betti_json",
    "euler_identity",
    "graded_euler_sides",
    "graded_euler",
    "laurent_str",
]


@dataclass(frozen=True)
class Stratum:
    flat: tuple[str, ...]
    dim: int


def strata(a: LinearSpace) -> list[Stratum]:
    """One stratum per flat ``F`` of ``M_A``, of dimension ``dim L_F``."""
    m = matroid_of(a)
    out = []
    for f in flats(m).flats:
        labels = tuple(a.labels[i] for i in sorted(f))
        out.append(Stratum(labels, localization(a, labels).r))
    return out


def strata_report(a: LinearSpace) -> Report:
    """Closure order against flat containment.

    For flats ``F < G`` the projection of ``L_G`` onto ``F`` must be ``L_F``,
    and the dimension must drop strictly; the top stratum has dimension ``r``.
    """
    st = strata(a)
    checks = [Check("top stratum dim = r", max(s.dim for s in st) == a.r, max(s.dim for s in st), a.r),
              Check("strata = flats", len(st) == len(flats(matroid_of(a)).flats), len(st),
                    len(flats(matroid_of(a)).flats))]
    ok = True
    for small in st:
        for big in st:
            if set(small.flat) < set(big.flat):
                proj = localization(localization(a, big.flat), small.flat)
                own = localization(a, small.flat)
                if small.dim >= big.dim or not row_space_equal(proj.basis, own.basis):
                    ok = False
    checks.append(Check("closure order = flat order", ok, ok, True))
    return Report("strata", tuple(checks))


@dataclass(frozen=True)
class DivisorEntry:
    flat: tuple[str, ...]
    alpha: ElementaryVector
    m: int
    coeff: int


@dataclass(frozen=True)
class DivisorData:
    entries: tuple[DivisorEntry, ...]


def divisor(a: LinearSpace, k: int) -> DivisorData:
    """Corank-one flats ``F`` of ``M_A`` with the line of ``L`` supported off ``F``."""
    m = matroid_of(a)
    by_support = {frozenset(ev.support): ev for ev in elementary_vectors(a)}
    out = []
    for f in flats(m).flats:
        if m.corank(f) != 1:
            continue
        ev = by_support[frozenset(range(a.n)) - f]
        out.append(DivisorEntry(tuple(a.labels[i] for i in sorted(f)), ev, ev.m, ev.m + k))
    return DivisorData(tuple(out))


def h0_dim(a: LinearSpace, k: int) -> int:
    check_k(a, k)
    return sum(hilbert(a, k))


@dataclass(frozen=True)
class BettiEntry:
    i: int
    S: tuple[str, ...]
    mult: int


@dataclass(frozen=True)
class BettiTable:
    entries: tuple[BettiEntry, ...]

    def as_set(self) -> set[tuple[int, frozenset, int]]:
        return {(e.i, frozenset(e.S), e.mult) for e in self.entries}


def betti_table(a: LinearSpace) -> BettiTable:
    """Entries ``(i, S, mult)`` for ``E - S`` a flat of the dual matroid with ``mult > 0``."""
    dual = matroid_of(gale_dual(a))
    everything = frozenset(range(a.n))
    out = []
    for f in flats(dual).flats:
        s = sorted(everything - f)
        labels = tuple(a.labels[j] for j in s)
        mult = sum(hilbert(localization(a, labels), -2))
        if mult:
            out.append(BettiEntry(dual.corank(f), labels, mult))
    out.sort(key=lambda e: (e.i, [a.index(x) for x in e.S]))
    return BettiTable(tuple(out))


def betti_json(t: BettiTable) -> dict:
    return {"entries": [{"i": e.i, "S": list(e.S), "mult": e.mult} for e in t.entries]}


def _signed_expr(terms: list[int]) -> str:
    if not terms:
        return "0"
    out = str(terms[0])
    for x in terms[1:]:
        out += f" - {-x}" if x < 0 else f" + {x}"
    return out


def _require_loopless_dual(a: LinearSpace):
    dual = matroid_of(gale_dual(a))
    if dual.loops():
        raise LoopPresent(f"dual matroid has loops {dual.labels_of(dual.loops())}")
    return dual


def euler_identity(a: LinearSpace) -> Report:
    """Two routes to the number of spanning sets of the dual matroid.

    The Moebius sum over flats is compared with the spanning-set count, and
    the alternating Betti sum weighted by ``2^|E - S|`` with the total
    dimension of the external algebra.
    """
    dual = _require_loopless_dual(a)
    lat = flats(dual)
    mob = [lat.mobius_to_top[f] * 2 ** len(f) for f in reversed(lat.flats)]
    mob = [x for x in mob if x]
    spanning = counts(dual)[2]
    per_i: dict[int, int] = {}
    for e in betti_table(a).entries:
        per_i[e.i] = per_i.get(e.i, 0) + (-1) ** e.i * e.mult * 2 ** (a.n - len(e.S))
    betti = [per_i[i] for i in sorted(per_i)]
    ext = sum(hilbert(a, 0))
    return Report("euler", (
        Check("betti", sum(betti) == ext, sum(betti), ext, _signed_expr(betti)),
        Check("mobius", sum(mob) == spanning, sum(mob), spanning, _signed_expr(mob)),
    ))


Laurent = dict  # {exponent: int}


def _add(p: Laurent, q: Laurent, sign: int = 1) -> Laurent:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def graded_euler_sides(a: LinearSpace) -> tuple[Laurent, Laurent]:
    """``sum_S (-1)^c t^c P-_S(1/t) (1+t)^|E-S|`` and the Hilbert polynomial of the external algebra."""
    dual = _require_loopless_dual(a)
    everything = frozenset(range(a.n))
    lhs: Laurent = {}
    for f in flats(dual).flats:
        c = dual.corank(f)
        labels = [a.labels[j] for j in sorted(everything - f)]
        pm = hilbert(localization(a, labels), -2)
        term: Laurent = {}
        for j, h in enumerate(pm):
            for b in range(len(f) + 1):
                e = c - j + b
                term[e] = term.get(e, 0) + h * comb(len(f), b)
        lhs = _add(lhs, term, (-1) ** c)
    rhs = {j: h for j, h in enumerate(hilbert(a, 0)) if h}
    return lhs, rhs


def laurent_str(p: Laurent) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p):
        c = p[e]
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        if not mono:
            body = str(abs(c))
        else:
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def graded_euler(a: LinearSpace) -> Report:
    lhs, rhs = graded_euler_sides(a)
    return Report("graded euler", (
        Check("graded", lhs == rhs, laurent_str(lhs), laurent_str(rhs)),
    ))
