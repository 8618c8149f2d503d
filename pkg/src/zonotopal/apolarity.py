"""Graded pieces of polynomial rings and the differentiation action on them.

Polynomials are dicts ``{exponent tuple: Rat}``.  A homogeneous piece of
degree ``d`` in ``nvars`` variables is coordinatized by :func:`monomials`,
which lists exponents in graded-lex order (``x1^d`` first).  An operator
``alpha = sum a_i d/dx_i`` acts by plain partial differentiation, without
factorial normalization.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Sequence

from .errors import DegreeUnderflow
from .exact import Mat, Rat, kernel_basis, rat, row_basis, stack

Poly = dict  # {tuple[int, ...]: Rat}

__all__ = [
    "Poly",
    "GradedSubspace",
    "monomials",
    "mono_index",
    "sym_dim",
    "linear_form",
    "poly_mul",
    "poly_pow",
    "poly_add",
    "poly_scale",
    "poly_degree",
    "to_vector",
    "from_vector",
    "apply_operator",
    "apply_power",
    "pow_op_matrix",
    "ideal_degree_piece",
    "annihilator_degree",
    "apolar_complement",
    "substitute_linear",
]


@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> tuple[tuple[int, ...], ...]:
    if d < 0:
        return ()
    if nvars == 0:
        return ((),) if d == 0 else ()
    out = []
    for first in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def mono_index(nvars: int, d: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomials(nvars, d))}


def sym_dim(nvars: int, d: int) -> int:
    if d < 0:
        return 0
    if nvars == 0:
        return int(d == 0)
    return comb(d + nvars - 1, nvars - 1)


def linear_form(coeffs: Sequence) -> Poly:
    n = len(coeffs)
    out = {}
    for i, c in enumerate(coeffs):
        c = rat(c)
        if c:
            out[tuple(int(j == i) for j in range(n))] = c
    return out


def poly_add(f: Poly, g: Poly) -> Poly:
    out = dict(f)
    for m, c in g.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def poly_scale(f: Poly, c) -> Poly:
    c = rat(c)
    return {m: c * v for m, v in f.items()} if c else {}


def poly_mul(f: Poly, g: Poly) -> Poly:
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def poly_pow(f: Poly, p: int, nvars: int) -> Poly:
    out = {(0,) * nvars: Rat(1)}
    for _ in range(p):
        out = poly_mul(out, f)
    return out


def poly_degree(f: Poly) -> int | None:
    degs = {sum(m) for m in f}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError("polynomial is not homogeneous")
    return degs.pop()


def to_vector(f: Poly, nvars: int, d: int) -> list[Rat]:
    idx = mono_index(nvars, d)
    v = [Rat(0)] * len(idx)
    for m, c in f.items():
        v[idx[m]] += c
    return v


def from_vector(v: Sequence[Rat], nvars: int, d: int) -> Poly:
    return {m: c for m, c in zip(monomials(nvars, d), v) if c}


def apply_operator(alpha: Sequence, f: Poly) -> Poly:
    """``sum_i alpha_i * df/dx_i``."""
    out: dict = {}
    for i, a in enumerate(alpha):
        if not a:
            continue
        for m, c in f.items():
            if m[i]:
                mm = m[:i] + (m[i] - 1,) + m[i + 1:]
                out[mm] = out.get(mm, 0) + a * c * m[i]
    return {m: c for m, c in out.items() if c}


def apply_power(alpha: Sequence, p: int, f: Poly) -> Poly:
    for _ in range(p):
        if not f:
            break
        f = apply_operator(alpha, f)
    return f


def pow_op_matrix(alpha: Sequence, p: int, d: int, nvars: int) -> Mat:
    """Matrix of ``f -> alpha^p . f`` from degree ``d`` to degree ``d - p``.

    Rows index target monomials, columns index source monomials.
    """
    if p > d:
        raise DegreeUnderflow(f"p={p} > d={d}")
    alpha = [rat(a) for a in alpha]
    src = monomials(nvars, d)
    tgt = mono_index(nvars, d - p)
    cols = []
    for m in src:
        img = apply_power(alpha, p, {m: Rat(1)})
        col = [Rat(0)] * len(tgt)
        for mm, c in img.items():
            col[tgt[mm]] = c
        cols.append(col)
    if not cols:
        return Mat(len(tgt), 0, tuple(() for _ in tgt))
    return Mat(len(tgt), len(src), tuple(zip(*cols)))


def ideal_degree_piece(generators: Iterable[Poly], d: int, nvars: int) -> Mat:
    """RREF basis of the degree-``d`` piece of the ideal spanned by ``generators``.

    Generators are homogeneous polynomials; each is multiplied by every
    monomial of complementary degree.
    """
    rows = []
    for g in generators:
        dg = poly_degree(g)
        if dg is None or dg > d:
            continue
        for m in monomials(nvars, d - dg):
            rows.append(to_vector(poly_mul(g, {m: Rat(1)}), nvars, d))
    if not rows:
        return Mat(0, sym_dim(nvars, d), ())
    return row_basis(Mat.from_rows(rows, ncols=sym_dim(nvars, d)))[0]


def annihilator_degree(constraints: Iterable[tuple[Sequence, int]], d: int, nvars: int) -> Mat:
    """Degree-``d`` polynomials killed by every ``alpha^p`` in ``constraints``."""
    blocks = [pow_op_matrix(alpha, p, d, nvars) for alpha, p in constraints if p <= d]
    n = sym_dim(nvars, d)
    if not blocks:
        return Mat.identity(n)
    return kernel_basis(stack(blocks, ncols=n))


def apolar_complement(sub: Mat, nvars: int, d: int) -> Mat:
    """Operators of degree ``d`` pairing to zero with every row of ``sub``.

    With plain differentiation, ``d^b`` applied to ``x^a`` and evaluated at
    the origin gives ``a!`` when ``a == b`` and 0 otherwise, so the pairing
    matrix is diagonal.
    """
    n = sym_dim(nvars, d)
    if sub.nrows == 0:
        return Mat.identity(n)
    weights = [prod(factorial(e) for e in m) for m in monomials(nvars, d)]
    scaled = Mat.from_rows([[x * w for x, w in zip(row, weights)] for row in sub.data], ncols=n)
    return kernel_basis(scaled)


def substitute_linear(f: Poly, images: Sequence[Poly], nvars: int) -> Poly:
    """Replace variable ``i`` of ``f`` by the linear form ``images[i]``."""
    out: Poly = {}
    for m, c in f.items():
        term = {(0,) * nvars: c}
        for i, e in enumerate(m):
            if e:
                term = poly_mul(term, poly_pow(images[i], e, nvars))
        out = poly_add(out, term)
    return out


@dataclass(frozen=True)
class GradedSubspace:
    """Per-degree RREF bases of a graded subspace of a polynomial ring.

    ``slices[d]`` is the degree-``d`` piece.  Degrees past the stored top are
    zero, or everything when ``full_tail`` is set (ideals of finite colength).
    """

    nvars: int
    slices: tuple[Mat, ...]
    full_tail: bool = False

    def __getitem__(self, d: int) -> Mat:
        if 0 <= d < len(self.slices):
            return self.slices[d]
        if d >= 0 and self.full_tail:
            return Mat.identity(sym_dim(self.nvars, d))
        return Mat(0, sym_dim(self.nvars, d), ())

    def codims(self) -> tuple[int, ...]:
        """Quotient dimensions ``dim Sym^d - dim slice``, cut at the first zero."""
        out = []
        for d, s in enumerate(self.slices):
            q = sym_dim(self.nvars, d) - s.nrows
            if q == 0:
                break
            out.append(q)
        return tuple(out)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.nrows for s in self.slices)

    @property
    def total(self) -> int:
        return sum(self.dims)

    def basis_polys(self, d: int) -> list[Poly]:
        return [from_vector(row, self.nvars, d) for row in self[d].data]
