"""Exact rational matrices and Gauss-Jordan elimination.

Everything here works over ``gmpy2.mpq`` rationals (aliased ``Rat``); nothing
ever touches a float.  Matrices are immutable; the elimination routines copy
their input into plain lists and hand back fresh :class:`Mat` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

Rat = mpq

__all__ = [
    "Rat",
    "Mat",
    "rat",
    "rref",
    "rank",
    "kernel_basis",
    "row_space_equal",
    "row_space_contains",
    "reduce_against",
    "coordinates",
    "solve",
    "stack",
]


def rat(x) -> Rat:
    """Coerce an int, Fraction, mpq or a ``"p/q"`` string to a ``Rat``."""
    if type(x) is mpq:
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    if isinstance(x, str):
        try:
            return mpq(x.strip())
        except ValueError:
            raise ValueError(f"invalid rational {x!r}") from None
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class Mat:
    """Dense rational matrix stored as a tuple of row tuples."""

    nrows: int
    ncols: int
    data: tuple[tuple[Rat, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.nrows or any(len(r) != self.ncols for r in self.data):
            raise ValueError("matrix shape does not match its data")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "Mat":
        data = tuple(tuple(rat(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        return cls(len(data), ncols, data)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Mat":
        z = Rat(0)
        return cls(nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, tuple(tuple(Rat(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def entries(self) -> tuple[Rat, ...]:
        return tuple(x for row in self.data for x in row)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Rat:
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple[Rat, ...]:
        return self.data[i]

    def col(self, j: int) -> tuple[Rat, ...]:
        return tuple(row[j] for row in self.data)

    def tolist(self) -> list[list[Rat]]:
        return [list(r) for r in self.data]

    def transpose(self) -> "Mat":
        return Mat(self.ncols, self.nrows, tuple(zip(*self.data)) if self.nrows else
                   tuple(() for _ in range(self.ncols)))

    T = property(transpose)

    def columns(self, idx: Sequence[int]) -> "Mat":
        idx = list(idx)
        return Mat(self.nrows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.data))

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.transpose().data
        out = []
        for r in self.data:
            nz = [(k, x) for k, x in enumerate(r) if x]
            out.append(tuple(sum((x * c[k] for k, x in nz), Rat(0)) for c in cols))
        return Mat(self.nrows, other.ncols, tuple(out))

    def scale(self, c) -> "Mat":
        c = rat(c)
        return Mat(self.nrows, self.ncols, tuple(tuple(c * x for x in r) for r in self.data))

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.data)


def stack(mats: Sequence[Mat], ncols: int | None = None) -> Mat:
    """Stack matrices vertically."""
    if ncols is None:
        if not mats:
            raise ValueError("ncols is required when stacking nothing")
        ncols = mats[0].ncols
    rows: list[tuple[Rat, ...]] = []
    for m in mats:
        if m.ncols != ncols:
            raise ValueError("column counts differ")
        rows.extend(m.data)
    return Mat(len(rows), ncols, tuple(rows))


def _rref_lists(rows: list[list[Rat]], ncols: int, stop_at_full: bool = False):
    nr = len(rows)
    pivots: list[int] = []
    prow = 0
    for c in range(ncols):
        if prow == nr:
            break
        sel = None
        for i in range(prow, nr):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        piv = rows[prow]
        lead = piv[c]
        if lead != 1:
            inv = 1 / lead
            for j in range(c, ncols):
                if piv[j]:
                    piv[j] *= inv
        nz = [j for j in range(c, ncols) if piv[j]]
        for i in range(nr):
            if i == prow:
                continue
            ri = rows[i]
            f = ri[c]
            if f:
                for j in nz:
                    ri[j] -= f * piv[j]
        pivots.append(c)
        prow += 1
        if stop_at_full and prow == ncols:
            break
    return rows[:prow], pivots


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row-echelon form, keeping zero rows at the bottom.

    Returns the RREF (same shape as ``m``) and the strictly increasing pivot
    columns.
    """
    rows, piv = _rref_lists([list(r) for r in m.data], m.ncols)
    z = Rat(0)
    data = tuple(tuple(r) for r in rows) + tuple((z,) * m.ncols for _ in range(m.nrows - len(rows)))
    return Mat(m.nrows, m.ncols, data), tuple(piv)


def row_basis(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """RREF with the zero rows dropped."""
    rows, piv = _rref_lists([list(r) for r in m.data], m.ncols)
    return Mat(len(rows), m.ncols, tuple(tuple(r) for r in rows)), tuple(piv)


def rank(m: Mat) -> int:
    rows, _ = _rref_lists([list(r) for r in m.data], m.ncols, stop_at_full=True)
    return len(rows)


def kernel_basis(m: Mat) -> Mat:
    """Basis of the right null space, returned in RREF."""
    rows, piv = _rref_lists([list(r) for r in m.data], m.ncols, stop_at_full=True)
    n = m.ncols
    pivset = set(piv)
    free = [j for j in range(n) if j not in pivset]
    out = []
    for f in free:
        v = [Rat(0)] * n
        v[f] = Rat(1)
        for i, p in enumerate(piv):
            if rows[i][f]:
                v[p] = -rows[i][f]
        out.append(v)
    if not out:
        return Mat(0, n, ())
    krows, _ = _rref_lists(out, n)
    return Mat(len(krows), n, tuple(tuple(r) for r in krows))


def row_space_equal(a: Mat, b: Mat) -> bool:
    if a.ncols != b.ncols:
        raise ValueError("row_space_equal needs equal column counts")
    return row_basis(a)[0] == row_basis(b)[0]


def reduce_against(vec: Sequence[Rat], basis: Mat, pivots: Sequence[int]) -> list[Rat]:
    """Reduce ``vec`` modulo the row space of an RREF ``basis``.

    The result vanishes on every pivot column, so its remaining entries are
    coordinates in the quotient by the row space.
    """
    v = list(vec)
    for i, p in enumerate(pivots):
        f = v[p]
        if f:
            for j, x in enumerate(basis.data[i]):
                if x:
                    v[j] -= f * x
    return v


def row_space_contains(basis: Mat, pivots: Sequence[int], vec: Sequence[Rat]) -> bool:
    return not any(reduce_against(vec, basis, pivots))


def coordinates(vec: Sequence[Rat], basis: Mat, pivots: Sequence[int]) -> list[Rat]:
    """Coordinates of ``vec`` in an RREF ``basis``; raises if ``vec`` is outside its span."""
    coords = [vec[p] for p in pivots]
    if any(reduce_against(vec, basis, pivots)):
        raise ValueError("vector does not lie in the row space")
    return coords


def solve(a: Mat, b: Sequence) -> list[Rat]:
    """The unique ``x`` with ``a @ x = b``; raises if there is none or more than one."""
    if len(b) != a.nrows:
        raise ValueError("right-hand side has the wrong length")
    aug = [list(row) + [rat(y)] for row, y in zip(a.data, b)]
    rows, piv = _rref_lists(aug, a.ncols + 1)
    if piv and piv[-1] == a.ncols:
        raise ValueError("inconsistent linear system")
    if len(piv) < a.ncols:
        raise ValueError("linear system has no unique solution")
    return [rows[i][a.ncols] for i in range(a.ncols)]
