"""Exact rational scalars and dense linear algebra over Q.

Scalars are :class:`fractions.Fraction`, which is always stored reduced with a
positive denominator, so equality is structural.  Determinant and rank use
fraction-free (Bareiss) elimination on integer rows: every row is first
multiplied by the lcm of its denominators, which changes the determinant by a
known factor and the rank not at all.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DimensionError, RankError

Scalar = Fraction


def scalar(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Scalar.

    Floats are rejected: a float has already lost exactness.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")


def vector(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(scalar(x) for x in xs)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


class Mat:
    """Immutable dense matrix of Scalars, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(scalar(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Mat:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> Mat:
        return Mat(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for j in range(other.cols):
                    out.append(sum((r[k] * other[k, j] for k in range(self.cols)), Fraction(0)))
            return Mat(self.rows, other.cols, out)
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionError(f"cannot apply {self.rows}x{self.cols} matrix to a length-{len(v)} vector")
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def scale(self, c) -> Mat:
        c = scalar(c)
        return Mat(self.rows, self.cols, [c * e for e in self.entries])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Mat({self.rows}, {self.cols}, {[str(e) for e in self.entries]})"


def _integer_rows(m: Mat) -> tuple[list[list[int]], Fraction]:
    """Clear denominators row by row; returns the rows and the product of the row multipliers."""
    rows = []
    factor = Fraction(1)
    for i in range(m.rows):
        r = m.row(i)
        den = lcm(*(x.denominator for x in r)) if r else 1
        rows.append([int(x * den) for x in r])
        factor *= den
    return rows, factor


def _bareiss(a: list[list[int]], ncols: int) -> tuple[int, int, int]:
    """In-place fraction-free forward elimination.

    Returns ``(rank, last_pivot, sign)``.  For a square full-rank input the
    determinant is ``sign * last_pivot``.  Pivot: first nonzero entry in the
    current column, scanning rows top-down.
    """
    nrows = len(a)
    rank = 0
    prev = 1
    sign = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
            sign = -sign
        p = a[rank][col]
        prow = a[rank]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[col]
            for c in range(col + 1, ncols):
                # exact division: Sylvester's identity guarantees divisibility
                row[c] = (p * row[c] - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank, prev, sign


def det(m: Mat) -> Fraction:
    """Exact determinant by Bareiss elimination."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    rows, factor = _integer_rows(m)
    rank, last, sign = _bareiss(rows, n)
    if rank < n:
        return Fraction(0)
    return Fraction(sign * last) / factor


def rank(m: Mat) -> int:
    rows, _ = _integer_rows(m)
    return _bareiss(rows, m.cols)[0]


def rref(m: Mat) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        piv = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(m: Mat) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel, each vector scaled so its first nonzero entry is 1."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        lead = next(x for x in v if x != 0)
        basis.append(tuple(x / lead for x in v))
    return basis


def solve(m: Mat, b: Sequence) -> tuple[Fraction, ...]:
    """Unique solution of ``m x = b`` for square invertible ``m``."""
    if m.rows != m.cols or len(b) != m.rows:
        raise DimensionError("solve needs a square system")
    aug = Mat.from_rows([list(m.row(i)) + [scalar(b[i])] for i in range(m.rows)])
    reduced, pivots = rref(aug)
    if pivots != list(range(m.cols)):
        raise RankError("singular system")
    return tuple(row[-1] for row in reduced)


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise DimensionError("inverse of non-square matrix")
    n = m.rows
    aug = Mat.from_rows([list(m.row(i)) + [int(i == j) for j in range(n)] for i in range(n)])
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise RankError("matrix is singular")
    return Mat.from_rows([row[n:] for row in reduced])
