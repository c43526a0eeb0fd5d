"""Fraction-free determinants and exact linear solves.

Determinants use Bareiss elimination, so every intermediate entry is itself
a minor of the input and each division is exact. Linear solves clear row
denominators first and then run the same one-step fraction-free scheme on
the augmented matrix, which keeps integer growth polynomial in the size.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import lcm, mpz

from ..errors import InternalConsistencyError, UsageError
from .poly import Poly
from .scalars import ONE, ZERO, GaussianRational, Q, Rational


class PolyMatrix:
    """Rectangular matrix of ring entries (Poly or exact scalars)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise UsageError("ragged matrix")
        self.rows = rows

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def _divide_exact(a, b):
    if isinstance(a, Poly):
        if not isinstance(b, Poly):
            return a / b
        return a.exact_div(b)
    return a / b


def det_fraction_free(m) -> Poly | Rational:
    """Determinant of a square matrix by Bareiss elimination with row swaps."""
    rows = m.rows if isinstance(m, PolyMatrix) else tuple(tuple(r) for r in m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise UsageError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    a = [list(r) for r in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return a[k][k] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = _divide_exact(pivot * row_i[j] - aik * row_k[j], prev)
            row_i[k] = pivot * 0
        prev = pivot
    out = a[n - 1][n - 1]
    return -out if sign < 0 else out


@dataclass
class SolveResult:
    status: str  # "unique" | "underdetermined" | "inconsistent"
    solution: list | None = None
    free: list = field(default_factory=list)
    witness_row: int | None = None
    witness_value: object = None
    rank: int = 0

    @property
    def consistent(self) -> bool:
        return self.status != "inconsistent"


def _integer_row(row):
    """Scale a rational row to integers (no-op scale for Gaussian entries)."""
    if any(isinstance(c, GaussianRational) for c in row):
        return list(row)
    den = mpz(1)
    for c in row:
        den = lcm(den, Q(c).denominator)
    return [Q(c) * den for c in row]


def solve_exact(a: Sequence[Sequence], b: Sequence) -> SolveResult:
    """Solve ``a x = b`` exactly and classify the system.

    Inconsistent systems carry ``witness_row``: the index of an input row
    whose reduced form reads ``0 = witness_value`` with a nonzero value.
    Consistent results are checked for zero residual before returning.
    """
    nrows = len(a)
    if nrows != len(b):
        raise UsageError("row count of matrix and right-hand side differ")
    ncols = len(a[0]) if nrows else 0
    if any(len(r) != ncols for r in a):
        raise UsageError("ragged coefficient matrix")
    if nrows == 0:
        if ncols == 0:
            return SolveResult("unique", [], rank=0)
        return SolveResult("underdetermined", [ZERO] * ncols, free=list(range(ncols)))

    aug = [_integer_row(list(a[i]) + [b[i]]) for i in range(nrows)]
    origin = list(range(nrows))
    pivots: list[int] = []
    prev = ONE
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if aug[i][c]), None)
        if p is None:
            continue
        if p != r:
            aug[r], aug[p] = aug[p], aug[r]
            origin[r], origin[p] = origin[p], origin[r]
        piv = aug[r][c]
        for i in range(r + 1, nrows):
            f = aug[i][c]
            row_i, row_r = aug[i], aug[r]
            for j in range(c + 1, ncols + 1):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) / prev
            row_i[c] = ZERO
        # Rows above r that were already zero in this column keep their
        # scale; only reduced rows get divided by prev, which is exact.
        prev = piv
        pivots.append(c)
        r += 1

    for i in range(r, nrows):
        if aug[i][ncols]:
            return SolveResult("inconsistent", witness_row=origin[i],
                               witness_value=aug[i][ncols], rank=r)

    x = [ZERO] * ncols
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        acc = aug[i][ncols]
        for j in range(c + 1, ncols):
            if aug[i][j] and x[j]:
                acc -= aug[i][j] * x[j]
        x[c] = acc / aug[i][c]

    for i in range(nrows):
        s = ZERO
        for j in range(ncols):
            if a[i][j]:
                s += a[i][j] * x[j]
        if s != b[i]:
            raise InternalConsistencyError(f"nonzero residual in row {i} after exact solve")

    free = [c for c in range(ncols) if c not in set(pivots)]
    status = "unique" if not free else "underdetermined"
    return SolveResult(status, x, free=free, rank=r)
