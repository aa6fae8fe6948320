"""
Exact dense linear algebra: rank and determinant.

Three entry domains cover everything the cell computations need:

* rationals (Python ints / Fractions),
* Z[d] treated inside its fraction field (fraction-free elimination, so
  no rational functions ever materialize),
* small number fields Q[t]/(f).

Ranks use division-free two-term row updates with content stripping, which
keeps coefficient growth tame on the 60 x 150 polynomial matrices arising
from sandwich pairings.  Determinants use Bareiss elimination, whose
divisions are exact by the theory of minors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .numberfield import NFElem
from .poly import IntPoly, poly_gcd


def _strip_int_row(row: list[int]) -> None:
    g = 0
    for c in row:
        g = gcd(g, c)
        if g == 1:
            return
    if g > 1:
        for i, c in enumerate(row):
            row[i] = c // g


def int_matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                if pivot is None or abs(mat[i][col]) < abs(mat[pivot][col]):
                    pivot = i
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        pval = prow[col]
        for i in range(rank + 1, len(mat)):
            v = mat[i][col]
            if v:
                row = mat[i]
                for j in range(col, ncols):
                    row[j] = pval * row[j] - v * prow[j]
                _strip_int_row(row)
        rank += 1
        if rank == len(mat):
            break
    return rank


def rational_matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix of Fractions/ints, by clearing denominators."""
    cleared = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        denom = 1
        for x in fr:
            denom = lcm(denom, x.denominator)
        cleared.append([int(x * denom) for x in fr])
    return int_matrix_rank(cleared)


def poly_matrix_rank(rows: Sequence[Sequence[IntPoly]]) -> int:
    """Rank over Q(d) of a matrix with entries in Z[d]."""
    mat = [[p if isinstance(p, IntPoly) else IntPoly.const(p) for p in r]
           for r in rows]
    if not mat or not mat[0]:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        best = None
        for i in range(rank, len(mat)):
            if not mat[i][col].is_zero():
                d = mat[i][col].degree
                if best is None or d < best:
                    pivot, best = i, d
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        pval = prow[col]
        for i in range(rank + 1, len(mat)):
            v = mat[i][col]
            if not v.is_zero():
                row = mat[i]
                for j in range(col, ncols):
                    row[j] = pval * row[j] - v * prow[j]
                content = IntPoly.zero()
                for q in row:
                    content = poly_gcd(content, q)
                    if content.degree == 0 and content.coeffs == (1,):
                        break
                if not content.is_zero() and content != IntPoly.one():
                    for j in range(ncols):
                        if not row[j].is_zero():
                            row[j] = row[j].divexact(content)
        rank += 1
        if rank == len(mat):
            break
    return rank


def poly_matrix_det(rows: Sequence[Sequence[IntPoly]]) -> IntPoly:
    """Determinant of a square matrix over Z[d], by Bareiss elimination."""
    mat = [[p if isinstance(p, IntPoly) else IntPoly.const(p) for p in r]
           for r in rows]
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return IntPoly.one()
    sign = 1
    prev = IntPoly.one()
    for k in range(n - 1):
        if mat[k][k].is_zero():
            swap = None
            for i in range(k + 1, n):
                if not mat[i][k].is_zero():
                    swap = i
                    break
            if swap is None:
                return IntPoly.zero()
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        pivot = mat[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * mat[i][j] - mat[i][k] * mat[k][j]
                mat[i][j] = num.divexact(prev)
            mat[i][k] = IntPoly.zero()
        prev = pivot
    result = mat[n - 1][n - 1]
    return result * sign if sign < 0 else result


def field_matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix with entries in a field (Fraction or NFElem)."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        inv = 1 / prow[col] if isinstance(prow[col], Fraction) \
            else prow[col].inverse()
        for i in range(rank + 1, len(mat)):
            v = mat[i][col]
            if v:
                factor = v * inv
                row = mat[i]
                for j in range(col, ncols):
                    row[j] = row[j] - factor * prow[j]
        rank += 1
        if rank == len(mat):
            break
    return rank


def field_matrix_det(rows: Sequence[Sequence]):
    """Determinant over a field (Fraction or NFElem entries)."""
    mat = [list(r) for r in rows]
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    det = None
    sign_flips = 0
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if mat[i][k]:
                pivot = i
                break
        if pivot is None:
            zero = mat[0][0] - mat[0][0]
            return zero
        if pivot != k:
            mat[k], mat[pivot] = mat[pivot], mat[k]
            sign_flips += 1
        pval = mat[k][k]
        det = pval if det is None else det * pval
        inv = 1 / pval if isinstance(pval, Fraction) else pval.inverse()
        for i in range(k + 1, n):
            v = mat[i][k]
            if v:
                factor = v * inv
                for j in range(k, n):
                    mat[i][j] = mat[i][j] - factor * mat[k][j]
    if sign_flips % 2:
        det = -det
    return det


class ExactMatrix:
    """A rectangular matrix with homogeneous exact entries.

    Entry domains: int/Fraction (rationals), IntPoly (Z[d], handled
    fraction-free), NFElem (a number field).
    """

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")
        self.domain = self._detect_domain()

    def _detect_domain(self) -> str:
        for r in self.rows:
            for x in r:
                if isinstance(x, IntPoly):
                    return "poly"
                if isinstance(x, NFElem):
                    return "numberfield"
                if isinstance(x, Fraction):
                    return "rational"
                if not isinstance(x, int):
                    raise TypeError(f"unsupported matrix entry {x!r}")
        return "rational"

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        if self.domain == "poly":
            return poly_matrix_rank(self.rows)
        if self.domain == "numberfield":
            return field_matrix_rank(self.rows)
        return rational_matrix_rank(self.rows)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return 1
        if self.domain == "poly":
            return poly_matrix_det(self.rows)
        if self.domain == "numberfield":
            return field_matrix_det(self.rows)
        return field_matrix_det(
            [[Fraction(x) for x in r] for r in self.rows])

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.domain})"


def matrix_rank(m) -> int:
    """Exact rank; accepts an ExactMatrix or a list of rows."""
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix(m)
    return m.rank()


def matrix_det(m):
    """Exact determinant; accepts an ExactMatrix or a list of rows."""
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix(m)
    return m.det()
