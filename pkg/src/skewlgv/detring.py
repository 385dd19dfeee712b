"""Division-free determinants over the polynomial ring, plus exact
integer-matrix utilities (determinant, adjugate, complementary-minor check).

The polynomial determinant expands along rows with memoisation keyed by the
set of surviving columns, which costs O(2^n * n) ring multiplications --
far below the n! of the Leibniz sum kept here as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .poly import Polynomial

NAIVE_DIMENSION_LIMIT = 8


class NonSquareMatrixError(ValueError):
    """Determinant of a non-square matrix was requested."""


class DimensionGuardError(ValueError):
    """The permutation-sum oracle refuses dimensions above the guard."""


class SizeMismatchError(ValueError):
    """Index sets fed to the minor check have incompatible sizes."""


@dataclass(frozen=True)
class PolyMatrix:
    """Row-major matrix of polynomials with sorted integer row/col labels."""

    rows: int
    cols: int
    entries: tuple[Polynomial, ...]
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        if len(self.row_labels) != self.rows or len(self.col_labels) != self.cols:
            raise ValueError("label count does not match dimensions")
        for labels in (self.row_labels, self.col_labels):
            if any(a >= b for a, b in zip(labels, labels[1:])):
                raise ValueError("labels must be strictly increasing")

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Polynomial]],
        row_labels: Sequence[int] | None = None,
        col_labels: Sequence[int] | None = None,
    ) -> "PolyMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(
            rows=r,
            cols=c,
            entries=tuple(x for row in rows for x in row),
            row_labels=tuple(row_labels) if row_labels is not None else tuple(range(r)),
            col_labels=tuple(col_labels) if col_labels is not None else tuple(range(c)),
        )

    def entry(self, r: int, c: int) -> Polynomial:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[Polynomial, ...]:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def is_square(self) -> bool:
        return self.rows == self.cols


def det(m: PolyMatrix) -> Polynomial:
    """Exact determinant; the empty 0x0 matrix has determinant 1."""
    if not m.is_square():
        raise NonSquareMatrixError(f"matrix is {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return Polynomial.one()
    entries = m.entries
    memo: dict[int, Polynomial] = {}

    def expand(mask: int, row: int) -> Polynomial:
        if mask == 0:
            return Polynomial.one()
        cached = memo.get(mask)
        if cached is not None:
            return cached
        acc = Polynomial.zero()
        sign = 1
        base = row * n
        rest = mask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            e = entries[base + j]
            if e:
                sub = expand(mask ^ low, row + 1)
                term = e * sub
                acc = acc + (-term if sign < 0 else term)
            sign = -sign
            rest ^= low
        memo[mask] = acc
        return acc

    return expand((1 << n) - 1, 0)


def det_naive(m: PolyMatrix) -> Polynomial:
    """Full Leibniz permutation sum; independent oracle for det."""
    if not m.is_square():
        raise NonSquareMatrixError(f"matrix is {m.rows}x{m.cols}")
    n = m.rows
    if n > NAIVE_DIMENSION_LIMIT:
        raise DimensionGuardError(
            f"permutation sum limited to dimension {NAIVE_DIMENSION_LIMIT}, got {n}"
        )
    acc = Polynomial.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if perm[a] > perm[b]
        )
        term = Polynomial.one()
        for r in range(n):
            term = term * m.entry(r, perm[r])
            if term.is_zero():
                break
        acc = acc + (-term if inversions % 2 else term)
    return acc


def matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Matrix product; labels carry over from a's rows and b's columns."""
    if a.cols != b.rows:
        raise SizeMismatchError(f"{a.rows}x{a.cols} times {b.rows}x{b.cols}")
    entries = []
    for r in range(a.rows):
        for c in range(b.cols):
            acc = Polynomial.zero()
            for k in range(a.cols):
                acc = acc + a.entry(r, k) * b.entry(k, c)
            entries.append(acc)
    return PolyMatrix(
        rows=a.rows,
        cols=b.cols,
        entries=tuple(entries),
        row_labels=a.row_labels,
        col_labels=b.col_labels,
    )


def identity_matrix(n: int) -> PolyMatrix:
    entries = tuple(
        Polynomial.one() if r == c else Polynomial.zero()
        for r in range(n)
        for c in range(n)
    )
    return PolyMatrix(n, n, entries, tuple(range(n)), tuple(range(n)))


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by memoised row expansion; det([]) = 1."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NonSquareMatrixError("integer matrix is not square")
    memo: dict[int, int] = {}

    def expand(mask: int, row: int) -> int:
        if mask == 0:
            return 1
        cached = memo.get(mask)
        if cached is not None:
            return cached
        acc = 0
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            e = rows[row][j]
            if e:
                acc += sign * e * expand(mask ^ low, row + 1)
            sign = -sign
            rest ^= low
        memo[mask] = acc
        return acc

    return expand((1 << n) - 1, 0)


def int_submatrix(
    rows: Sequence[Sequence[int]],
    keep_rows: Sequence[int],
    keep_cols: Sequence[int],
) -> list[list[int]]:
    return [[rows[r][c] for c in keep_cols] for r in keep_rows]


def int_cofactor_matrix(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Matrix of signed minors; equals the transpose of the adjugate."""
    n = len(rows)
    out = []
    for i in range(n):
        line = []
        others_r = [r for r in range(n) if r != i]
        for j in range(n):
            others_c = [c for c in range(n) if c != j]
            minor = int_det(int_submatrix(rows, others_r, others_c))
            line.append(-minor if (i + j) % 2 else minor)
        out.append(line)
    return out


def jacobi_check(
    m: Sequence[Sequence[int]],
    a_set: Sequence[int],
    b_set: Sequence[int],
) -> bool:
    """All-integer complementary-minor identity.

    Checks det(M_{A,B}) * det(M)^(r-1) == (-1)^(sum A + sum B)
    * det(C_{A^c,B^c}) where C is the cofactor matrix (the transposed
    adjugate) and r the complement size.  Clearing the inverse from the
    classical statement keeps everything in integers and, because both
    sides are polynomial in the entries, the identity persists for
    singular matrices.  With empty complements both minors coincide with
    det(M) and the identity is trivially true.
    """
    d1 = len(m)
    if any(len(row) != d1 for row in m):
        raise NonSquareMatrixError("integer matrix is not square")
    a = sorted(a_set)
    b = sorted(b_set)
    if len(a) != len(set(a)) or len(b) != len(set(b)):
        raise SizeMismatchError("index sets must not repeat elements")
    if len(a) != len(b):
        raise SizeMismatchError(f"|A| = {len(a)} but |B| = {len(b)}")
    if a and (a[0] < 0 or a[-1] >= d1):
        raise SizeMismatchError("A outside matrix index range")
    if b and (b[0] < 0 or b[-1] >= d1):
        raise SizeMismatchError("B outside matrix index range")

    r = d1 - len(a)
    if r == 0:
        return True

    a_comp = [i for i in range(d1) if i not in set(a)]
    b_comp = [i for i in range(d1) if i not in set(b)]
    det_m = int_det(m)
    lhs = int_det(int_submatrix(m, a, b)) * det_m ** (r - 1)
    cof = int_cofactor_matrix(m)
    sign = -1 if (sum(a) + sum(b)) % 2 else 1
    rhs = sign * int_det(int_submatrix(cof, a_comp, b_comp))
    return lhs == rhs
