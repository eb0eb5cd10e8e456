"""Exact symmetric linear algebra over the integers and rationals.

Everything here is exact: pivots and multipliers are `fractions.Fraction`,
determinants come out as true integers, and no floating point is ever
involved.  These routines back every definiteness check and all
enumeration preprocessing in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidRank, NotPositiveDefinite, NotSymmetric

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SymMatrix:
    """Square symmetric integer matrix; the raw carrier of Gram data."""

    entries: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(rows)
        if n < 1:
            raise InvalidRank("matrix must have at least one row")
        if any(len(row) != n for row in rows):
            raise NotSymmetric(f"matrix is not square: {n} rows, row lengths {[len(r) for r in rows]}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise NotSymmetric(f"entry ({i},{j})={rows[i][j]} differs from ({j},{i})={rows[j][i]}")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def as_sym_matrix(m) -> SymMatrix:
    """Coerce nested sequences (or a SymMatrix) to a SymMatrix."""
    if isinstance(m, SymMatrix):
        return m
    return SymMatrix(tuple(tuple(row) for row in m))


@dataclass(frozen=True)
class RationalLDL:
    """Exact factorization M = lower * diag(d) * lower^T with unit lower triangle."""

    d: tuple[Fraction, ...]
    lower: tuple[tuple[Fraction, ...], ...]

    def reconstruct(self) -> list[list[Fraction]]:
        n = len(self.d)
        out = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out[i][j] = sum(self.lower[i][k] * self.d[k] * self.lower[j][k] for k in range(n))
        return out


def ldl_decompose(m) -> RationalLDL:
    """Factor a symmetric integer matrix as L*D*L^T with positive pivots.

    Raises NotPositiveDefinite (with the offending pivot index) as soon as a
    pivot <= 0 appears.
    """
    mat = as_sym_matrix(m)
    n = mat.n
    d: list[Fraction] = []
    lower = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        lower[j][j] = Fraction(1)
        pivot = Fraction(mat[j][j]) - sum(lower[j][k] * lower[j][k] * d[k] for k in range(j))
        if pivot <= 0:
            raise NotPositiveDefinite(j)
        d.append(pivot)
        for i in range(j + 1, n):
            acc = Fraction(mat[i][j]) - sum(lower[i][k] * lower[j][k] * d[k] for k in range(j))
            lower[i][j] = acc / pivot
    return RationalLDL(tuple(d), tuple(tuple(row) for row in lower))


def is_positive_definite(m) -> bool:
    """True iff all LDL pivots exist and are positive."""
    try:
        ldl_decompose(m)
    except NotPositiveDefinite:
        return False
    return True


def is_positive_semidefinite(m) -> bool:
    """Exact PSD test by pivoting elimination.

    A zero pivot is admissible only if its whole row of the current Schur
    complement vanishes; a negative pivot rules PSD out immediately.
    """
    mat = as_sym_matrix(m)
    n = mat.n
    a = [[Fraction(x) for x in row] for row in mat.entries]
    for j in range(n):
        pivot = a[j][j]
        if pivot < 0:
            return False
        if pivot == 0:
            if any(a[j][k] != 0 for k in range(j + 1, n)):
                return False
            continue
        for i in range(j + 1, n):
            f = a[i][j] / pivot
            if f == 0:
                continue
            for k in range(i, n):
                a[i][k] -= f * a[j][k]
                a[k][i] = a[i][k]
    return True


def determinant(m) -> int:
    """Exact integer determinant via fraction-free (Bareiss) elimination."""
    mat = as_sym_matrix(m)
    n = mat.n
    a = [list(row) for row in mat.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
