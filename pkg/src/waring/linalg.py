"""Exact linear algebra over the scalar fields.

All routines use fraction-free (Bareiss) elimination: every intermediate
division is exact in the coefficient ring, which keeps entry growth bounded
while staying fully exact for rationals and quadratic extensions.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import InternalInvariantError, is_zero

Matrix = list[list]


def _clone(rows) -> Matrix:
    return [list(r) for r in rows]


def echelon(rows) -> tuple[Matrix, list[int], int]:
    """Fraction-free row echelon form.

    Returns ``(reduced_rows, pivot_columns, swap_sign)``; entries below each
    pivot are exactly zero.
    """
    m = _clone(rows)
    if not m:
        return m, [], 1
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    sign = 1
    prev = Fraction(1)
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if not is_zero(m[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * piv - m[i][c] * m[r][j]) / prev
            m[i][c] = Fraction(0)
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots, sign


def rank(rows) -> int:
    _, pivots, _ = echelon(rows)
    return len(pivots)


def kernel_basis(rows, ncols: int) -> list[list]:
    """Canonical kernel basis: one vector per free column, carrying 1 in its
    free slot and 0 in every other free slot (reduced echelon normal form)."""
    if not rows:
        return [[Fraction(1) if i == j else Fraction(0) for i in range(ncols)] for j in range(ncols)]
    ech, pivots, _ = echelon(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v: list = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            acc = Fraction(0)
            for j in range(pc + 1, ncols):
                if not is_zero(v[j]):
                    acc = acc + ech[i][j] * v[j]
            v[pc] = -acc / ech[i][pc]
        basis.append(v)
    return basis


def determinant(rows) -> object:
    """Exact determinant via Bareiss; zero on rank deficiency."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    ech, pivots, sign = echelon(rows)
    if len(pivots) < n:
        return Fraction(0)
    det = ech[n - 1][n - 1]
    return det if sign > 0 else -det


def solve_unique(a_rows, b_col) -> list | None:
    """Solve ``A x = b`` requiring full column rank; returns None when the
    system is inconsistent.

    Raises on rank deficiency in the unknowns (the callers treat that as an
    internal invariant violation).
    """
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if nrows else 0
    aug = [list(a_rows[i]) + [b_col[i]] for i in range(nrows)]
    ech, pivots, _ = echelon(aug)
    if ncols in pivots:
        return None  # pivot in the augmented column: inconsistent
    if len(pivots) < ncols:
        raise InternalInvariantError("linear system unexpectedly rank-deficient")
    x: list = [Fraction(0)] * ncols
    for i in range(len(pivots) - 1, -1, -1):
        pc = pivots[i]
        acc = ech[i][ncols]
        for j in range(pc + 1, ncols):
            acc = acc - ech[i][j] * x[j]
        x[pc] = acc / ech[i][pc]
    return x
