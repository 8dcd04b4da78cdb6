"""Exact rational linear algebra.

Scalars are `fractions.Fraction` (always in lowest terms, positive
denominator, exact); vectors and matrices are plain sequences of scalars.
Elimination is fraction-free: every row is scaled to integers first, and
the forward pass uses division-exact two-step elimination so all
intermediate entries stay integers (they are minors of the scaled input).
Pivots are chosen by smallest absolute bit size among the nonzero
candidates of the current column, which keeps intermediate entries small.
"""

from __future__ import annotations

import math
from fractions import Fraction


class LinAlgError(ValueError):
    """Base class for linear-system failures."""


class NoSolutionError(LinAlgError):
    """The system is inconsistent."""


class UnderdeterminedError(LinAlgError):
    """The system is consistent but the solution is not unique."""


def _as_int_rows(rows):
    """Copy `rows` as integer lists, scaling each row by the lcm of its
    denominators.  Row scaling by a positive factor preserves rank, pivot
    columns, kernels and solution sets; determinant callers must account
    for the returned scale factors."""
    out = []
    scales = []
    width = None
    for row in rows:
        fr = [Fraction(x) for x in row]
        if width is None:
            width = len(fr)
        elif len(fr) != width:
            raise ValueError("matrix rows have unequal lengths")
        m = math.lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * m) for f in fr])
        scales.append(m)
    return out, scales


def _echelon(mat):
    """In-place fraction-free row echelon form of an integer matrix.

    Returns (pivot_columns, swap_sign).  After the call, row i has its
    pivot in pivot_columns[i] and zeros below every pivot; entries are
    exact minors of the input, so no rational arithmetic is needed.
    """
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    piv_cols = []
    sign = 1
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_bits = 0
        for i in range(r, nrows):
            v = mat[i][c]
            if v:
                bits = v.bit_length() if v > 0 else (-v).bit_length()
                if best < 0 or bits < best_bits:
                    best, best_bits = i, bits
        if best < 0:
            continue
        if best != r:
            mat[r], mat[best] = mat[best], mat[r]
            sign = -sign
        p = mat[r][c]
        row_r = mat[r]
        for i in range(r + 1, nrows):
            row_i = mat[i]
            v = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (row_i[j] * p - v * row_r[j]) // prev
            row_i[c] = 0
        piv_cols.append(c)
        prev = p
        r += 1
    return piv_cols, sign


def gauss_rank(rows):
    """Rank and pivot columns of a rational matrix.

    Returns (rank, pivot_columns); pivot columns are strictly increasing.
    """
    mat, _ = _as_int_rows(rows)
    piv_cols, _ = _echelon(mat)
    return len(piv_cols), piv_cols


def det(rows):
    """Determinant of a square rational matrix, exact.

    The empty 0x0 matrix has determinant 1.
    """
    mat, scales = _as_int_rows(rows)
    n = len(mat)
    if n and len(mat[0]) != n:
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return Fraction(1)
    piv_cols, sign = _echelon(mat)
    if len(piv_cols) < n:
        return Fraction(0)
    d = Fraction(sign * mat[n - 1][n - 1])
    for m in scales:
        d /= m
    return d


def det_sign(rows):
    """Sign of the determinant: -1, 0 or 1."""
    d = det(rows)
    return (d > 0) - (d < 0)


def solve_linear(a, b):
    """Solve a x = b exactly for the unique solution vector.

    Raises NoSolutionError if the system is inconsistent and
    UnderdeterminedError if it is consistent with a free variable.
    """
    rows = [list(row) + [bi] for row, bi in zip(a, b, strict=True)]
    if not rows:
        raise UnderdeterminedError("empty system")
    ncols = len(rows[0]) - 1
    mat, _ = _as_int_rows(rows)
    piv_cols, _ = _echelon(mat)
    if piv_cols and piv_cols[-1] == ncols:
        raise NoSolutionError("inconsistent system")
    if len(piv_cols) < ncols:
        raise UnderdeterminedError(f"rank {len(piv_cols)} < {ncols} unknowns")
    x = [Fraction(0)] * ncols
    for i in reversed(range(ncols)):
        c = piv_cols[i]
        s = Fraction(mat[i][ncols])
        row = mat[i]
        for j in range(c + 1, ncols):
            if x[j]:
                s -= row[j] * x[j]
        x[c] = s / row[c]
    return tuple(x)


def kernel_basis(rows, ncols):
    """Basis of the right kernel {z : M z = 0} of a rational matrix.

    `ncols` must be given explicitly so an empty constraint list still has
    a well-defined ambient dimension.  Returns one tuple per free column,
    each with a 1 in its free coordinate.
    """
    if not rows:
        basis = []
        for f in range(ncols):
            z = [Fraction(0)] * ncols
            z[f] = Fraction(1)
            basis.append(tuple(z))
        return basis
    if len(rows[0]) != ncols:
        raise ValueError("ncols does not match the matrix width")
    mat, _ = _as_int_rows(rows)
    piv_cols, _ = _echelon(mat)
    piv_set = set(piv_cols)
    basis = []
    for f in range(ncols):
        if f in piv_set:
            continue
        z = [Fraction(0)] * ncols
        z[f] = Fraction(1)
        for i in reversed(range(len(piv_cols))):
            c = piv_cols[i]
            if c > f:
                continue
            row = mat[i]
            s = Fraction(0)
            for j in range(c + 1, ncols):
                if z[j]:
                    s += row[j] * z[j]
            z[c] = -s / row[c]
        basis.append(tuple(z))
    return basis
