"""Exact linear algebra over Q.

Echelon forms use fraction-free (Bareiss) elimination on integer rows, so
intermediate entries stay integral and bounded by minors; rationals only
appear in the final reduced row echelon form.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Row = list


def _as_fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (row space unchanged)."""
    out = []
    for row in rows:
        row = [_as_fraction(v) for v in row]
        den = 1
        for v in row:
            den = lcm(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def echelon(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns the nonzero rows and pivot columns."""
    a = integer_rows(rows)
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    prev = 1
    for col in range(ncols):
        pr = next((i for i in range(r, len(a)) if a[i][col]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        p = a[r][col]
        for i in range(r + 1, len(a)):
            f = a[i][col]
            new = []
            for j in range(ncols):
                q, rem = divmod(p * a[i][j] - f * a[r][j], prev)
                if rem:
                    raise ArithmeticError("inexact fraction-free step")
                new.append(q)
            a[i] = new
        # rows above r are left untouched; the next divisor is this pivot
        prev = p
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return [_primitive(row) for row in a[:r]], pivots


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
    return [v // g for v in row] if g > 1 else row


def rank(rows: Sequence[Sequence]) -> int:
    return len(echelon(rows)[1])


def determinant(square: Sequence[Sequence]) -> Fraction:
    """Bareiss determinant (exact)."""
    n = len(square)
    if any(len(row) != n for row in square):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    dens = []
    a = []
    for row in square:
        row = [_as_fraction(v) for v in row]
        den = 1
        for v in row:
            den = lcm(den, v.denominator)
        dens.append(den)
        a.append([int(v * den) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    total_den = 1
    for d in dens:
        total_den *= d
    return Fraction(sign * a[n - 1][n - 1], total_den)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q (nonzero rows only) and pivot columns."""
    ech, pivots = echelon(rows)
    red = [[Fraction(v) for v in row] for row in ech]
    for r in range(len(red) - 1, -1, -1):
        c = pivots[r]
        p = red[r][c]
        red[r] = [v / p for v in red[r]]
        for i in range(r):
            f = red[i][c]
            if f:
                red[i] = [vi - f * vr for vi, vr in zip(red[i], red[r])]
    return red, pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : rows @ v = 0}``, one vector per free column."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence):
    """Gauss-Jordan reduction of ``matrix @ b = rhs`` with symbolic right-hand sides.

    ``rhs`` entries only need ``+``, ``-`` and multiplication by a Fraction.
    Returns ``(pivots, reduced_rows, reduced_rhs)`` where the first
    ``len(pivots)`` rows are in reduced form and the remaining rows have a
    zero left-hand side (their right-hand sides are the compatibility
    conditions).
    """
    a = [[_as_fraction(v) for v in row] for row in matrix]
    b = list(rhs)
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, nrows) if a[i][col]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        b[r], b[pr] = b[pr], b[r]
        p = a[r][col]
        if p != 1:
            inv = 1 / p
            a[r] = [v * inv for v in a[r]]
            b[r] = b[r] * inv
        for i in range(nrows):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
                b[i] = b[i] - b[r] * f
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return pivots, a, b


def canonical_basis(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """RREF basis of the span (a canonical form for subspace comparison)."""
    if not vectors:
        return []
    return rref(vectors)[0]
