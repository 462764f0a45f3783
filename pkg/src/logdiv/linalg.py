"""Exact linear algebra over the rationals.

Fraction-free (Bareiss-style) forward elimination on integer matrices keeps
entries integral; inputs with rational entries are scaled row-wise first.
These routines back the graded derivation solver and the arrangement
lattice, where matrices are small and exactness is non-negotiable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _to_int_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for c in row:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        ints = [int(c * den) if isinstance(c, Fraction) else int(c) * den for c in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _row_echelon(rows) -> tuple[list[list[int]], list[int]]:
    """Fraction-free echelon form; returns (matrix, pivot column list)."""
    m = _to_int_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][col]
        for i in range(r + 1, len(m)):
            factor = m[i][col]
            row_i, row_r = m[i], m[r]
            for j in range(ncols):
                num = row_i[j] * pv - factor * row_r[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_i[j] = q
        prev = pv
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    _, pivots = _row_echelon(rows)
    return len(pivots)


def nullspace(rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel, one vector per free column.

    Vectors are returned with integer entries (denominators cleared and the
    gcd divided out), so solution derivations print with small coefficients.
    """
    echelon, pivots = _row_echelon(rows)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        # back-substitute bottom-up
        for i in range(len(pivots) - 1, -1, -1):
            col = pivots[i]
            s = sum((Fraction(echelon[i][j]) * vec[j] for j in range(col + 1, ncols)),
                    Fraction(0))
            vec[col] = -s / echelon[i][col]
        den = 1
        for c in vec:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in vec]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        basis.append(tuple(Fraction(v) for v in ints))
    return basis


def solve_square(rows, rhs) -> list[Fraction] | None:
    """Solve a square system exactly; None when singular."""
    n = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]
