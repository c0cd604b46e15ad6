"""Small exact linear algebra over Fraction.

Only what the cone and positivity code needs: reduced row echelon form,
right nullspace, and square solves.  Inputs are sequences of sequences of
anything Fraction() accepts; outputs are tuples of Fraction.
"""

from __future__ import annotations

from fractions import Fraction


def _to_matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    m = _to_matrix(rows)
    if not m:
        return [], []
    width = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, width: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : rows @ x = 0} in R^width."""
    reduced, pivots = rref(rows)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(tuple(v))
    return basis


def solve_square(a, b) -> tuple[Fraction, ...] | None:
    """Solve a x = b for square a; None when singular."""
    m = _to_matrix(a)
    n = len(m)
    rhs = [Fraction(x) for x in b]
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        rhs[col] *= inv
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
                rhs[i] -= f * rhs[col]
    return tuple(rhs)
