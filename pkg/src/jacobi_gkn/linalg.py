"""Exact linear algebra over the scalar types of :mod:`jacobi_gkn.exact_numbers`.

Only field operations are used, so the same routines serve Q, Q(i) and
Q(i)(2^(1/D)).  Pivots are chosen as the first exactly-nonzero entry; with
exact arithmetic no pivoting strategy is needed for stability.
"""

from __future__ import annotations

from typing import List, Sequence

from .errors import SingularSystem
from .exact_numbers import simplify

__all__ = ["rank", "solve", "row_reduce", "mat_mul", "conj_transpose", "identity"]


def row_reduce(rows: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    m = [[simplify(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c] if not hasattr(m[r][c], "inverse") else m[r][c].inverse()
        m[r] = [simplify(x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [simplify(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank of a matrix given as a list of rows."""
    return len(row_reduce(rows)[1])


def solve(rows: Sequence[Sequence], rhs: Sequence) -> List:
    """Solve ``A x = b`` exactly for a square or overdetermined consistent system.

    Raises :class:`SingularSystem` unless the solution exists and is unique.
    """
    if len(rows) != len(rhs):
        raise ValueError("row count mismatch")
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = row_reduce(aug)
    if ncols in piv:
        raise SingularSystem("inconsistent linear system")
    if len(piv) < ncols:
        raise SingularSystem(f"system has rank {len(piv)} < {ncols} unknowns")
    return [red[i][ncols] for i in range(ncols)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                if a[i][t] and b[t][j]:
                    s = s + a[i][t] * b[t][j]
            row.append(simplify(s))
        out.append(row)
    return out


def conj_transpose(a):
    return [[simplify(a[i][j]).conjugate() for i in range(len(a))] for j in range(len(a[0]))]


def identity(n: int):
    return [[simplify(1 if i == j else 0) for j in range(n)] for i in range(n)]
