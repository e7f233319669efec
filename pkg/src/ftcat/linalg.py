"""Exact linear algebra over any field whose elements support ``+ - * /``
and truth testing (nonzero is truthy): Fraction, number field elements,
the finite and cyclotomic fields of ``simplecheck.fields``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = [list(r) for r in rows]
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pv = A[r][c]
        inv = Fraction(1, pv) if isinstance(pv, int) else 1 / pv
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None, one=Fraction(1), zero=Fraction(0)) -> list[list]:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    n = len(rows[0])
    R, piv = rref(rows)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for r, c in enumerate(piv):
            v[c] = -R[r][f]
        basis.append(v)
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> list | None:
    """One solution of A x = b, or None if inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, piv = rref(aug)
    if n in piv:
        return None
    zero = b[0] - b[0] if b else Fraction(0)
    x = [zero] * n
    for r, c in enumerate(piv):
        x[c] = R[r][n]
    return x


def matmul(A, B):
    return [[sum((a * b for a, b in zip(row, col)), start=0 * row[0]) for col in zip(*B)]
            for row in A]


def identity(n: int, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix over the prime field F_p."""
    A = [[x % p for x in r] for r in rows]
    if not A:
        return 0
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        r += 1
        if r == m:
            break
    return r
