"""Characteristic polynomials and extraction of the irreducible factor
through a given real root.

Factor search is numerically guided and exactly verified: candidate
factors are built from high-precision complex roots, rounded to integer
coefficients and accepted only after exact division.  Every subset of
roots of each degree is tried in increasing degree, so the first factor
found through the target root is irreducible.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

import mpmath

from ..errors import DegreeTooLarge, NonSquare
from . import poly as P

MAX_FACTOR_DEGREE = 12


def charpoly(M: Sequence[Sequence]) -> P.Poly:
    """det(x*I - M) by fraction-free (Bareiss) elimination over Q[x].

    Leading principal minors of ``xI - M`` are monic, so no pivoting is
    needed and every division below is exact.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise NonSquare(f"matrix is not square ({n} rows)")
    if n == 0:
        return (Fraction(1),)
    a = [[P.to_frac((-Fraction(M[i][j]), 1) if i == j else (-Fraction(M[i][j]),))
          for j in range(n)] for i in range(n)]
    prev: P.Poly = (Fraction(1),)
    for k in range(n - 1):
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = P.sub(P.mul(pivot, a[i][j]), P.mul(a[i][k], a[k][j]))
                a[i][j] = P.exact_div(num, prev)
        prev = pivot
    return a[n - 1][n - 1]


def _monic_transform(f: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """F(y) = a^(n-1) f(y/a), monic with integer coefficients."""
    n = len(f) - 1
    a = f[-1]
    F = tuple(f[k] * a ** (n - 1 - k) if k < n else 1 for k in range(n + 1))
    return F, a


def _undo_transform(G: Sequence[int], a: int) -> tuple[int, ...]:
    # g(x) = G(a x), then primitive part
    return P.primitive([Fraction(c) * a ** k for k, c in enumerate(G)])


def factor_through_root(f: Sequence, lo: Fraction, hi: Fraction) -> tuple[int, ...]:
    """Irreducible integer factor of the squarefree ``f`` vanishing at the
    unique root of ``f`` in ``(lo, hi)`` (or at ``lo`` when ``lo == hi``).
    """
    f = P.primitive(f)
    n = len(f) - 1
    if n > MAX_FACTOR_DEGREE:
        raise DegreeTooLarge(f"degree {n} exceeds factorization cap {MAX_FACTOR_DEGREE}")
    if n == 1:
        return f
    if lo == hi:
        return P.primitive((-Fraction(lo), 1))
    F, a = _monic_transform(f)
    size = max(abs(c) for c in F)
    dps = 40 + 2 * n + len(str(size)) * 2
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(F)],
                                 maxsteps=400, extraprec=4 * dps)
        target_lo, target_hi = sorted((_mpf(a * lo), _mpf(a * hi)))
        tol = mpmath.mpf(10) ** (-(dps // 3))
        idx = None
        for i, r in enumerate(roots):
            if abs(mpmath.im(r)) < tol and target_lo - tol <= mpmath.re(r) <= target_hi + tol:
                if idx is None or abs(mpmath.im(r)) < abs(mpmath.im(roots[idx])):
                    idx = i
        if idx is None:
            raise ArithmeticError("no numerical root found in isolating interval")
        others = [r for i, r in enumerate(roots) if i != idx]
        t = roots[idx]
        for d in range(1, n + 1):
            for subset in combinations(others, d - 1):
                coeffs = [mpmath.mpc(1)]
                for r in (t,) + subset:
                    nxt = [mpmath.mpc(0)] * (len(coeffs) + 1)
                    for k, c in enumerate(coeffs):
                        nxt[k + 1] += c
                        nxt[k] -= c * r
                    coeffs = nxt
                ints = []
                ok = True
                for c in coeffs:
                    if abs(mpmath.im(c)) > mpmath.mpf("0.01"):
                        ok = False
                        break
                    k = int(mpmath.nint(mpmath.re(c)))
                    if abs(mpmath.re(c) - k) > mpmath.mpf("0.01"):
                        ok = False
                        break
                    ints.append(k)
                if not ok:
                    continue
                _, r = P.divmod_(F, tuple(ints))
                if not r:
                    g = _undo_transform(ints, a)
                    if _has_root_in(g, lo, hi):
                        return g
    raise ArithmeticError("factor search failed")


def _mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def _has_root_in(g, lo, hi) -> bool:
    seq = P.sturm_sequence(g)
    return P.count_roots(seq, lo, hi) - (1 if P.evaluate(g, hi) == 0 else 0) >= 1
