"""Dense univariate polynomials over Q, stored low degree first.

A polynomial is a tuple of ``Fraction`` (or ``int``) coefficients with no
trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Poly = tuple


def strip(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def to_frac(p: Sequence) -> Poly:
    return strip(Fraction(c) for c in p)


def deg(p: Poly) -> int:
    return len(p) - 1


def lead(p: Poly):
    return p[-1]


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return strip((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(n))


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, c) -> Poly:
    return strip(c * a for a in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return strip(out)


def power(p: Poly, e: int) -> Poly:
    out: Poly = (1,)
    base = p
    while e:
        if e & 1:
            out = mul(out, base)
        base = mul(base, base)
        e >>= 1
    return out


def divmod_(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder over Q."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = [Fraction(c) for c in p]
    lq = Fraction(q[-1])
    dq = len(q) - 1
    if len(p) - 1 < dq:
        return (), strip(p)
    quot = [Fraction(0)] * (len(p) - dq)
    for k in range(len(p) - 1, dq - 1, -1):
        c = p[k] / lq
        if c:
            quot[k - dq] = c
            for j in range(dq + 1):
                p[k - dq + j] -= c * q[j]
    return strip(quot), strip(p[:dq])


def rem(p: Poly, q: Poly) -> Poly:
    return divmod_(p, q)[1]


def exact_div(p: Poly, q: Poly) -> Poly:
    quo, r = divmod_(p, q)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return quo


def monic(p: Poly) -> Poly:
    if not p:
        return p
    lc = Fraction(p[-1])
    return tuple(Fraction(c) / lc for c in p)


def pgcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q."""
    a, b = strip(p), strip(q)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*p + t*q = g, g monic."""
    r0, r1 = to_frac(p), to_frac(q)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        quo, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return (), s0, t0
    lc = r0[-1]
    return monic(r0), scale(s0, 1 / lc), scale(t0, 1 / lc)


def derivative(p: Poly) -> Poly:
    return strip(i * p[i] for i in range(1, len(p)))


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p: Poly, q: Poly) -> Poly:
    """p(q(x))."""
    acc: Poly = ()
    for c in reversed(p):
        acc = add(mul(acc, q), (c,) if c else ())
    return acc


def primitive(p: Poly) -> tuple[int, ...]:
    """Integer primitive part with positive leading coefficient."""
    p = to_frac(p)
    if not p:
        return ()
    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def squarefree_part(p: Poly) -> Poly:
    p = to_frac(p)
    if len(p) <= 2:
        return monic(p)
    g = pgcd(p, derivative(p))
    return monic(exact_div(p, g))


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [to_frac(p), derivative(to_frac(p))]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        seq.append(neg(r))
    return seq[:-1]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_changes(seq: list[Poly], x) -> int:
    signs = [s for s in (_sign(evaluate(q, x)) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list[Poly], a, b) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    return sign_changes(seq, a) - sign_changes(seq, b)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every root has absolute value below the result."""
    p = to_frac(p)
    lc = abs(p[-1])
    return 1 + max((abs(c) / lc for c in p[:-1]), default=Fraction(0))


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the real roots of a squarefree polynomial.

    Each entry is ``(lo, hi)`` with exactly one root in the open interval,
    or ``lo == hi`` when that rational endpoint is itself the root.  The
    list is sorted increasingly.
    """
    p = to_frac(p)
    if len(p) <= 1:
        return []
    seq = sturm_sequence(p)
    bound = root_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    # invariant: p is nonzero at both ends of every stacked interval
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate(p, mid) != 0:
            stack.append((lo, mid))
            stack.append((mid, hi))
            continue
        out.append((mid, mid))
        delta = (hi - lo) / 4
        while (evaluate(p, mid - delta) == 0 or evaluate(p, mid + delta) == 0
               or count_roots(seq, mid - delta, mid + delta) > 1):
            delta /= 2
        stack.append((lo, mid - delta))
        stack.append((mid + delta, hi))
    out.sort(key=lambda iv: iv[0])
    return out


def to_str(p: Sequence, var: str = "x") -> str:
    """Render e.g. ``(-1, -1, 1)`` as ``x^2-x-1``."""
    p = strip(p)
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    s = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        s += sign + body
    return s
