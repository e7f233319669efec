"""Exact real algebraic numbers: an irreducible integer polynomial plus a
rational isolating interval."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import poly as P
from .factor import charpoly, factor_through_root

LESS, EQUAL, GREATER = -1, 0, 1


def _kron(A, B):
    n, m = len(A), len(B)
    return [[A[i // m][j // m] * B[i % m][j % m] for j in range(n * m)]
            for i in range(n * m)]


def companion(f: Sequence) -> list[list[Fraction]]:
    """Companion matrix of a polynomial (made monic)."""
    f = P.monic(P.to_frac(f))
    n = len(f) - 1
    C = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = Fraction(1)
    for i in range(n):
        C[i][n - 1] = -f[i]
    return C


def _interval_mul(a, b):
    prods = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    return min(prods), max(prods)


class RealAlgebraic:
    """A real algebraic number.

    ``minpoly`` is primitive with positive leading coefficient and is
    assumed irreducible; ``(lo, hi)`` contains exactly one of its real
    roots, or ``lo == hi`` is that root (always the case in degree 1).
    Instances are immutable; refinement returns new objects.
    """

    __slots__ = ("minpoly", "lo", "hi", "__dict__")

    def __init__(self, minpoly: Sequence[int], lo, hi, *, check: bool = True):
        mp = P.primitive(minpoly)
        if len(mp) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        lo, hi = Fraction(lo), Fraction(hi)
        if len(mp) == 2:
            root = Fraction(-mp[0], mp[1])
            lo = hi = root
        elif check:
            if lo >= hi:
                raise ValueError("isolating interval must satisfy lo < hi for degree >= 2")
            seq = P.sturm_sequence(mp)
            n = P.count_roots(seq, lo, hi) - (1 if P.evaluate(mp, hi) == 0 else 0)
            if n != 1 or P.evaluate(mp, lo) == 0:
                raise ValueError(f"interval ({lo}, {hi}) does not isolate one root of {P.to_str(mp)}")
        object.__setattr__(self, "minpoly", mp)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("RealAlgebraic is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "RealAlgebraic":
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q, q)

    @classmethod
    def largest_root(cls, f: Sequence) -> "RealAlgebraic":
        """Largest real root of a nonzero polynomial (not necessarily
        irreducible or squarefree)."""
        sf = P.squarefree_part(f)
        ivs = P.isolate_real_roots(sf)
        if not ivs:
            raise ValueError(f"{P.to_str(P.primitive(f))} has no real roots")
        lo, hi = ivs[-1]
        g = factor_through_root(sf, lo, hi)
        return cls(g, lo, hi)

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def is_rational(self) -> bool:
        return self.degree == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.lo

    def is_integer(self) -> bool:
        return self.is_rational() and self.lo.denominator == 1

    @cached_property
    def _sturm(self):
        return P.sturm_sequence(self.minpoly)

    def refine(self, width) -> "RealAlgebraic":
        """Copy whose isolating interval is narrower than ``width``."""
        if self.lo == self.hi:
            return self
        lo, hi = self.lo, self.hi
        f = self.minpoly
        slo = P._sign(P.evaluate(f, lo))
        width = Fraction(width)
        while hi - lo >= width:
            mid = (lo + hi) / 2
            s = P._sign(P.evaluate(f, mid))
            if s == slo:
                lo = mid
            else:
                hi = mid
        out = RealAlgebraic(f, lo, hi, check=False)
        return out

    def bisect(self) -> "RealAlgebraic":
        if self.lo == self.hi:
            return self
        return self.refine((self.hi - self.lo) / 2)

    def floor(self) -> int:
        a = self
        while True:
            if a.lo == a.hi:
                q = a.lo
                return q.numerator // q.denominator
            fl = a.lo.numerator // a.lo.denominator
            if a.hi <= fl + 1:
                return fl
            a = a.bisect()

    def __float__(self) -> float:
        a = self.refine(Fraction(1, 2 ** 60))
        return float((a.lo + a.hi) / 2)

    def decimal(self, digits: int) -> str:
        """Decimal approximation with ``digits`` places after the point,
        certified by refining until both interval ends round alike."""
        if digits < 1:
            raise ValueError("digits must be >= 1")
        scale = 10 ** digits
        a = self

        def rnd(q: Fraction) -> int:
            return int((q * scale + Fraction(1, 2)).__floor__())

        while True:
            if rnd(a.lo) == rnd(a.hi):
                k = rnd(a.lo)
                sign = "-" if k < 0 else ""
                k = abs(k)
                return f"{sign}{k // scale}.{k % scale:0{digits}d}"
            a = a.refine((a.hi - a.lo) / 4)

    # -- comparison -----------------------------------------------------------

    def compare(self, other: "RealAlgebraic") -> int:
        return cmp(self, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraic.from_rational(other)
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        return cmp(self, other) == EQUAL

    def __lt__(self, other):
        return cmp(self, _coerce(other)) == LESS

    def __le__(self, other):
        return cmp(self, _coerce(other)) != GREATER

    def __gt__(self, other):
        return cmp(self, _coerce(other)) == GREATER

    def __ge__(self, other):
        return cmp(self, _coerce(other)) != LESS

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        if self.is_rational():
            return f"RealAlgebraic({self.lo})"
        return f"RealAlgebraic({P.to_str(self.minpoly)}; ({self.lo}, {self.hi}))"

    # -- arithmetic (via companion-matrix characteristic polynomials) ---------

    def __neg__(self):
        f = tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.minpoly))
        return RealAlgebraic(f, -self.hi, -self.lo, check=False) if self.degree > 1 \
            else RealAlgebraic.from_rational(-self.lo)

    def __add__(self, other):
        other = _coerce(other)
        if self.is_rational() and other.is_rational():
            return RealAlgebraic.from_rational(self.lo + other.lo)
        A, B = companion(self.minpoly), companion(other.minpoly)
        n, m = len(A), len(B)
        I_n = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        I_m = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        K1, K2 = _kron(A, I_m), _kron(I_n, B)
        S = [[K1[i][j] + K2[i][j] for j in range(n * m)] for i in range(n * m)]
        return _locate(charpoly(S), self, other,
                       lambda x, y: (x[0] + y[0], x[1] + y[1]))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_rational() and other.is_rational():
            return RealAlgebraic.from_rational(self.lo * other.lo)
        if (self.is_rational() and self.lo == 0) or (other.is_rational() and other.lo == 0):
            return RealAlgebraic.from_rational(0)
        K = _kron(companion(self.minpoly), companion(other.minpoly))
        return _locate(charpoly(K), self, other, _interval_mul)

    __rmul__ = __mul__

    def inverse(self) -> "RealAlgebraic":
        if self.is_rational():
            if self.lo == 0:
                raise ZeroDivisionError("inverse of zero")
            return RealAlgebraic.from_rational(1 / self.lo)
        a = self
        while a.lo <= 0 <= a.hi:
            a = a.bisect()
        f = tuple(reversed(a.minpoly))
        return RealAlgebraic(f, 1 / a.hi, 1 / a.lo)

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()


def _coerce(x) -> RealAlgebraic:
    if isinstance(x, RealAlgebraic):
        return x
    if isinstance(x, (int, Fraction)):
        return RealAlgebraic.from_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to RealAlgebraic")


def _locate(chi, a: RealAlgebraic, b: RealAlgebraic, op) -> RealAlgebraic:
    sf = P.squarefree_part(chi)
    seq = P.sturm_sequence(sf)
    while True:
        lo, hi = op((a.lo, a.hi), (b.lo, b.hi))
        if lo == hi:
            return RealAlgebraic.from_rational(lo)
        if P.evaluate(sf, lo) != 0 and P.evaluate(sf, hi) != 0 \
                and P.count_roots(seq, lo, hi) == 1:
            g = factor_through_root(sf, lo, hi)
            return RealAlgebraic(g, lo, hi)
        a, b = a.bisect(), b.bisect()


def cmp(a: RealAlgebraic, b: RealAlgebraic) -> int:
    """Exact three-way comparison: -1, 0 or 1.

    Equality is decided by a common root of the two minimal polynomials
    inside both isolating intervals; otherwise the intervals are refined
    until they separate.
    """
    if a.is_rational() and b.is_rational():
        return (a.lo > b.lo) - (a.lo < b.lo)
    g = P.pgcd(a.minpoly, b.minpoly)
    if len(g) >= 2:
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo < hi:
            seq = P.sturm_sequence(g)
            inside = P.count_roots(seq, lo, hi) - (1 if P.evaluate(g, hi) == 0 else 0)
            if inside >= 1:
                return EQUAL
        elif lo == hi and P.evaluate(g, lo) == 0:
            return EQUAL
    while True:
        if a.hi < b.lo or (a.hi == b.lo and not (a.lo == a.hi == b.lo == b.hi)):
            return LESS
        if b.hi < a.lo or (b.hi == a.lo and not (a.lo == a.hi == b.lo == b.hi)):
            return GREATER
        a, b = a.bisect(), b.bisect()
