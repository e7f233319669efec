"""Elements of a real number field Q(lambda) in the power basis."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DivisionByZero, GeneratorMismatch
from . import poly as P
from .factor import charpoly
from .real import RealAlgebraic, cmp


def same_generator(a: RealAlgebraic, b: RealAlgebraic) -> bool:
    if a is b:
        return True
    if a.minpoly != b.minpoly:
        return False
    return cmp(a, b) == 0


class NumberFieldElement:
    """``sum coords[k] * lambda**k`` with ``lambda = generator``."""

    __slots__ = ("generator", "coords")

    def __init__(self, generator: RealAlgebraic, coords: Iterable):
        coords = [Fraction(c) for c in coords]
        n = generator.degree
        if len(coords) > n:
            # reduce a longer polynomial expression modulo the minimal polynomial
            coords = list(P.rem(P.strip(coords), P.to_frac(generator.minpoly)))
        coords += [Fraction(0)] * (n - len(coords))
        self.generator = generator
        self.coords = tuple(coords)

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_rational(cls, generator: RealAlgebraic, q) -> "NumberFieldElement":
        return cls(generator, [q])

    @classmethod
    def gen(cls, generator: RealAlgebraic) -> "NumberFieldElement":
        if generator.degree == 1:
            return cls(generator, [generator.as_fraction()])
        return cls(generator, [0, 1])

    def _like(self, coords) -> "NumberFieldElement":
        return NumberFieldElement(self.generator, coords)

    def _coerce(self, other) -> "NumberFieldElement":
        if isinstance(other, NumberFieldElement):
            if not same_generator(self.generator, other.generator):
                raise GeneratorMismatch("number field elements have different generators")
            return other
        if isinstance(other, (int, Fraction)):
            return self._like([other])
        return NotImplemented

    # -- queries --------------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.generator.degree

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def as_poly(self) -> P.Poly:
        return P.strip(self.coords)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._like(a + b for a, b in zip(self.coords, other.coords))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-a for a in self.coords)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._like(a - b for a, b in zip(self.coords, other.coords))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_rational():
            c = self.coords[0]
            return self._like(c * b for b in other.coords)
        if other.is_rational():
            c = other.coords[0]
            return self._like(c * a for a in self.coords)
        prod = P.mul(self.as_poly(), other.as_poly())
        return self._like(P.rem(prod, P.to_frac(self.generator.minpoly)))

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        if self.is_zero():
            raise DivisionByZero("division by zero in number field")
        if self.is_rational():
            return self._like([1 / self.coords[0]])
        g, s, _ = P.xgcd(self.as_poly(), P.to_frac(self.generator.minpoly))
        # the minimal polynomial is irreducible, so g = 1
        return self._like(s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self._like([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, NumberFieldElement):
            return NotImplemented
        if not same_generator(self.generator, other.generator):
            return False
        return self.coords == other.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.generator.minpoly, self.coords))

    def __repr__(self):
        if self.is_rational():
            return f"NumberFieldElement({self.coords[0]})"
        terms = ", ".join(str(c) for c in self.coords)
        return f"NumberFieldElement([{terms}] over {P.to_str(self.generator.minpoly, 'x')})"

    # -- algebraic data -------------------------------------------------------

    def multiplication_matrix(self) -> list[list[Fraction]]:
        """Matrix of multiplication by self on the power basis (columns)."""
        n = self.degree
        cols = []
        basis_elem = self._like([1])
        lam = NumberFieldElement.gen(self.generator)
        for _ in range(n):
            cols.append((self * basis_elem).coords)
            basis_elem = basis_elem * lam
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def minimal_polynomial(self) -> tuple[int, ...]:
        if self.is_rational():
            return P.primitive((-self.coords[0], 1))
        chi = charpoly(self.multiplication_matrix())
        return P.primitive(P.squarefree_part(chi))

    def is_algebraic_integer(self) -> bool:
        mp = self.minimal_polynomial()
        return mp[-1] == 1

    def to_real(self) -> RealAlgebraic:
        """The real number this element denotes under the embedding
        lambda -> generator."""
        if self.is_rational():
            return RealAlgebraic.from_rational(self.coords[0])
        mp = self.minimal_polynomial()
        if len(mp) == 2:
            return RealAlgebraic(mp, Fraction(-mp[0], mp[1]), Fraction(-mp[0], mp[1]))
        seq = P.sturm_sequence(mp)
        g = self.generator
        expr = self.as_poly()
        while True:
            lo, hi = _interval_eval(expr, g.lo, g.hi)
            if lo < hi and P.evaluate(mp, lo) != 0 and P.evaluate(mp, hi) != 0 \
                    and P.count_roots(seq, lo, hi) == 1:
                return RealAlgebraic(mp, lo, hi, check=False)
            g = g.bisect()

    def sign(self) -> int:
        if self.is_rational():
            c = self.coords[0]
            return (c > 0) - (c < 0)
        return cmp(self.to_real(), RealAlgebraic.from_rational(0))


def _interval_eval(p: Sequence[Fraction], lo: Fraction, hi: Fraction):
    """Enclosure of p over [lo, hi] by interval Horner evaluation."""
    acc_lo = acc_hi = Fraction(0)
    for c in reversed(p):
        prods = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(prods) + c, max(prods) + c
    return acc_lo, acc_hi
