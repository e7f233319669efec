"""Exact ground fields: Q, F_p and cyclotomic fields Q(zeta_l)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..algnum import poly as P
from ..errors import BadParameter, NotPrime


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % f for f in range(2, int(p ** 0.5) + 1))


@lru_cache(maxsize=None)
def cyclotomic_poly(l: int) -> tuple[Fraction, ...]:
    """Phi_l, low degree first."""
    num = tuple([Fraction(-1)] + [Fraction(0)] * (l - 1) + [Fraction(1)])
    for d in range(1, l):
        if l % d == 0:
            num = P.exact_div(num, cyclotomic_poly(d))
    return num


class GF:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _c(self, o):
        if isinstance(o, GF):
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, Fraction):
            return o.numerator * pow(o.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else GF(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else GF(self.v - o, self.p)

    def __rsub__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else GF(o - self.v, self.p)

    def __mul__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else GF(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GF(-self.v, self.p)

    def inverse(self):
        if not self.v:
            raise ZeroDivisionError("division by zero in F_p")
        return GF(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        o = self._c(o)
        if o is NotImplemented:
            return o
        return self * GF(o, self.p).inverse()

    def __rtruediv__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else self.inverse() * o

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return GF(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, o):
        o = self._c(o)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v} mod {self.p}"

    def __str__(self):
        return str(self.v)


class Cyc:
    """Element of Q(zeta_l) as a polynomial in zeta modulo Phi_l."""

    __slots__ = ("c", "l")

    def __init__(self, coeffs, l: int):
        mod = cyclotomic_poly(l)
        c = P.to_frac(coeffs)
        if len(c) >= len(mod):
            c = P.rem(c, mod)
        self.c = c
        self.l = l

    def _c(self, o):
        if isinstance(o, Cyc):
            return o.c
        if isinstance(o, (int, Fraction)):
            return P.to_frac((o,))
        return NotImplemented

    def __add__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else Cyc(P.add(self.c, o), self.l)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else Cyc(P.sub(self.c, o), self.l)

    def __rsub__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else Cyc(P.sub(o, self.c), self.l)

    def __mul__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else Cyc(P.mul(self.c, o), self.l)

    __rmul__ = __mul__

    def __neg__(self):
        return Cyc(P.neg(self.c), self.l)

    def inverse(self):
        if not self.c:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        _, s, _ = P.xgcd(self.c, cyclotomic_poly(self.l))
        return Cyc(s, self.l)

    def __truediv__(self, o):
        o = self._c(o)
        if o is NotImplemented:
            return o
        return self * Cyc(o, self.l).inverse()

    def __rtruediv__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else Cyc(o, self.l) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyc((1,), self.l)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, o):
        o = self._c(o)
        if o is NotImplemented:
            return False
        return self.c == P.strip(o)

    def __hash__(self):
        return hash((self.c, self.l))

    def __repr__(self):
        return f"Cyc({P.to_str(self.c, 'z')})"

    def __str__(self):
        return P.to_str(self.c, "z")


class ExactField:
    """Factory and metadata for one of the supported exact fields.

    ``kind`` is "Q", "Fp" or "cyclotomic"; ``l`` is the order of the
    distinguished root of unity ``zeta`` (1 if none was requested).
    """

    def __init__(self, kind: str, p: int = 0, l: int = 1):
        self.kind = kind
        self.p = p
        self.l = l
        if kind == "Fp":
            if not _is_prime(p):
                raise NotPrime(f"{p} is not prime")
            if (p - 1) % l:
                raise BadParameter(f"F_{p} has no primitive {l}-th root of unity")
        elif kind == "cyclotomic":
            if l < 1:
                raise BadParameter("l must be positive")
        elif kind != "Q":
            raise BadParameter(f"unknown field kind {kind!r}")

    @classmethod
    def rationals(cls) -> "ExactField":
        return cls("Q")

    @classmethod
    def prime(cls, p: int, l: int = 1) -> "ExactField":
        return cls("Fp", p=p, l=l)

    @classmethod
    def cyclotomic(cls, l: int) -> "ExactField":
        if l <= 2:
            return cls("Q", l=l)
        return cls("cyclotomic", l=l)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    def __call__(self, x):
        if self.kind == "Q":
            return Fraction(x)
        if self.kind == "Fp":
            if isinstance(x, GF):
                return x
            x = Fraction(x)
            return GF(x.numerator * pow(x.denominator, -1, self.p), self.p)
        if isinstance(x, Cyc):
            return x
        return Cyc((Fraction(x),), self.l)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def zeta(self):
        """A primitive l-th root of unity."""
        if self.l == 1:
            return self.one
        if self.kind == "Q":
            if self.l == 2:
                return Fraction(-1)
            raise BadParameter(f"Q has no primitive {self.l}-th root of unity")
        if self.kind == "cyclotomic":
            return Cyc((0, 1), self.l)
        return GF(_primitive_root_of_unity(self.p, self.l), self.p)

    def __eq__(self, other):
        return isinstance(other, ExactField) and (self.kind, self.p, self.l) == \
            (other.kind, other.p, other.l)

    def __hash__(self):
        return hash((self.kind, self.p, self.l))

    def __repr__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F_{self.p}"
        return f"Q(zeta_{self.l})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": self.p, "l": self.l}

    @classmethod
    def from_json(cls, obj) -> "ExactField":
        if isinstance(obj, str):
            if obj == "Q":
                return cls.rationals()
            if obj.startswith("F"):
                return cls.prime(int(obj.lstrip("F_p")))
            if obj.startswith("cyclotomic:"):
                return cls.cyclotomic(int(obj.split(":")[1]))
            raise BadParameter(f"unknown field {obj!r}")
        kind = obj.get("kind", "Q")
        if kind == "cyclotomic":
            return cls.cyclotomic(int(obj["l"]))
        return cls(kind, p=int(obj.get("p", 0)), l=int(obj.get("l", 1)))

    # -- reduction modulo a large prime, for fast closure computations --------

    def reducer(self, q: int, omega: int | None = None):
        """Ring map from (q-integral) field elements to Z/q.

        For cyclotomic fields zeta goes to ``omega``, an l-th root of unity
        mod q; for Q this is ordinary reduction.  Returns None for F_p.
        """
        if self.kind == "Fp":
            return None
        if self.kind == "Q":
            return lambda x: x.numerator * pow(x.denominator, -1, q) % q
        assert omega is not None

        def red(x: Cyc) -> int:
            acc = 0
            for c in reversed(x.c):
                acc = (acc * omega + c.numerator * pow(c.denominator, -1, q)) % q
            return acc
        return red


def _primitive_root_of_unity(p: int, l: int) -> int:
    factors = [f for f in range(2, l + 1) if l % f == 0 and _is_prime(f)]
    for a in range(2, p):
        w = pow(a, (p - 1) // l, p)
        if all(pow(w, l // f, p) != 1 for f in factors):
            return w
    if l == 1:
        return 1
    raise BadParameter(f"no primitive {l}-th root of unity mod {p}")


def modular_prime(l: int, start: int = (1 << 25) + 1) -> tuple[int, int]:
    """A prime q = 1 mod l near ``start`` and a primitive l-th root of unity mod q."""
    q = start
    step = l if l > 1 else 2
    q += (1 - q) % step
    while not _is_prime(q):
        q += step
    return q, _primitive_root_of_unity(q, l) if l > 1 else 1
