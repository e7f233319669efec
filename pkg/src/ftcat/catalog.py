"""Builders for standard example categories and module-category censuses."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from math import gcd, lcm, prod
from typing import Sequence

from .errors import BadParameter, InvalidInput, NotPrime, UnsupportedGroup
from .ring import BasedRing, group_ring
from .tensorcat import TensorCatData, is_prime


# -- groups -----------------------------------------------------------------------

def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors(orders: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors n_1 | n_2 | ... of a product of cyclic groups."""
    exps: dict[int, list[int]] = {}
    for n in orders:
        for p, e in _prime_factors(n).items():
            exps.setdefault(p, []).append(e)
    length = max((len(v) for v in exps.values()), default=0)
    factors = [1] * length
    for p, es in exps.items():
        es = sorted(es, reverse=True)
        for t, e in enumerate(es):
            factors[length - 1 - t] *= p ** e
    return tuple(f for f in factors if f > 1)


@dataclass(frozen=True)
class GroupSpec:
    """Finite abelian group by invariant factors, or a stored named group."""

    factors: tuple[int, ...] = ()
    name: str | None = None

    def __post_init__(self):
        if self.name is not None:
            if self.name not in STORED_GROUPS:
                raise UnsupportedGroup(f"no stored data for group {self.name!r}")
            return
        for f in self.factors:
            if f < 2:
                raise BadParameter("invariant factors must be at least 2")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise BadParameter(f"invariant factors {self.factors} are not a divisibility chain")

    @classmethod
    def abelian(cls, *orders: int) -> "GroupSpec":
        if any(o < 1 for o in orders):
            raise BadParameter("cyclic orders must be positive")
        return cls(invariant_factors(orders))

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        t = text.strip()
        if t.upper() == "S3":
            return cls(name="S3")
        if t in ("1", "trivial"):
            return cls(())
        parts = re.split(r"[x×*]", t.replace("Z/", "").replace("Z", ""))
        try:
            orders = [int(p) for p in parts if p]
        except ValueError:
            raise UnsupportedGroup(f"cannot parse group {text!r}") from None
        if not orders:
            raise UnsupportedGroup(f"cannot parse group {text!r}")
        return cls.abelian(*orders)

    @property
    def is_abelian(self) -> bool:
        return self.name is None

    @property
    def order(self) -> int:
        if self.name is not None:
            return STORED_GROUPS[self.name]["order"]
        return prod(self.factors)

    def elements(self) -> list[tuple[int, ...]]:
        self._require_abelian()
        return list(product(*(range(f) for f in self.factors)))

    def add(self, a, b):
        return tuple((x + y) % f for x, y, f in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % f for x, f in zip(a, self.factors))

    def zero(self):
        return tuple(0 for _ in self.factors)

    def _require_abelian(self):
        if self.name is not None:
            raise UnsupportedGroup(f"{self.name} is only available as stored data")

    def label(self, a) -> str:
        if len(self.factors) == 1:
            return str(a[0])
        return "(" + ",".join(map(str, a)) + ")"

    def __str__(self):
        if self.name is not None:
            return self.name
        return "x".join(f"Z{f}" for f in self.factors) or "1"


STORED_GROUPS = {"S3": {"order": 6}}


def subgroups(G: GroupSpec) -> list[frozenset]:
    """All subgroups of a finite abelian group, sorted by order then elements.

    A subgroup of a group with r invariant factors needs at most r
    generators, so generating from all r-tuples is exhaustive.
    """
    G._require_abelian()
    elems = G.elements()
    r = max(len(G.factors), 1)
    found = set()
    for gens in product(elems, repeat=r):
        H = {G.zero()}
        frontier = [G.zero()]
        while frontier:
            h = frontier.pop()
            for g in gens:
                x = G.add(h, g)
                if x not in H:
                    H.add(x)
                    frontier.append(x)
        found.add(frozenset(H))
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def element_order(G: GroupSpec, a) -> int:
    return lcm(*(f // gcd(f, x) for x, f in zip(a, G.factors)))


def subgroup_invariant_factors(G: GroupSpec, H) -> tuple[int, ...]:
    """Invariant factors of a subgroup, read off from the sizes of its
    p^k-torsion subgroups: log_p |H[p^k]| - log_p |H[p^(k-1)]| counts the
    cyclic p-factors of exponent at least k."""
    orders = [element_order(G, h) for h in H]
    cyclic = []
    for p, e in _prime_factors(len(H)).items():
        t = [0]
        while t[-1] < e:
            k = len(t)
            t.append(_log(sum(1 for o in orders if (p ** k) % o == 0), p))
        at_least = [t[k] - t[k - 1] for k in range(1, len(t))] + [0]
        for k in range(len(at_least) - 1):
            cyclic += [p ** (k + 1)] * (at_least[k] - at_least[k + 1])
    return invariant_factors(cyclic)


def _p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def _log(t: int, p: int) -> int:
    c = 0
    while t > 1:
        if t % p:
            raise ArithmeticError("torsion count is not a prime power")
        t //= p
        c += 1
    return c


def wedge2_order(factors: Sequence[int], characteristic: int = 0) -> int:
    """|H^2(H, k^*)| = |wedge^2 H|, with the p-part dropped in characteristic p."""
    total = 1
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            total *= gcd(factors[i], factors[j])
    if characteristic:
        total //= _p_part(total, characteristic)
    return total


@dataclass(frozen=True)
class RepGCount:
    total: int
    items: tuple[tuple[str, int, int], ...]  # (subgroup, order, multiplier size)


def count_repG_module_cats(spec: GroupSpec, characteristic: int = 0) -> RepGCount:
    """Number of pairs (H, psi): subgroups H with a class in H^2(H, k^*)."""
    if not spec.is_abelian:
        raise UnsupportedGroup("the module-category count is implemented for abelian groups")
    if characteristic and not is_prime(characteristic):
        raise NotPrime(f"characteristic {characteristic} is not prime")
    items = []
    for H in subgroups(spec):
        inv = subgroup_invariant_factors(spec, H)
        m = wedge2_order(inv, characteristic)
        desc = "x".join(f"Z{f}" for f in inv) or "1"
        gens = ",".join(spec.label(h) for h in sorted(H))
        items.append((f"{desc} {{{gens}}}", len(H), m))
    return RepGCount(sum(m for _, _, m in items), tuple(items))


# -- builders -----------------------------------------------------------------------

def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def build_vec() -> TensorCatData:
    ring = BasedRing(["1"], 0, [[[1]]], [0])
    return TensorCatData(ring, [[1]], 0, [0], True, "vec")


def build_taft(l: int, characteristic: int = 0) -> TensorCatData:
    """Grothendieck data of Rep(H_l), simples indexed by characters of g.

    With g acting on L_i by zeta^i and g x g^-1 = zeta x, the projective
    cover P_i = H e_i has basis x^m e_i of g-weight zeta^(i+m), so its
    socle is L_(i-1).
    """
    if not isinstance(l, int) or l < 2:
        raise BadParameter("Taft algebras need l >= 2")
    if characteristic and l % characteristic == 0:
        raise BadParameter("the characteristic must not divide l")
    ring = group_ring(l)
    cartan = [[1] * l for _ in range(l)]
    socle = [(i - 1) % l for i in range(l)]
    return TensorCatData(ring, cartan, characteristic, socle, True, f"taft:{l}")


def build_modular_cyclic(p: int, n: int = 1) -> TensorCatData:
    """Rep(Z/p^n) over a field of characteristic p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise BadParameter("exponent must be at least 1")
    ring = BasedRing(["1"], 0, [[[1]]], [0])
    return TensorCatData(ring, [[p ** n]], p, [0], True, f"modular-cyclic:{p}^{n}")


def fibonacci_ring() -> BasedRing:
    return BasedRing.from_rules(["1", "X"], "1", {"1": "1", "X": "X"},
                                {("X", "X"): {"1": 1, "X": 1}})


def build_fibonacci() -> TensorCatData:
    return TensorCatData(fibonacci_ring(), _identity(2), 0, [0, 1], True, "fibonacci")


def pointed_ring(spec: GroupSpec) -> BasedRing:
    spec._require_abelian()
    elems = spec.elements()
    pos = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    N = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a, b in product(elems, repeat=2):
        N[pos[a]][pos[b]][pos[spec.add(a, b)]] = 1
    star = [pos[spec.neg(g)] for g in elems]
    return BasedRing([spec.label(g) for g in elems], pos[spec.zero()], N, star)


def build_pointed(spec: GroupSpec, characteristic: int = 0) -> TensorCatData:
    ring = pointed_ring(spec)
    n = ring.rank
    return TensorCatData(ring, _identity(n), characteristic, list(range(n)), True,
                         f"pointed:{spec}")


def s3_ring() -> BasedRing:
    return BasedRing.from_rules(
        ["1", "sgn", "V"], "1", {"1": "1", "sgn": "sgn", "V": "V"},
        {("sgn", "sgn"): {"1": 1}, ("sgn", "V"): {"V": 1}, ("V", "sgn"): {"V": 1},
         ("V", "V"): {"1": 1, "sgn": 1, "V": 1}})


def build_group_semisimple(spec: GroupSpec) -> TensorCatData:
    """Rep(G) in characteristic 0; abelian G or the stored group S3."""
    if spec.name == "S3":
        return TensorCatData(s3_ring(), _identity(3), 0, [0, 1, 2], True, "group:S3")
    if not spec.is_abelian:
        raise UnsupportedGroup(f"no character data for {spec}")
    cat = build_pointed(spec, 0)
    cat.name = f"group:{spec}"
    return cat


# -- components -----------------------------------------------------------------------

def direct_sum(a: BasedRing, b: BasedRing) -> BasedRing:
    na, nb = a.rank, b.rank
    n = na + nb
    N = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, j, k in product(range(na), repeat=3):
        N[i][j][k] = a.N[i][j][k]
    for i, j, k in product(range(nb), repeat=3):
        N[na + i][na + j][na + k] = b.N[i][j][k]
    labels = [f"a.{x}" for x in a.labels] + [f"b.{x}" for x in b.labels]
    units = list(a.units) + [na + u for u in b.units]
    star = list(a.star) + [na + s for s in b.star]
    return BasedRing(labels, units, N, star)


def decompose_components(r: BasedRing) -> list[BasedRing]:
    """Split a ring along the connected components of its fusion support."""
    n = r.rank
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for i, j, k in product(range(n), repeat=3):
        if r.N[i][j][k]:
            union(i, j)
            union(j, k)
    for i in range(n):
        union(i, r.star[i])
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = []
    for members in sorted(groups.values()):
        pos = {old: new for new, old in enumerate(members)}
        N = [[[r.N[a][b][c] for c in members] for b in members] for a in members]
        units = [pos[u] for u in r.units if u in pos]
        if not units:
            raise InvalidInput("component without a unit summand")
        out.append(BasedRing([r.labels[a] for a in members], units, N,
                             [pos[r.star[a]] for a in members]))
    return out


# -- census -----------------------------------------------------------------------

@dataclass(frozen=True)
class CensusEntry:
    description: str
    simple_count: int
    parameter_dimension: int


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def taft_module_census(l: int) -> list[CensusEntry]:
    """Indecomposable exact module categories over Rep(H_l): for each
    divisor d of l, one nonsemisimple category and one one-parameter
    family of semisimple ones, each with d simple objects."""
    if l < 2:
        raise BadParameter("l must be at least 2")
    out = []
    for d in divisors(l):
        out.append(CensusEntry("nonsemisimple", d, 0))
        out.append(CensusEntry("semisimple family", d, 1))
    return out


# -- functor data for the standard examples ----------------------------------------------

def taft_restriction(l: int):
    """Restriction Rep(H_l) -> Rep(Z/l) along k[g] in H_l."""
    from .functors import FunctorData
    src = build_taft(l)
    tgt = build_pointed(GroupSpec.abelian(l))
    A = _identity(l)
    B = [[1] * l for _ in range(l)]
    return FunctorData(src, tgt, A, B)


def taft_inclusion(l: int):
    """Rep(Z/l) -> Rep(H_l) through the Hopf projection H_l -> k[g]."""
    from .functors import FunctorData
    src = build_pointed(GroupSpec.abelian(l))
    tgt = build_taft(l)
    return FunctorData(src, tgt, _identity(l), None)


def s3_restriction():
    """Rep(S3) -> Rep(Z/3) in characteristic 0."""
    from .functors import FunctorData
    src = build_group_semisimple(GroupSpec(name="S3"))
    tgt = build_pointed(GroupSpec.abelian(3))
    A = [[1, 0, 0], [1, 0, 0], [0, 1, 1]]
    B = [list(col) for col in zip(*A)]
    return FunctorData(src, tgt, A, B)


def z2_center():
    """Rep(D(Z/2)) with the forgetful functor to Vec_{Z/2}."""
    from .functors import FunctorData
    c = build_pointed(GroupSpec.abelian(2))
    z = build_pointed(GroupSpec.abelian(2, 2))
    # simple (a, chi) of the double forgets to the grading a
    A = [[int(g[0] == h) for h in range(2)] for g in GroupSpec.abelian(2, 2).elements()]
    B = [list(col) for col in zip(*A)]
    return FunctorData(z, c, A, B)


def identity_functor(cat: TensorCatData):
    from .functors import FunctorData
    n = cat.rank
    return FunctorData(cat, cat, _identity(n), _identity(n))


# -- names -----------------------------------------------------------------------

def build_named(name: str) -> TensorCatData:
    """``taft:l``, ``modular-cyclic:p^n``, ``group:S3``, ``group:2x2``,
    ``pointed:2x2``, ``fibonacci``, ``vec``."""
    key, _, arg = name.strip().partition(":")
    key = key.lower()
    try:
        if key == "taft":
            return build_taft(int(arg))
        if key == "modular-cyclic":
            p, _, n = arg.partition("^")
            return build_modular_cyclic(int(p), int(n) if n else 1)
        if key == "group":
            return build_group_semisimple(GroupSpec.parse(arg))
        if key == "pointed":
            return build_pointed(GroupSpec.parse(arg))
    except ValueError as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise BadParameter(f"bad parameter in {name!r}") from None
    if key == "fibonacci":
        return build_fibonacci()
    if key == "vec":
        return build_vec()
    raise BadParameter(f"unknown example {name!r}")


EXAMPLE_NAMES = ("vec", "fibonacci", "taft:2", "taft:3", "taft:4", "taft:6",
                 "modular-cyclic:2^1", "modular-cyclic:3^1", "modular-cyclic:2^2",
                 "group:S3", "group:2", "pointed:2x2", "pointed:3", "pointed:4")
