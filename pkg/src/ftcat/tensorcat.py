"""Grothendieck-level data of a finite tensor category: FP dimensions,
projective calculus, regular and distinguished objects, Cartan diagnostics.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import linalg
from .algnum import NumberFieldElement, RealAlgebraic, field_solve_eigvector, perron_root
from .errors import (
    Ambiguous,
    CharacteristicMismatch,
    IndexOutOfRange,
    InconsistentData,
    InvalidInput,
    LengthMismatch,
    NegativeEntry,
    NonSquare,
    NotPrime,
    NotTransitive,
)
from .report import Finding
from .ring import BasedRing, validate_ring


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FPData:
    generator: RealAlgebraic
    d: tuple[NumberFieldElement, ...]


class TensorCatData:
    """Fusion ring plus Cartan matrix ``cartan[i][j] = [P_i : L_j]``.

    ``socle[i]`` (optional) is the index of the simple socle of ``P_i``.
    """

    def __init__(self, ring: BasedRing, cartan: Sequence[Sequence[int]],
                 characteristic: int = 0, socle: Sequence[int] | None = None,
                 pivotal_trace_exists: bool | None = None, name: str = ""):
        n = ring.rank
        if len(cartan) != n or any(len(row) != n for row in cartan):
            raise NonSquare(f"Cartan matrix must be {n}x{n}")
        C = tuple(tuple(int(x) for x in row) for row in cartan)
        for i, j in product(range(n), repeat=2):
            if C[i][j] < 0:
                raise NegativeEntry(f"Cartan entry ({i}, {j}) is negative")
        if characteristic != 0 and not is_prime(characteristic):
            raise NotPrime(f"characteristic {characteristic} is neither 0 nor prime")
        if socle is not None:
            socle = tuple(int(s) for s in socle)
            if len(socle) != n:
                raise LengthMismatch("socle must have one entry per simple")
            if sorted(socle) != list(range(n)):
                raise InvalidInput("socle is not a permutation")
        self.ring = ring
        self.cartan = C
        self.characteristic = int(characteristic)
        self.socle = socle
        self.pivotal_trace_exists = pivotal_trace_exists
        self.name = name
        self._fp: FPData | None = None
        self._lock = threading.Lock()

    @property
    def rank(self) -> int:
        return self.ring.rank

    @property
    def labels(self):
        return self.ring.labels

    @property
    def unit(self) -> int:
        return self.ring.unit

    def is_semisimple(self) -> bool:
        n = self.rank
        return all(self.cartan[i][j] == int(i == j) for i in range(n) for j in range(n))

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.rank:
            raise IndexOutOfRange(f"projective index {i} out of range")

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        obj = self.ring.to_json()
        obj["cartan"] = [list(r) for r in self.cartan]
        obj["characteristic"] = self.characteristic
        if self.socle is not None:
            obj["socle"] = {self.labels[i]: self.labels[s] for i, s in enumerate(self.socle)}
        if self.pivotal_trace_exists is not None:
            obj["pivotal_trace_exists"] = self.pivotal_trace_exists
        if self.name:
            obj["name"] = self.name
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "TensorCatData":
        ring = BasedRing.from_json(obj)
        if "cartan" not in obj:
            cartan = [[int(i == j) for j in range(ring.rank)] for i in range(ring.rank)]
        else:
            cartan = obj["cartan"]
            if not isinstance(cartan, list) or not all(isinstance(r, list) for r in cartan):
                raise InvalidInput("cartan must be a list of lists")
            if any(not isinstance(x, int) or isinstance(x, bool) for r in cartan for x in r):
                raise InvalidInput("cartan entries must be integers")
        char = obj.get("characteristic", 0)
        if not isinstance(char, int) or char < 0:
            raise InvalidInput("characteristic must be a nonnegative integer")
        socle = None
        if obj.get("socle") is not None:
            sm = obj["socle"]
            if not isinstance(sm, dict):
                raise InvalidInput("socle must map labels to labels")
            socle = [ring.index(str(sm[lab])) if lab in sm else None for lab in ring.labels]
            if None in socle:
                raise InvalidInput("socle undefined on some label")
        piv = obj.get("pivotal_trace_exists")
        return cls(ring, cartan, char, socle, piv, obj.get("name", ""))

    # -- FP dimensions --------------------------------------------------------

    def fusion_matrix(self, i: int) -> list[list[int]]:
        """Row j is the class of L_i L_j; d is an eigenvector with eigenvalue d_i."""
        return [list(self.ring.N[i][j]) for j in range(self.rank)]

    def fpdims(self) -> FPData:
        with self._lock:
            if self._fp is None:
                self._fp = _compute_fpdims(self.ring)
            return self._fp

    @property
    def generator(self) -> RealAlgebraic:
        return self.fpdims().generator

    @property
    def d(self) -> tuple[NumberFieldElement, ...]:
        return self.fpdims().d

    def field_element(self, q) -> NumberFieldElement:
        return NumberFieldElement.from_rational(self.generator, q)

    def fpdim_object(self, x: Sequence) -> NumberFieldElement:
        if len(x) != self.rank:
            raise LengthMismatch(f"vector of length {len(x)} for rank {self.rank}")
        total = self.field_element(0)
        for xi, di in zip(x, self.d):
            if xi:
                total = total + di * xi
        return total

    def projective_class(self, i: int) -> list[int]:
        return list(self.cartan[i])

    def fpdim_projective(self, i: int) -> NumberFieldElement:
        return self.fpdim_object(self.cartan[i])

    def fpdim_kvector(self, v: Sequence) -> NumberFieldElement:
        total = self.field_element(0)
        for i, c in enumerate(v):
            if c:
                total = total + self.fpdim_projective(i) * c
        return total

    def fpdim_category(self) -> NumberFieldElement:
        return self.fpdim_kvector(self.d)


def _compute_fpdims(ring: BasedRing) -> FPData:
    if not ring.is_transitive():
        raise NotTransitive("FP dimensions need a transitive ring")
    n = ring.rank
    T = ring.total_matrix()
    lam = perron_root(T)
    Tt = [[T[j][i] for j in range(n)] for i in range(n)]
    d = field_solve_eigvector(Tt, NumberFieldElement.gen(lam), ring.unit)
    # exact character check and positivity
    for i in range(n):
        for j in range(n):
            lhs = sum((d[k] * ring.N[i][j][k] for k in range(n) if ring.N[i][j][k]),
                      start=d[0] * 0)
            if lhs != d[i] * d[j]:
                raise InconsistentData(f"FP vector fails the character identity at ({i}, {j})")
    for i, di in enumerate(d):
        if di.sign() <= 0:
            raise InconsistentData(f"FP dimension of simple {i} is not positive")
    return FPData(lam, tuple(d))


# -- category-level validation ------------------------------------------------

def validate_category(cat: TensorCatData, strict: bool = False) -> list[Finding]:
    out = list(validate_ring(cat.ring, strict))
    n = cat.rank
    C = cat.cartan
    L = cat.labels
    for i in range(n):
        if C[i][i] < 1:
            out.append(Finding("cartan_top", f"L_{L[i]} does not occur in P_{L[i]}", (i,)))
    if cat.socle is not None:
        for i, s in enumerate(cat.socle):
            if C[i][s] < 1:
                out.append(Finding("cartan_socle", f"socle L_{L[s]} does not occur in P_{L[i]}", (i, s)))
        if cat.is_semisimple() and any(s != i for i, s in enumerate(cat.socle)):
            out.append(Finding("socle_semisimple", "semisimple category with non-identity socle", ()))
    rows = set(C)
    for i in range(n):
        dual = [0] * n
        for j in range(n):
            dual[cat.ring.star[j]] = C[i][j]
        if tuple(dual) not in rows:
            out.append(Finding("cartan_duality", f"dual of P_{L[i]} is not the class of a projective", (i,)))
    return out


# -- projective calculus -------------------------------------------------------

def proj_tensor(cat: TensorCatData, i: int, z: Sequence, side: str = "right") -> list:
    """Class of P_i (x) Z (right) or Z (x) P_i (left) in the basis of projectives."""
    cat._check_index(i)
    if side not in ("right", "left"):
        raise InvalidInput(f"side must be 'right' or 'left', not {side!r}")
    n = cat.rank
    if len(z) != n:
        raise LengthMismatch(f"vector of length {len(z)} for rank {n}")
    N, s = cat.ring.N, cat.ring.star
    out = [0] * n
    for j, zj in enumerate(z):
        if not zj:
            continue
        for k in range(n):
            m = N[k][s[j]][i] if side == "right" else N[cat.ring.star_inv(j)][k][i]
            if m:
                out[k] = out[k] + m * zj
    return out


def proj_fusion_right(cat: TensorCatData, i: int, j: int) -> list[int]:
    cat._check_index(j)
    return proj_tensor(cat, i, cat.cartan[j], "right")


def proj_fusion_left(cat: TensorCatData, i: int, j: int) -> list[int]:
    cat._check_index(i)
    return proj_tensor(cat, j, cat.cartan[i], "left")


def proj_fusion(cat: TensorCatData, i: int, j: int) -> list[int]:
    """Multiplicities B_ij^k of P_k in P_i (x) P_j, computed from both sides."""
    right = proj_fusion_right(cat, i, j)
    left = proj_fusion_left(cat, i, j)
    if right != left:
        raise InconsistentData(f"P_{i} (x) P_{j}: right formula {right} != left formula {left}")
    return right


def regular_object(cat: TensorCatData) -> list[NumberFieldElement]:
    return list(cat.d)


def regular_eigen_findings(cat: TensorCatData) -> list[Finding]:
    """X R = R X = d(X) R for every simple X, on the K-group level."""
    d = cat.d
    out = []
    for x in range(cat.rank):
        ex = cat.ring.basis_vector(x)
        want = [d[x] * dk for dk in d]
        for side in ("right", "left"):
            total = [cat.field_element(0)] * cat.rank
            for i, di in enumerate(d):
                v = proj_tensor(cat, i, ex, side)
                total = [t + di * c for t, c in zip(total, v)]
            if total != want:
                out.append(Finding("regular_eigen", f"{side} product with L_{cat.labels[x]} "
                                   "is not d(X) times the regular object", (x, side)))
    return out


# -- distinguished invertible object -------------------------------------------

@dataclass(frozen=True)
class Distinguished:
    rho: int
    D: tuple[int, ...]


def _pair_problems(cat: TensorCatData, rho: int, D: Sequence[int]) -> list[str]:
    ring = cat.ring
    n, N, s = cat.rank, ring.N, ring.star
    C = cat.cartan
    problems = []
    for i, j in product(range(n), repeat=2):
        if N[rho][s[j]][i] != int(D[i] == j):
            problems.append(f"delta condition fails at (i, j) = ({i}, {j})")
            break
    for i, j in product(range(n), repeat=2):
        if C[D[i]][s[j]] != C[i][j]:
            problems.append(f"Cartan rows do not match under duality at ({i}, {j})")
            break
    if not ring.is_invertible(rho):
        problems.append(f"L_{cat.labels[rho]} is not invertible")
    elif ring.is_transitive() and cat.d[rho] != 1:
        problems.append(f"L_{cat.labels[rho]} has FP dimension other than 1")
    e_rho = ring.basis_vector(rho)
    for i in range(n):
        got = proj_tensor(cat, ring.star_inv(i), e_rho, "right")
        if got != ring.basis_vector(D[i]):
            problems.append(f"P_D({i}) is not P_*{i} (x) L_rho")
            break
    for i in range(n):
        if D[D[i]] != s[s[i]]:
            problems.append(f"D^2 differs from star^2 at {i}")
            break
    # L_{i**} = L_rho^* L_{**i} L_rho on classes
    rho_dual = ring.basis_vector(s[rho])
    for i in range(n):
        inner = ring.basis_vector(ring.star_inv(ring.star_inv(i)))
        rhs = ring.gr_mul(ring.gr_mul(rho_dual, inner), e_rho)
        if rhs != ring.basis_vector(s[s[i]]):
            problems.append(f"double dual identity fails at {i}")
            break
    return problems


def _D_from_delta(cat: TensorCatData, rho: int) -> tuple[int, ...] | None:
    n, N, s = cat.rank, cat.ring.N, cat.ring.star
    D = []
    for i in range(n):
        js = [j for j in range(n) if N[rho][s[j]][i]]
        if len(js) != 1:
            return None
        D.append(js[0])
    if sorted(D) != list(range(n)):
        return None
    return tuple(D)


def distinguished_candidates(cat: TensorCatData) -> list[Distinguished]:
    out = []
    for rho in range(cat.rank):
        if not cat.ring.is_invertible(rho):
            continue
        D = _D_from_delta(cat, rho)
        if D is not None and not _pair_problems(cat, rho, D):
            out.append(Distinguished(rho, D))
    return out


def distinguished(cat: TensorCatData) -> Distinguished:
    """The distinguished invertible object L_rho and the permutation D with
    P_i^* = P_D(i)."""
    ring = cat.ring
    if cat.socle is not None:
        D = tuple(ring.star[cat.socle[i]] for i in range(cat.rank))
        rho = D[ring.unit]
        problems = _pair_problems(cat, rho, D)
        if problems:
            raise InconsistentData("; ".join(problems))
        return Distinguished(rho, D)
    cands = distinguished_candidates(cat)
    if not cands:
        raise InconsistentData("no invertible object satisfies the distinguished-object conditions")
    if len(cands) > 1:
        raise Ambiguous(f"{len(cands)} consistent distinguished objects; supply socle data",
                        cands)
    return cands[0]


def is_unimodular(cat: TensorCatData) -> bool:
    return distinguished(cat).rho == cat.unit


# -- Cartan diagnostics ---------------------------------------------------------

@dataclass
class CartanRank:
    rational: int
    modular: int | None
    size: int
    findings: list[Finding] = field(default_factory=list)

    @property
    def ground(self) -> int:
        return self.rational if self.modular is None else self.modular

    @property
    def degenerate(self) -> bool:
        return self.ground < self.size


def cartan_rank(cat: TensorCatData) -> CartanRank:
    rows = [[Fraction(x) for x in r] for r in cat.cartan]
    rq = linalg.rank(rows)
    rp = linalg.rank_mod_p(cat.cartan, cat.characteristic) if cat.characteristic else None
    res = CartanRank(rq, rp, cat.rank)
    if cat.pivotal_trace_exists and not cat.is_semisimple() and not res.degenerate:
        res.findings.append(Finding(
            "lorentz_violation",
            "nonsemisimple data with a pivotal trace must have a degenerate Cartan matrix "
            "over the ground field", ()))
    return res


def integrality_flag(cat: TensorCatData) -> bool:
    return all(di.is_rational() and di.as_fraction().denominator == 1 for di in cat.d)


@dataclass
class Inequality:
    holds: bool
    slack: NumberFieldElement
    findings: list[Finding] = field(default_factory=list)


def dimension_inequality(cat: TensorCatData) -> Inequality:
    """d+(C) - N d+(P_unit) with N the number of simples."""
    slack = cat.fpdim_category() - cat.fpdim_projective(cat.unit) * cat.rank
    sign = slack.sign()
    res = Inequality(sign >= 0, slack)
    if sign < 0:
        res.findings.append(Finding("dimension_inequality",
                                    "d+(C) is smaller than N d+(P_unit)", ()))
    return res


# -- Deligne product ------------------------------------------------------------

def deligne_product(a: TensorCatData, b: TensorCatData) -> TensorCatData:
    if a.characteristic != b.characteristic:
        raise CharacteristicMismatch(
            f"characteristics {a.characteristic} and {b.characteristic} differ")
    na, nb = a.rank, b.rank
    pairs = [(i, j) for i in range(na) for j in range(nb)]
    idx = {p: k for k, p in enumerate(pairs)}
    labels = [f"({a.labels[i]},{b.labels[j]})" for i, j in pairs]
    Na, Nb = a.ring.N, b.ring.N
    N = [[[Na[p[0]][q[0]][r[0]] * Nb[p[1]][q[1]][r[1]] for r in pairs] for q in pairs]
         for p in pairs]
    units = [idx[(u, v)] for u in a.ring.units for v in b.ring.units]
    star = [idx[(a.ring.star[i], b.ring.star[j])] for i, j in pairs]
    ring = BasedRing(labels, units, N, star)
    C = [[a.cartan[p[0]][q[0]] * b.cartan[p[1]][q[1]] for q in pairs] for p in pairs]
    socle = None
    if a.socle is not None and b.socle is not None:
        socle = [idx[(a.socle[i], b.socle[j])] for i, j in pairs]
    piv = True if (a.pivotal_trace_exists and b.pivotal_trace_exists) else None
    name = f"{a.name}*{b.name}" if a.name and b.name else ""
    return TensorCatData(ring, C, a.characteristic, socle, piv, name)
