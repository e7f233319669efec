"""Quasi-tensor functors on the level of Grothendieck rings and K-groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algnum import NumberFieldElement, RealAlgebraic, is_algebraic_integer
from .errors import (
    FieldEmbeddingFailed,
    ImageCartanUnavailable,
    InvalidInput,
    LengthMismatch,
    NegativeEntry,
    NotASubring,
    NotSurjective,
    PropertyFailure,
)
from .report import Finding
from .ring import BasedRing
from .tensorcat import TensorCatData, integrality_flag


def _matrix(M, rows: int, cols: int, what: str) -> tuple[tuple[int, ...], ...]:
    if len(M) != rows or any(len(r) != cols for r in M):
        raise LengthMismatch(f"{what} must be {rows}x{cols}")
    out = tuple(tuple(int(x) for x in r) for r in M)
    if any(x < 0 for r in out for x in r):
        raise NegativeEntry(f"{what} has a negative entry")
    return out


class FunctorData:
    """``A[i]`` is the class of F(L_i) in Gr(target); ``B[j][i]`` is the
    multiplicity of P'_j in F(P_i).  ``B`` is None when F does not send
    projectives to projectives.  ``image_cartan`` optionally gives the
    Cartan matrix of the image, indexed by the image labels in increasing
    target order.
    """

    def __init__(self, source: TensorCatData, target: TensorCatData,
                 A: Sequence[Sequence[int]], B: Sequence[Sequence[int]] | None = None,
                 image_cartan: Sequence[Sequence[int]] | None = None):
        self.source = source
        self.target = target
        self.A = _matrix(A, source.rank, target.rank, "A")
        self.B = None if B is None else _matrix(B, target.rank, source.rank, "B")
        self.image_cartan = None
        if image_cartan is not None:
            m = len(image_labels(self))
            self.image_cartan = _matrix(image_cartan, m, m, "image Cartan matrix")

    def apply(self, x: Sequence[int]) -> list[int]:
        """Class of F(X) for X with class x."""
        out = [0] * self.target.rank
        for i, c in enumerate(x):
            if c:
                for j, a in enumerate(self.A[i]):
                    out[j] += c * a
        return out

    @classmethod
    def from_json(cls, obj: dict, source: TensorCatData, target: TensorCatData) -> "FunctorData":
        if "A" not in obj:
            raise InvalidInput("functor JSON needs a matrix 'A'")
        return cls(source, target, obj["A"], obj.get("B"), obj.get("image_cartan"))

    def to_json(self) -> dict:
        out = {"source": self.source.to_json(), "target": self.target.to_json(),
               "A": [list(r) for r in self.A]}
        if self.B is not None:
            out["B"] = [list(r) for r in self.B]
        if self.image_cartan is not None:
            out["image_cartan"] = [list(r) for r in self.image_cartan]
        return out


def _same_real(a, b) -> bool:
    return _real(a) == _real(b)


def _real(a) -> RealAlgebraic:
    if isinstance(a, NumberFieldElement):
        return a.to_real()
    if isinstance(a, (int, Fraction)):
        return RealAlgebraic.from_rational(a)
    return a


def validate_functor(f: FunctorData) -> list[Finding]:
    src, tgt = f.source, f.target
    out: list[Finding] = []
    for i, row in enumerate(f.A):
        if not any(row):
            out.append(Finding("faithfulness", f"F(L_{src.labels[i]}) is zero", (i,)))
    if f.B is not None:
        for i in range(src.rank):
            via_simples = f.apply(src.cartan[i])
            via_proj = [0] * tgt.rank
            for j in range(tgt.rank):
                b = f.B[j][i]
                if b:
                    for m in range(tgt.rank):
                        via_proj[m] += b * tgt.cartan[j][m]
            if via_simples != via_proj:
                out.append(Finding("gr_k_compatibility",
                                   f"class of F(P_{src.labels[i]}) differs between A and B", (i,)))
    if list(f.A[src.unit]) != tgt.ring.unit_vector():
        out.append(Finding("unit", "F(1) is not the unit object", (src.unit,)))
    N = src.ring.N
    for i in range(src.rank):
        for j in range(src.rank):
            lhs = f.apply(N[i][j])
            rhs = tgt.ring.gr_mul(f.A[i], f.A[j])
            if lhs != rhs:
                out.append(Finding("multiplicativity",
                                   f"F(L_{src.labels[i]} L_{src.labels[j]}) != F(L_{src.labels[i]}) F(L_{src.labels[j]})",
                                   (i, j)))
    if src.ring.is_transitive() and tgt.ring.is_transitive():
        for i in range(src.rank):
            if not _same_real(tgt.fpdim_object(f.A[i]), src.d[i]):
                out.append(Finding("fp_preservation",
                                   f"F changes the FP dimension of L_{src.labels[i]}", (i,)))
    return out


# -- image ------------------------------------------------------------------------------

def image_labels(f: FunctorData) -> list[int]:
    """Target labels occurring in some F(L_i), closed under fusion and duality."""
    tgt = f.target.ring
    labels = {j for row in f.A for j, a in enumerate(row) if a}
    changed = True
    while changed:
        changed = False
        for a in list(labels):
            if tgt.star[a] not in labels:
                labels.add(tgt.star[a])
                changed = True
            for b in list(labels):
                for k, m in enumerate(tgt.N[a][b]):
                    if m and k not in labels:
                        labels.add(k)
                        changed = True
    return sorted(labels)


def _restrict_ring(r: BasedRing, members: Sequence[int]) -> BasedRing:
    pos = {old: new for new, old in enumerate(members)}
    N = [[[r.N[a][b][c] for c in members] for b in members] for a in members]
    units = [pos[u] for u in r.units if u in pos]
    return BasedRing([r.labels[a] for a in members], units, N, [pos[r.star[a]] for a in members])


@dataclass
class Image:
    labels: list[int]
    ring: BasedRing
    cartan: tuple[tuple[int, ...], ...] | None
    cartan_source: str


def _is_identity(M) -> bool:
    return all(M[i][j] == int(i == j) for i in range(len(M)) for j in range(len(M)))


def image_closure(f: FunctorData) -> Image:
    """The image subcategory at ring level, with a Cartan matrix when one
    can be obtained soundly: supplied data; identity when the source is
    semisimple; the target's when the image contains every simple and
    every target projective occurs in some F(P_i)."""
    labels = image_labels(f)
    ring = _restrict_ring(f.target.ring, labels)
    m = len(labels)
    if f.image_cartan is not None:
        return Image(labels, ring, f.image_cartan, "supplied")
    if f.source.is_semisimple():
        ident = tuple(tuple(int(i == j) for j in range(m)) for i in range(m))
        return Image(labels, ring, ident, "semisimple source")
    if m == f.target.rank and f.B is not None and all(any(row) for row in f.B):
        return Image(labels, ring, f.target.cartan, "contains all target projectives")
    return Image(labels, ring, None, "unavailable")


def image_fpdim(f: FunctorData, img: Image | None = None) -> NumberFieldElement:
    """d+(Im F) with FP dimensions taken from the target."""
    img = img or image_closure(f)
    if img.cartan is None:
        raise ImageCartanUnavailable("no Cartan data for the image of the functor")
    d = f.target.d
    total = f.target.field_element(0)
    for a, ja in enumerate(img.labels):
        proj = f.target.field_element(0)
        for b, jb in enumerate(img.labels):
            if img.cartan[a][b]:
                proj = proj + d[jb] * img.cartan[a][b]
        total = total + d[ja] * proj
    return total


@dataclass
class SurjInj:
    surjective: bool | None
    injective: bool | None
    image_dim: NumberFieldElement | None
    findings: list[Finding] = field(default_factory=list)


def analyze(f: FunctorData) -> SurjInj:
    src_dim = f.source.fpdim_category().to_real()
    tgt_dim = f.target.fpdim_category().to_real()
    img = image_closure(f)
    res = SurjInj(None, None, None)
    if img.cartan is not None:
        dim = image_fpdim(f, img)
        res.image_dim = dim
        real = dim.to_real()
        res.surjective = real == tgt_dim
        res.injective = real == src_dim
    else:
        if len(img.labels) < f.target.rank or src_dim < tgt_dim:
            res.surjective = False
        rows_ok = all(sum(r) == 1 for r in f.A) and len(set(f.A)) == len(f.A)
        if src_dim > tgt_dim or not rows_ok:
            res.injective = False
    if res.surjective and src_dim == tgt_dim:
        AB = [[sum(f.A[i][j] * f.B[j][k] for j in range(f.target.rank))
               for k in range(f.source.rank)] for i in range(f.source.rank)] if f.B else None
        if AB is None or not _is_identity(AB):
            res.findings.append(Finding("equivalence_check",
                                        "equal dimensions but A.B is not the identity", ()))
    return res


def is_surjective(f: FunctorData) -> bool:
    r = analyze(f).surjective
    if r is None:
        raise ImageCartanUnavailable("surjectivity undetermined without Cartan data for the image")
    return r


def is_injective(f: FunctorData) -> bool:
    r = analyze(f).injective
    if r is None:
        raise ImageCartanUnavailable("injectivity undetermined without Cartan data for the image")
    return r


def compose(first: FunctorData, second: FunctorData) -> FunctorData:
    """second after first."""
    if first.target is not second.source and first.target.to_json() != second.source.to_json():
        raise InvalidInput("functors are not composable")
    A = [[sum(first.A[i][j] * second.A[j][k] for j in range(first.target.rank))
          for k in range(second.target.rank)] for i in range(first.source.rank)]
    B = None
    if first.B is not None and second.B is not None:
        B = [[sum(second.B[k][j] * first.B[j][i] for j in range(first.target.rank))
              for i in range(first.source.rank)] for k in range(second.target.rank)]
    out = FunctorData(first.source, second.target, A, B)
    second_img = image_closure(second)
    if second_img.cartan is not None and _is_identity(second_img.cartan):
        # a subcategory of a semisimple image is semisimple
        m = len(image_labels(out))
        out.image_cartan = tuple(tuple(int(i == j) for j in range(m)) for i in range(m))
    return out


# -- freeness ------------------------------------------------------------------------------

@dataclass
class Freeness:
    ratio: NumberFieldElement
    ok: bool
    findings: list[Finding] = field(default_factory=list)


def freeness_check(f: FunctorData) -> Freeness:
    """F(R_source) = (d+(source)/d+(target)) R_target on the K-group level."""
    if f.B is None or not is_surjective(f):
        raise NotSurjective("freeness needs a surjective functor preserving projectives")
    src, tgt = f.source, f.target
    d = src.d
    u = tgt.unit
    ratio = src.field_element(0)
    for i in range(src.rank):
        if f.B[u][i]:
            ratio = ratio + d[i] * f.B[u][i]
    findings = []
    quotient = src.fpdim_category().to_real() / tgt.fpdim_category().to_real()
    if ratio.to_real() != quotient:
        findings.append(Finding("freeness_ratio",
                                "sum of d_i dim Hom(F(P_i), 1) differs from d+(C)/d+(D)", ()))
    image = [src.field_element(0)] * tgt.rank
    for j in range(tgt.rank):
        for i in range(src.rank):
            if f.B[j][i]:
                image[j] = image[j] + d[i] * f.B[j][i]
    for j in range(tgt.rank):
        if not _same_real(image[j] / ratio, tgt.d[j]):
            findings.append(Finding("freeness_regular",
                                    f"coefficient of P'_{tgt.labels[j]} in F(R) is not ratio * d_j", (j,)))
    return Freeness(ratio, not findings, findings)


def integer_freeness(f: FunctorData) -> bool:
    """The rank d+(C)/d+(D) of the free module is a rational integer."""
    res = freeness_check(f)
    if not res.ok:
        return False
    if not integrality_flag(f.source):
        raise InvalidInput("integer freeness needs integral FP dimensions on the source")
    return res.ratio.is_rational() and res.ratio.as_fraction().denominator == 1


# -- Lagrange ----------------------------------------------------------------------------

@dataclass
class LagrangeResult:
    quotient: NumberFieldElement
    integral: bool
    findings: list[Finding] = field(default_factory=list)


def _embedding(sub: TensorCatData, amb: TensorCatData, embed) -> list[int]:
    if isinstance(embed, Mapping):
        try:
            e = [amb.ring.index(embed[lab]) for lab in sub.labels]
        except KeyError as exc:
            raise NotASubring(f"embedding undefined on {exc}") from None
    else:
        e = [amb.ring.index(x) for x in embed]
    if len(e) != sub.rank:
        raise NotASubring("embedding must map every simple of the subcategory")
    if len(set(e)) != len(e):
        raise NotASubring("embedding is not injective")
    if e[sub.unit] != amb.unit:
        raise NotASubring("embedding does not preserve the unit")
    for i in range(sub.rank):
        if e[sub.ring.star[i]] != amb.ring.star[e[i]]:
            raise NotASubring("embedding does not commute with duality")
    image = set(e)
    for i in range(sub.rank):
        for j in range(sub.rank):
            row = amb.ring.N[e[i]][e[j]]
            for k in range(amb.rank):
                if row[k] and k not in image:
                    raise NotASubring("image is not closed under fusion")
            for k in range(sub.rank):
                if sub.ring.N[i][j][k] != row[e[k]]:
                    raise NotASubring(f"fusion differs at ({i}, {j}, {k})")
    return e


def lagrange(sub: TensorCatData, amb: TensorCatData, embed) -> LagrangeResult:
    """d+(amb)/d+(sub), which must be an algebraic integer."""
    e = _embedding(sub, amb, embed)
    d = amb.d
    for i in range(sub.rank):
        if not _same_real(sub.d[i], d[e[i]]):
            raise FieldEmbeddingFailed(f"FP dimension of {sub.labels[i]} changes under the embedding")
    sub_dim = amb.field_element(0)
    for i in range(sub.rank):
        proj = amb.field_element(0)
        for j in range(sub.rank):
            if sub.cartan[i][j]:
                proj = proj + d[e[j]] * sub.cartan[i][j]
        sub_dim = sub_dim + d[e[i]] * proj
    if sub_dim.to_real() != sub.fpdim_category().to_real():
        raise FieldEmbeddingFailed("d+ of the subcategory is not reproduced in the ambient field")
    q = amb.fpdim_category() / sub_dim
    integral = is_algebraic_integer(q)
    res = LagrangeResult(q, integral)
    if not integral:
        res.findings.append(Finding("lagrange_counterexample",
                                    "d+(amb)/d+(sub) is not an algebraic integer", ()))
    return res


# -- dimension identities --------------------------------------------------------------------

def verify_dual_pair(c: TensorCatData, cdual: TensorCatData) -> bool:
    return c.fpdim_category().to_real() == cdual.fpdim_category().to_real()


def verify_center_dim(c: TensorCatData, z: TensorCatData, forgetful: FunctorData) -> list[Finding]:
    out: list[Finding] = []
    dc = c.fpdim_category().to_real()
    dz = z.fpdim_category().to_real()
    if dz != dc * dc:
        out.append(Finding("center_dimension", "d+(Z(C)) is not d+(C)^2", ()))
    try:
        surj = is_surjective(forgetful)
    except PropertyFailure as exc:
        out.append(Finding("center_forgetful", f"surjectivity undetermined: {exc}", ()))
        return out
    if not surj:
        out.append(Finding("center_forgetful", "forgetful functor is not surjective", ()))
        return out
    fr = freeness_check(forgetful)
    out.extend(fr.findings)
    if fr.ratio.to_real() != dc:
        out.append(Finding("center_freeness", "freeness ratio is not d+(C)", ()))
    return out
