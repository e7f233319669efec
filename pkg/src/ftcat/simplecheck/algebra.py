"""Finite dimensional algebras with a group action and twisted derivations.

Vectors are lists of field elements in the algebra basis.  A matrix ``M``
acts on column vectors, so column j of ``M`` is the image of basis vector j.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .. import linalg
from ..errors import InvalidInput
from ..report import Finding
from .fields import ExactField


@dataclass(frozen=True)
class GroupAction:
    name: str
    matrix: tuple[tuple, ...]
    order: int | None = None


@dataclass(frozen=True)
class Derivation:
    """A linear map with d(ab) = d(a) b + t(a) d(b), t = group[twist]."""

    name: str
    matrix: tuple[tuple, ...]
    twist: int | None = None
    nilpotency: int | None = None
    odd: bool = False


@dataclass
class EquivariantAlgebra:
    field: ExactField
    dim: int
    table: list[list[dict[int, object]]]
    unit: list
    group: list[GroupAction] = dc_field(default_factory=list)
    derivations: list[Derivation] = dc_field(default_factory=list)
    # (derivation index, group index, c) declares d o g = c * g o d
    commutations: list[tuple[int, int, object]] = dc_field(default_factory=list)
    parity: int | None = None
    nilpotence_degree: int | None = None
    names: list[str] = dc_field(default_factory=list)
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if len(self.table) != self.dim or any(len(r) != self.dim for r in self.table):
            raise InvalidInput("structure constant table has the wrong shape")
        if len(self.unit) != self.dim:
            raise InvalidInput("unit has the wrong length")
        if not self.names:
            self.names = [f"b{i}" for i in range(self.dim)]

    # -- vectors -----------------------------------------------------------------

    def zero_vec(self) -> list:
        return [self.field.zero] * self.dim

    def basis_vec(self, i: int) -> list:
        v = self.zero_vec()
        v[i] = self.field.one
        return v

    def mul(self, u: Sequence, v: Sequence) -> list:
        out = self.zero_vec()
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j].items():
                    out[k] = out[k] + ab * c
        return out

    def power(self, v: Sequence, m: int) -> list:
        out = list(self.unit)
        for _ in range(m):
            out = self.mul(out, v)
        return out

    def apply(self, M, v: Sequence) -> list:
        zero = self.field.zero
        out = []
        for row in M:
            acc = zero
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def compose(self, M, N) -> tuple[tuple, ...]:
        """Matrix of M o N."""
        cols = [self.apply(M, [N[r][j] for r in range(self.dim)]) for j in range(self.dim)]
        return tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim))

    def identity(self) -> tuple[tuple, ...]:
        return tuple(tuple(self.basis_vec(i)) for i in range(self.dim))

    def right_mult(self, a: Sequence) -> tuple[tuple, ...]:
        cols = [self.mul(self.basis_vec(j), a) for j in range(self.dim)]
        return tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim))

    def left_mult(self, a: Sequence) -> tuple[tuple, ...]:
        cols = [self.mul(a, self.basis_vec(j)) for j in range(self.dim)]
        return tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim))

    def column(self, M, j: int) -> list:
        return [M[i][j] for i in range(self.dim)]

    def twist_matrix(self, d: Derivation):
        return self.identity() if d.twist is None else self.group[d.twist].matrix

    # -- operator set for simplicity questions -----------------------------------

    def operators(self) -> list[tuple[tuple, ...]]:
        """Right multiplications by basis elements, group generators, derivations."""
        ops = [self.right_mult(self.basis_vec(i)) for i in range(self.dim)]
        ops += [g.matrix for g in self.group]
        ops += [d.matrix for d in self.derivations]
        return ops

    def to_json(self) -> dict:
        def mat(M):
            return [[str(x) for x in row] for row in M]
        return {
            "field": self.field.to_json(),
            "dim": self.dim,
            "names": self.names,
            "group": [{"name": g.name, "order": g.order, "matrix": mat(g.matrix)} for g in self.group],
            "derivations": [{"name": d.name, "twist": d.twist, "odd": d.odd,
                             "nilpotency": d.nilpotency, "matrix": mat(d.matrix)}
                            for d in self.derivations],
        }


def _mat_eq(A, B) -> bool:
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def _mat_pow(alg: EquivariantAlgebra, M, e: int):
    out = alg.identity()
    for _ in range(e):
        out = alg.compose(M, out)
    return out


def check_invariants(alg: EquivariantAlgebra) -> list[Finding]:
    """Exact verification of the axioms of an equivariant algebra."""
    out: list[Finding] = []
    n = alg.dim
    basis = [alg.basis_vec(i) for i in range(n)]
    prod = [[alg.mul(basis[i], basis[j]) for j in range(n)] for i in range(n)]

    for i in range(n):
        if alg.mul(alg.unit, basis[i]) != basis[i] or alg.mul(basis[i], alg.unit) != basis[i]:
            out.append(Finding("unit", f"unit law fails on {alg.names[i]}", (i,)))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if alg.mul(prod[i][j], basis[k]) != alg.mul(basis[i], prod[j][k]):
                    out.append(Finding("associativity", "associativity fails",
                                       (alg.names[i], alg.names[j], alg.names[k])))

    ident = alg.identity()
    for gi, g in enumerate(alg.group):
        images = [alg.column(g.matrix, i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                if alg.apply(g.matrix, prod[i][j]) != alg.mul(images[i], images[j]):
                    out.append(Finding("automorphism", f"{g.name} is not multiplicative",
                                       (alg.names[i], alg.names[j])))
        if alg.apply(g.matrix, alg.unit) != list(alg.unit):
            out.append(Finding("automorphism", f"{g.name} does not fix the unit", (g.name,)))
        if g.order is not None and not _mat_eq(_mat_pow(alg, g.matrix, g.order), ident):
            out.append(Finding("group_order", f"{g.name}^{g.order} is not the identity", (g.name,)))

    for d in alg.derivations:
        tw = alg.twist_matrix(d)
        dimg = [alg.column(d.matrix, i) for i in range(n)]
        timg = [alg.column(tw, i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = alg.apply(d.matrix, prod[i][j])
                a = alg.mul(dimg[i], basis[j])
                b = alg.mul(timg[i], dimg[j])
                if lhs != [x + y for x, y in zip(a, b)]:
                    out.append(Finding("skew_leibniz", f"{d.name} violates the twisted Leibniz rule",
                                       (alg.names[i], alg.names[j])))
        if d.nilpotency is not None:
            zero = tuple(tuple(alg.zero_vec()) for _ in range(n))
            if not _mat_eq(_mat_pow(alg, d.matrix, d.nilpotency), zero):
                out.append(Finding("nilpotence", f"{d.name}^{d.nilpotency} is not zero", (d.name,)))

    for di, gi, c in alg.commutations:
        d, g = alg.derivations[di].matrix, alg.group[gi].matrix
        lhs = alg.compose(d, g)
        rhs = alg.compose(g, d)
        if not _mat_eq(lhs, tuple(tuple(c * x for x in row) for row in rhs)):
            out.append(Finding("commutation", f"{alg.derivations[di].name} o {alg.group[gi].name} "
                               f"!= {c} {alg.group[gi].name} o {alg.derivations[di].name}",
                               (di, gi)))

    odd = [d for d in alg.derivations if d.odd]
    for a in range(len(odd)):
        for b in range(a, len(odd)):
            s = alg.compose(odd[a].matrix, odd[b].matrix)
            t = alg.compose(odd[b].matrix, odd[a].matrix)
            if any(x + y for rs, rt in zip(s, t) for x, y in zip(rs, rt)):
                code = "odd_square" if a == b else "anticommutation"
                out.append(Finding(code, f"{odd[a].name}, {odd[b].name} do not anticommute",
                                   (odd[a].name, odd[b].name)))
    return out


# -- subspaces ---------------------------------------------------------------------

class Subspace:
    """Row-reduced basis of a subspace of k^n."""

    def __init__(self, vectors: Sequence[Sequence], n: int, field: ExactField):
        self.n = n
        self.field = field
        vecs = [list(v) for v in vectors if any(v)]
        if vecs:
            rows, piv = linalg.rref(vecs)
            self.rows = rows[:len(piv)]
            self.pivots = piv
        else:
            self.rows, self.pivots = [], []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def coords(self, v: Sequence) -> list | None:
        """Coordinates in ``rows`` or None if v is not in the subspace."""
        c = [v[p] for p in self.pivots]
        rest = list(v)
        for ci, row in zip(c, self.rows):
            if ci:
                rest = [a - ci * b for a, b in zip(rest, row)]
        return None if any(rest) else c

    def contains(self, v: Sequence) -> bool:
        return self.coords(v) is not None

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)


def subalgebra(alg: EquivariantAlgebra, space: Subspace, derivations: bool = True) -> EquivariantAlgebra:
    """The subalgebra on ``space`` with group and derivation operators restricted.

    Operators that do not preserve the subspace are dropped.
    """
    k = space.dim
    rows = space.rows

    def restrict(M):
        cols = []
        for r in rows:
            c = space.coords(alg.apply(M, r))
            if c is None:
                return None
            cols.append(c)
        return tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))

    table = []
    for a in rows:
        row = []
        for b in rows:
            c = space.coords(alg.mul(a, b))
            if c is None:
                raise InvalidInput("subspace is not closed under multiplication")
            row.append({t: x for t, x in enumerate(c) if x})
        table.append(row)
    unit = space.coords(alg.unit)
    if unit is None:
        raise InvalidInput("subspace does not contain the unit")
    group, gmap = [], {}
    for gi, g in enumerate(alg.group):
        M = restrict(g.matrix)
        if M is not None:
            gmap[gi] = len(group)
            group.append(GroupAction(g.name, M, g.order))
    ders = []
    if derivations:
        for d in alg.derivations:
            M = restrict(d.matrix)
            if M is not None and (d.twist is None or d.twist in gmap):
                ders.append(Derivation(d.name, M, None if d.twist is None else gmap[d.twist],
                                       d.nilpotency, d.odd))
    return EquivariantAlgebra(alg.field, k, table, unit, group, ders,
                              parity=gmap.get(alg.parity) if alg.parity is not None else None,
                              names=[f"v{i}" for i in range(k)])


def change_basis(alg: EquivariantAlgebra, P: Sequence[Sequence]) -> EquivariantAlgebra:
    """Same algebra in the basis whose j-th vector is column j of P (invertible)."""
    n = alg.dim
    cols = [[P[i][j] for i in range(n)] for j in range(n)]
    space = Subspace(cols, n, alg.field)
    if space.dim != n:
        raise InvalidInput("change of basis matrix is singular")
    one, zero = alg.field.one, alg.field.zero
    # coordinates with respect to the columns of P: solve P x = v
    Pinv_cols = [linalg.solve(P, [one if i == j else zero for i in range(n)]) for j in range(n)]

    def to_new(v):
        out = [zero] * n
        for j, a in enumerate(v):
            if a:
                col = Pinv_cols[j]
                for i in range(n):
                    if col[i]:
                        out[i] = out[i] + a * col[i]
        return out

    def conj(M):
        new_cols = [to_new(alg.apply(M, cols[j])) for j in range(n)]
        return tuple(tuple(new_cols[j][i] for j in range(n)) for i in range(n))

    table = [[{k: x for k, x in enumerate(to_new(alg.mul(cols[i], cols[j]))) if x}
              for j in range(n)] for i in range(n)]
    group = [GroupAction(g.name, conj(g.matrix), g.order) for g in alg.group]
    ders = [Derivation(d.name, conj(d.matrix), d.twist, d.nilpotency, d.odd) for d in alg.derivations]
    comm = list(alg.commutations)
    return EquivariantAlgebra(alg.field, n, table, to_new(alg.unit), group, ders, comm,
                              alg.parity, alg.nilpotence_degree, [f"c{i}" for i in range(n)],
                              dict(alg.meta))
