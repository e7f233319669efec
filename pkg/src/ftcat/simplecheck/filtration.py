"""The derivation filtration A_i = {a : d(a) in A_{i-1} for every d} and
further invariants of equivariant algebras."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .. import linalg
from ..errors import CharacteristicTooSmall
from ..report import Finding
from .algebra import EquivariantAlgebra, Subspace, subalgebra
from .closure import SimplicityResult, is_simple_from_right


@dataclass
class Filtration:
    levels: list[Subspace]
    findings: list[Finding] = dc_field(default_factory=list)
    a0_simple: SimplicityResult | None = None

    @property
    def dims(self) -> list[int]:
        return [s.dim for s in self.levels]

    @property
    def ok(self) -> bool:
        return not self.findings


def _reduce(space: Subspace, v: list) -> list:
    for p, row in zip(space.pivots, space.rows):
        if v[p]:
            c = v[p]
            v = [a - c * b for a, b in zip(v, row)]
    return v


def _preimage(alg: EquivariantAlgebra, prev: Subspace) -> Subspace:
    """{a : d(a) in prev for every derivation d}."""
    n = alg.dim
    rows = []
    for d in alg.derivations:
        cols = [_reduce(prev, alg.column(d.matrix, j)) for j in range(n)]
        rows += [[cols[j][i] for j in range(n)] for i in range(n)]
    rows = [r for r in rows if any(r)]
    if not rows:
        return Subspace([alg.basis_vec(i) for i in range(n)], n, alg.field)
    basis = linalg.nullspace(rows, n, one=alg.field.one, zero=alg.field.zero)
    return Subspace(basis, n, alg.field)


def compute_filtration(alg: EquivariantAlgebra, check_a0: bool | None = None) -> Filtration:
    """Kernel chain A_0 <= A_1 <= ... and a report on its structural properties.

    ``check_a0`` controls the test that A_0 has no nontrivial invariant
    ideals; by default it runs when A itself is simple from the right.
    """
    n = alg.dim
    f = alg.field
    zero_space = Subspace([], n, f)
    levels = [_preimage(alg, zero_space)]
    while levels[-1].dim < n:
        nxt = _preimage(alg, levels[-1])
        if nxt.dim == levels[-1].dim:
            break
        levels.append(nxt)
    out = Filtration(levels)
    F = out.findings

    def level(i):
        if i < 0:
            return zero_space
        return levels[min(i, len(levels) - 1)]

    # (a) d(A_i) in A_{i-1}
    for i, A in enumerate(levels):
        for d in alg.derivations:
            for r in A.rows:
                if not level(i - 1).contains(alg.apply(d.matrix, r)):
                    F.append(Finding("filtration_a", f"{d.name} does not lower level {i}", (i, d.name)))
                    break
    # (b) group invariance
    for i, A in enumerate(levels):
        for g in alg.group:
            if any(not A.contains(alg.apply(g.matrix, r)) for r in A.rows):
                F.append(Finding("filtration_b", f"{g.name} does not preserve level {i}", (i, g.name)))
    # (c) A_i A_j in A_{i+j}
    for i, A in enumerate(levels):
        for j, B in enumerate(levels):
            target = level(i + j)
            if any(not target.contains(alg.mul(a, b)) for a in A.rows for b in B.rows):
                F.append(Finding("filtration_c", f"A_{i} A_{j} is not inside A_{i + j}", (i, j)))
    # (d) exhaustion at the declared degree
    top = alg.nilpotence_degree
    if levels[-1].dim != n:
        F.append(Finding("filtration_d", "the filtration does not exhaust the algebra", (len(levels) - 1,)))
    elif top is not None and level(top).dim != n:
        F.append(Finding("filtration_d", f"A_{top} is not the whole algebra", (top,)))
    # (e) strict drop: if a in A_i \ A_{i-1} then some d(a) lies outside A_{i-2}
    for i in range(1, len(levels)):
        kernel = _restricted_kernel(alg, levels[i], level(i - 2))
        if kernel.dim != level(i - 1).dim:
            F.append(Finding("filtration_e", f"strict drop fails at level {i}", (i,)))
    # (f) A_0 simple as an equivariant algebra
    if check_a0 is None:
        check_a0 = bool(is_simple_from_right(alg))
    if check_a0:
        sub = subalgebra(alg, levels[0], derivations=False)
        out.a0_simple = is_simple_from_right(sub)
        if not out.a0_simple:
            F.append(Finding("filtration_f", "A_0 has a nontrivial invariant right ideal", ()))
    return out


def _restricted_kernel(alg: EquivariantAlgebra, A: Subspace, target: Subspace) -> Subspace:
    """{a in A : d(a) in target for every derivation d}."""
    k = A.dim
    if not alg.derivations:
        return A
    rows = []
    for d in alg.derivations:
        cols = [_reduce(target, alg.apply(d.matrix, r)) for r in A.rows]
        rows += [[cols[j][i] for j in range(k)] for i in range(alg.dim)]
    rows = [r for r in rows if any(r)]
    if not rows:
        return A
    coeffs = linalg.nullspace(rows, k, one=alg.field.one, zero=alg.field.zero)
    vecs = [[sum((c * r[t] for c, r in zip(cv, A.rows)), alg.field.zero) for t in range(alg.dim)]
            for cv in coeffs]
    return Subspace(vecs, alg.dim, alg.field)


def verify_q_derivative(alg: EquivariantAlgebra, y: list, l: int, der: int = 0) -> list[Finding]:
    """Check d(y^m) = (1 + z^-1 + ... + z^(1-m)) y^(m-1) for 1 <= m < l."""
    f = alg.field
    zinv = f.zeta ** -1
    D = alg.derivations[der].matrix
    out = []
    for m in range(1, l):
        coef = f.zero
        for k in range(m):
            coef = coef + zinv ** k
        lhs = alg.apply(D, alg.power(y, m))
        rhs = [coef * x for x in alg.power(y, m - 1)]
        if lhs != rhs:
            out.append(Finding("q_derivative", f"d(y^{m}) differs from [{m}] y^{m - 1}", (m,)))
    return out


def trace_form(alg: EquivariantAlgebra) -> list[list]:
    n = alg.dim
    traces = []
    for k in range(n):
        L = alg.left_mult(alg.basis_vec(k))
        tr = alg.field.zero
        for i in range(n):
            tr = tr + L[i][i]
        traces.append(tr)
    T = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = alg.field.zero
            for k, c in alg.table[i][j].items():
                acc = acc + c * traces[k]
            row.append(acc)
        T.append(row)
    return T


def semisimplicity_test(alg: EquivariantAlgebra) -> bool:
    """Nondegeneracy of the trace form of the left regular representation."""
    p = alg.field.characteristic
    if p and p <= alg.dim:
        raise CharacteristicTooSmall(f"trace form test needs p > {alg.dim}, got p = {p}")
    return linalg.rank(trace_form(alg)) == alg.dim


def center_dimension(alg: EquivariantAlgebra) -> int:
    n = alg.dim
    rows = []
    for j in range(n):
        L = alg.left_mult(alg.basis_vec(j))
        R = alg.right_mult(alg.basis_vec(j))
        rows += [[L[i][k] - R[i][k] for k in range(n)] for i in range(n)]
    rows = [r for r in rows if any(r)]
    if not rows:
        return n
    return n - linalg.rank(rows)


def fingerprint(alg: EquivariantAlgebra) -> tuple[int, int, int]:
    """Plain algebra invariants: (dimension, center dimension, trace form rank)."""
    return alg.dim, center_dimension(alg), linalg.rank(trace_form(alg))


def lambda_invariant(alg: EquivariantAlgebra, l: int, g: int = 0, der: int = 0):
    """The scalar a^l for the unique a with d(a) = 1, g(a) = zeta^-1 a and
    a b = g^-1(b) a for b in ker d; None if a is not unique or a^l is not scalar.

    Every ingredient is intrinsic to the equivariant structure, so the value
    is an isomorphism invariant."""
    f = alg.field
    n = alg.dim
    zinv = f.zeta ** -1
    D = alg.derivations[der].matrix
    Gm = alg.group[g].matrix
    Ginv = Gm
    for _ in range(l - 2):
        Ginv = alg.compose(Gm, Ginv)
    A0 = _preimage(alg, Subspace([], n, f))
    rows, rhs = [], []
    for i in range(n):
        rows.append(list(D[i]))
        rhs.append(alg.unit[i])
    for i in range(n):
        rows.append([Gm[i][j] - (zinv if i == j else f.zero) for j in range(n)])
        rhs.append(f.zero)
    for b in A0.rows:
        gb = alg.apply(Ginv, b)
        Rb = alg.right_mult(b)
        Lgb = alg.left_mult(gb)
        for i in range(n):
            rows.append([Rb[i][j] - Lgb[i][j] for j in range(n)])
            rhs.append(f.zero)
    sol = linalg.solve(rows, rhs)
    if sol is None:
        return None
    if linalg.rank(rows) != n:
        return None
    p = alg.power(sol, l)
    unit_idx = next(i for i in range(n) if alg.unit[i])
    c = p[unit_idx] / alg.unit[unit_idx]
    if p != [c * x for x in alg.unit]:
        return None
    return c
