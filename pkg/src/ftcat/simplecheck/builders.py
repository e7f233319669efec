"""Constructors for the equivariant algebras attached to module categories
over group, supergroup and Taft representation categories."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .. import linalg
from ..errors import (AsymmetricForm, BadDivisor, BadParameter, CharacteristicTwo, CocycleInvalid,
                      DimensionOverflow, InconsistentData, InvalidInput)
from .algebra import Derivation, EquivariantAlgebra, GroupAction, Subspace
from .fields import ExactField
from .groups import FiniteGroup
from .presentation import build_from_presentation

DEFAULT_DIM_CAP = 64


# -- small matrix helpers ------------------------------------------------------------------

def _zeros(field, r, c):
    return [[field.zero] * c for _ in range(r)]


def _eye(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def _mm(field, A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = _zeros(field, n, m)
    for i in range(n):
        for t in range(k):
            a = A[i][t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    if Bt[j]:
                        row[j] = row[j] + a * Bt[j]
    return out


def _inv(field, A):
    n = len(A)
    aug = [list(A[i]) + _eye(field, n)[i] for i in range(n)]
    R, piv = linalg.rref(aug)
    if piv[:n] != list(range(n)):
        raise InvalidInput("matrix is singular")
    return [row[n:] for row in R]


def _kron(field, A, B):
    n, m = len(A), len(B)
    out = _zeros(field, n * m, n * m)
    for i in range(n):
        for j in range(n):
            a = A[i][j]
            if a:
                for p in range(m):
                    for q in range(m):
                        if B[p][q]:
                            out[i * m + p][j * m + q] = a * B[p][q]
    return out


def _freeze(M):
    return tuple(tuple(r) for r in M)


# -- algebras with an action, before packaging ----------------------------------------------

@dataclass
class _Raw:
    dim: int
    table: list
    unit: list
    act: Callable          # group element -> matrix
    der: Callable | None   # vector in W -> matrix


def _end_algebra(field: ExactField, rho: Mapping | None, K: Iterable) -> _Raw:
    """End(V) with K acting by conjugation through the projective representation rho."""
    if rho is None:
        return _Raw(1, [[{0: field.one}]], [field.one], lambda k: _eye(field, 1), None)
    m = len(next(iter(rho.values())))
    n = m * m
    table = [[{} for _ in range(n)] for _ in range(n)]
    for a in range(m):
        for b in range(m):
            for d in range(m):
                table[a * m + b][b * m + d] = {a * m + d: field.one}
    unit = [field.one if a == b else field.zero for a in range(m) for b in range(m)]
    inverses = {k: _inv(field, rho[k]) for k in K}

    def act(k):
        R, Ri = rho[k], inverses[k]
        M = _zeros(field, n, n)
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    if not R[c][a]:
                        continue
                    for d in range(m):
                        if Ri[b][d]:
                            M[c * m + d][a * m + b] = M[c * m + d][a * m + b] + R[c][a] * Ri[b][d]
        return M
    return _Raw(n, table, unit, act, None)


def _induce(field: ExactField, G: FiniteGroup, K: frozenset, raw: _Raw,
            w_act: Callable | None = None) -> _Raw:
    """Ind_K^G: functions f on G with f(xk) = k^{-1} f(x), stored at coset representatives."""
    reps = G.cosets(K)
    r, m = len(reps), raw.dim
    n = r * m
    table = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(r):
        for a in range(m):
            for b in range(m):
                table[i * m + a][i * m + b] = {i * m + c: x for c, x in raw.table[a][b].items()}
    unit = [x for _ in range(r) for x in raw.unit]

    def act(g):
        M = _zeros(field, n, n)
        ginv = G.inv(g)
        for i, t in enumerate(reps):
            j, k = G.decompose(reps, K, G.mul(ginv, t))
            blk = raw.act(G.inv(k))
            for p in range(m):
                for q in range(m):
                    M[i * m + p][j * m + q] = blk[p][q]
        return M

    der = None
    if raw.der is not None:
        def der(w):
            M = _zeros(field, n, n)
            for i, t in enumerate(reps):
                wt = [sum((a * b for a, b in zip(row, w)), field.zero) for row in w_act(G.inv(t))]
                blk = raw.der(wt)
                for p in range(m):
                    for q in range(m):
                        M[i * m + p][i * m + q] = blk[p][q]
            return M
    return _Raw(n, table, unit, act, der)


def _tensor(field: ExactField, first: _Raw, other: _Raw, twist=None, parities=None) -> _Raw:
    """Super tensor product first (x) other.

    ``twist`` is the parity automorphism of ``first`` (a matrix) and ``parities`` the
    degrees of the basis of ``other``: (x s)(y t) = x twist^|s|(y) st and
    d(x s) = twist(x) d(s). Without a twist the first factor is purely even.
    """
    m1, m2 = first.dim, other.dim
    n = m1 * m2
    twist = twist or _eye(field, m1)
    parities = parities or [0] * m2
    table = [[{} for _ in range(n)] for _ in range(n)]
    for a in range(m1):
        for c in range(m2):
            for b in range(m1):
                ys = {b: field.one} if not parities[c] else \
                    {k: twist[k][b] for k in range(m1) if twist[k][b]}
                for d in range(m2):
                    out = {}
                    for b2, z in ys.items():
                        for e, x in first.table[a][b2].items():
                            for f, y in other.table[c][d].items():
                                out[e * m2 + f] = out.get(e * m2 + f, field.zero) + z * x * y
                    table[a * m2 + c][b * m2 + d] = {k: v for k, v in out.items() if v}
    unit = [x * y for x in first.unit for y in other.unit]
    der = None
    if other.der is not None:
        def der(w):
            return _kron(field, twist, other.der(w))
    return _Raw(n, table, unit, lambda k: _kron(field, first.act(k), other.act(k)), der)


# -- Clifford algebras -----------------------------------------------------------------------

class Clifford:
    """Cl(Q, form) with basis the ordered monomials x_S, S a subset of range(r)
    listed by bitmask; x_i x_j + x_j x_i = 2 form[i][j]."""

    def __init__(self, field: ExactField, form: Sequence[Sequence]):
        self.field = field
        self.r = len(form)
        self.form = form
        self.dim = 1 << self.r
        self._memo: dict = {}
        self.table = [[self._mono_mul(a, b) for b in range(self.dim)] for a in range(self.dim)]

    @staticmethod
    def word(mask: int) -> tuple[int, ...]:
        return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)

    def _nf(self, w: tuple[int, ...]) -> dict[int, object]:
        if w in self._memo:
            return self._memo[w]
        f = self.field
        out: dict[int, object] = {}
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a >= b:
                rest = w[:i] + w[i + 2:]
                if a == b:
                    terms = [(rest, f(self.form[a][a]))]
                else:
                    terms = [(w[:i] + (b, a) + w[i + 2:], -f.one), (rest, 2 * f(self.form[a][b]))]
                for ww, c in terms:
                    if c:
                        for k, v in self._nf(ww).items():
                            out[k] = out.get(k, f.zero) + c * v
                out = {k: v for k, v in out.items() if v}
                break
        else:
            out = {sum(1 << i for i in w): f.one}
        self._memo[w] = out
        return out

    def _mono_mul(self, a: int, b: int) -> dict[int, object]:
        return self._nf(self.word(a) + self.word(b))

    def mul(self, u, v):
        out = [self.field.zero] * self.dim
        for a, x in enumerate(u):
            if x:
                for b, y in enumerate(v):
                    if y:
                        for k, c in self.table[a][b].items():
                            out[k] = out[k] + x * y * c
        return out

    def linear_action(self, A) -> list[list]:
        """Extend the generator map x_i -> sum_j A[j][i] x_j multiplicatively."""
        f = self.field
        gens = []
        for i in range(self.r):
            v = [f.zero] * self.dim
            for j in range(self.r):
                v[1 << j] = f.zero + A[j][i]
            gens.append(v)
        cols = []
        for mask in range(self.dim):
            v = [f.zero] * self.dim
            v[0] = f.one
            for i in self.word(mask):
                v = self.mul(v, gens[i])
            cols.append(v)
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def contraction(self, values: Sequence) -> list[list]:
        """Odd derivation with x_i -> values[i] * 1."""
        f = self.field
        M = _zeros(f, self.dim, self.dim)
        for mask in range(self.dim):
            w = self.word(mask)
            for pos, i in enumerate(w):
                if values[i]:
                    sign = -1 if pos % 2 else 1
                    rest = mask & ~(1 << i)
                    M[rest][mask] = M[rest][mask] + sign * values[i]
        return M

    def parity(self, mask: int) -> int:
        return bin(mask).count("1") % 2


# -- cocycles and projective representations ---------------------------------------------------

def check_cocycle(G: FiniteGroup, H: frozenset, psi: Mapping, field: ExactField):
    one = field.one
    for a in H:
        if psi.get((G.identity, a), one) != one or psi.get((a, G.identity), one) != one:
            raise CocycleInvalid("cocycle is not normalized")
        for b in H:
            if not psi.get((a, b), one):
                raise CocycleInvalid("cocycle takes the value 0")
    for a in H:
        for b in H:
            ab = G.mul(a, b)
            for c in H:
                lhs = psi.get((a, b), one) * psi.get((ab, c), one)
                rhs = psi.get((b, c), one) * psi.get((a, G.mul(b, c)), one)
                if lhs != rhs:
                    raise CocycleInvalid(f"cocycle identity fails on {(a, b, c)}")


def _check_projective_rep(G, H, psi, rho, field):
    one = field.one
    for a in H:
        for b in H:
            lhs = _mm(field, rho[a], rho[b])
            c = psi.get((a, b), one)
            rhs = [[c * x for x in row] for row in rho[G.mul(a, b)]]
            if lhs != rhs:
                raise InconsistentData(f"V is not a psi-projective representation at {(a, b)}")


def _normalize_table(field, psi):
    if psi is None:
        return {}
    return {k: field(v) for k, v in psi.items()}


def _normalize_rho(field, V):
    if V is None:
        return None
    return {h: [[field(x) for x in row] for row in M] for h, M in V.items()}


def klein_pauli(field: ExactField | None = None):
    """The nontrivial cocycle class on Z/2 x Z/2 with its 2-dimensional
    projective representation (X, Z Pauli-type matrices); returns (psi, rho)."""
    field = field or ExactField.rationals()
    f = field
    I = [[f.one, f.zero], [f.zero, f.one]]
    X = [[f.zero, f.one], [f.one, f.zero]]
    Z = [[f.one, f.zero], [f.zero, -f.one]]
    rho = {(0, 0): I, (1, 0): X, (0, 1): Z, (1, 1): _mm(f, X, Z)}
    psi = {}
    G = FiniteGroup.from_spec("2x2")
    for a in G.elements:
        for b in G.elements:
            prod = _mm(f, rho[a], rho[b])
            target = rho[G.mul(a, b)]
            i, j = next((i, j) for i in range(2) for j in range(2) if target[i][j])
            psi[(a, b)] = prod[i][j] / target[i][j]
    return psi, rho


def _resolve_subgroup(G: FiniteGroup, H) -> frozenset:
    if H is None or H == "1" or H == "trivial":
        return frozenset({G.identity})
    if H == "G":
        return frozenset(G.elements)
    if isinstance(H, dict) and "generators" in H:
        return G.generated(_element(G, g) for g in H["generators"])
    return G.subgroup(_element(G, h) for h in H)


def _element(G: FiniteGroup, h):
    if isinstance(h, list):
        h = tuple(h)
    if isinstance(h, int) and not G.contains(h):
        h = (h,)
    return h


def _package(field, G: FiniteGroup, raw: _Raw, extra_group=(), derivations=(), parity=None,
             nilpotence_degree=None, meta=None, names=None) -> EquivariantAlgebra:
    group = [GroupAction(name, _freeze(raw.act(g)), G.element_order(g)) for name, g in G.generators]
    group += list(extra_group)
    return EquivariantAlgebra(field, raw.dim, raw.table, raw.unit, group, list(derivations),
                              parity=parity, nilpotence_degree=nilpotence_degree,
                              names=names or [], meta=meta or {})


# -- public builders ------------------------------------------------------------------------------

def build_group_quotient(G, H=None, psi=None, V=None, field: ExactField | None = None,
                         dim_cap: int = DEFAULT_DIM_CAP) -> EquivariantAlgebra:
    """k[G/H], or Ind_H^G End(V) for a psi-projective representation V of H."""
    field = field or ExactField.rationals()
    G = FiniteGroup.from_spec(G)
    H = _resolve_subgroup(G, H)
    psi = _normalize_table(field, psi)
    rho = _normalize_rho(field, V)
    check_cocycle(G, H, psi, field)
    if rho is not None:
        if set(rho) != set(H):
            raise InconsistentData("V must give a matrix for every element of H")
        _check_projective_rep(G, H, psi, rho, field)
    elif any(v != field.one for v in psi.values()):
        raise InconsistentData("a nontrivial cocycle needs a projective representation V")
    m = len(next(iter(rho.values()))) if rho else 1
    if (G.order // len(H)) * m * m > dim_cap:
        raise DimensionOverflow("induced algebra exceeds the dimension cap")
    raw = _induce(field, G, H, _end_algebra(field, rho, H))
    return _package(field, G, raw, meta={"kind": "group_quotient", "index": G.order // len(H)})


def _w_action(field, G: FiniteGroup, w_dim: int, w_action: Mapping | None, u):
    mats = {}
    for name, g in G.generators:
        if w_action and name in w_action:
            mats[name] = [[field(x) for x in row] for row in w_action[name]]
        elif g == u:
            mats[name] = [[-field.one if i == j else field.zero for j in range(w_dim)] for i in range(w_dim)]
        else:
            mats[name] = _eye(field, w_dim)
    names = [name for name, _ in G.generators]
    cache = {}

    def act(g):
        if g not in cache:
            M = _eye(field, w_dim)
            for i in G.word_for(g):
                M = _mm(field, M, mats[names[i]])
            cache[g] = M
        return cache[g]
    if u is not None:
        minus = [[-field.one if i == j else field.zero for j in range(w_dim)] for i in range(w_dim)]
        if act(u) != minus:
            raise InconsistentData("u must act on W by -1")
    return act


def _default_u(G: FiniteGroup, u):
    if u is not None:
        return _element(G, u)
    if G.order == 2:
        return next(g for g in G.elements if g != G.identity)
    raise BadParameter("the parity element u must be given")


def _check_form(field, B):
    if field.characteristic == 2:
        raise CharacteristicTwo("Clifford algebras need characteristic different from 2")
    Bm = [[field(x) for x in row] for row in B]
    for i in range(len(Bm)):
        if len(Bm[i]) != len(Bm):
            raise BadParameter("B must be square")
        for j in range(len(Bm)):
            if Bm[i][j] != Bm[j][i]:
                raise AsymmetricForm("B is not symmetric")
    return Bm


def _parity_matrix(field, parities):
    n = len(parities)
    return [[(-field.one if parities[i] else field.one) if i == j else field.zero for j in range(n)]
            for i in range(n)]


def build_clifford_smash(H, y_dim: int, B, psi=None, w_dim: int | None = None,
                         w_action: Mapping | None = None, u=None,
                         field: ExactField | None = None,
                         dim_cap: int = DEFAULT_DIM_CAP) -> EquivariantAlgebra:
    """The superalgebra k[H]_psi smash Cl(Y, B), Y the first ``y_dim`` coordinates of W."""
    field = field or ExactField.rationals()
    Bm = _check_form(field, B)
    if len(Bm) != y_dim:
        raise BadParameter("B must be y_dim x y_dim")
    w_dim = y_dim if w_dim is None else w_dim
    if w_dim < y_dim:
        raise BadParameter("W must contain Y")
    Hg = FiniteGroup.from_spec(H)
    u = _default_u(Hg, u)
    Hset = frozenset(Hg.elements)
    psi = _normalize_table(field, psi)
    check_cocycle(Hg, Hset, psi, field)
    wact = _w_action(field, Hg, w_dim, w_action, u)
    cl = Clifford(field, Bm)
    m = cl.dim
    n = Hg.order * m
    if n > dim_cap:
        raise DimensionOverflow("smash product exceeds the dimension cap")
    elems = Hg.elements
    eidx = {h: i for i, h in enumerate(elems)}
    one = field.one

    def y_act(h):
        W = wact(h)
        for i in range(y_dim):
            for j in range(y_dim, w_dim):
                if W[j][i]:
                    raise InconsistentData("H does not preserve Y")
        return [row[:y_dim] for row in W[:y_dim]]

    cl_act = {h: cl.linear_action(y_act(h)) for h in elems}
    table = [[{} for _ in range(n)] for _ in range(n)]
    for h in elems:
        for hp in elems:
            c = psi.get((h, hp), one)
            hh = eidx[Hg.mul(h, hp)]
            A = cl_act[Hg.inv(hp)]
            for s in range(m):
                # x_s [hp] = [hp] (hp^{-1} . x_s)
                img = [A[k][s] for k in range(m)]
                for sp in range(m):
                    e = [field.zero] * m
                    e[sp] = one
                    prod = cl.mul(img, e)
                    table[eidx[h] * m + s][eidx[hp] * m + sp] = {hh * m + k: c * x
                                                                 for k, x in enumerate(prod) if x}
    unit = [field.zero] * n
    unit[eidx[Hg.identity] * m] = one
    alg = EquivariantAlgebra(field, n, table, unit,
                             names=[f"[{h}]x{Clifford.word(s)}" for h in elems for s in range(m)])
    parities = [cl.parity(s) for _ in elems for s in range(m)]
    P = _parity_matrix(field, parities)

    def basis_el(h, s=0):
        v = [field.zero] * n
        v[eidx[h] * m + s] = one
        return v

    group = []
    for name, h in Hg.generators:
        hv = basis_el(h)
        hinv = [x / psi.get((h, Hg.inv(h)), one) for x in basis_el(Hg.inv(h))]
        cols = [alg.mul(alg.mul(hv, alg.basis_vec(j)), hinv) for j in range(n)]
        group.append(GroupAction(f"conj_{name}", tuple(tuple(cols[j][i] for j in range(n))
                                                       for i in range(n)), Hg.element_order(h)))
    group.append(GroupAction("parity", _freeze(P), 2))
    alg.group = group
    alg.parity = len(group) - 1
    ders = []
    for v in range(w_dim):
        M = _zeros(field, n, n)
        if v < y_dim:
            yv = basis_el(Hg.identity, 1 << v)
            for j in range(n):
                ej = alg.basis_vec(j)
                a = alg.mul(yv, ej)
                b = alg.mul(ej, yv)
                sign = -one if parities[j] else one
                col = [x - sign * z for x, z in zip(a, b)]
                for i in range(n):
                    M[i][j] = col[i]
        ders.append(Derivation(f"d{v}", _freeze(M), alg.parity, 2, True))
    alg.derivations = ders
    alg.nilpotence_degree = w_dim
    alg.meta = {"kind": "clifford_smash", "y_dim": y_dim, "w_dim": w_dim}
    return alg


def supergroup_internal_hom(G, H=None, Y=None, B=(), psi=None, V=None, w_dim: int = 1,
                            w_action: Mapping | None = None, u=None,
                            field: ExactField | None = None,
                            dim_cap: int = DEFAULT_DIM_CAP) -> EquivariantAlgebra:
    """Internal End of V (x) S in the module category attached to (Y, B, H, psi):
    Ind_{H^}^G( Ind_H^{H^}(End V) (x) Cl((W/Ker B)^*, B^*) ), H^ generated by H and u.

    ``Y`` is a list of vectors spanning Y inside W = k^w_dim (or an integer,
    meaning the first coordinates), ``B`` the Gram matrix on that basis.
    """
    field = field or ExactField.rationals()
    Gg = FiniteGroup.from_spec(G)
    u = _default_u(Gg, u)
    Hset = _resolve_subgroup(Gg, "G" if H is None else H)
    Hhat = Gg.generated(list(Hset) + [u])
    if Y is None:
        Y = 0
    if isinstance(Y, int):
        Ybasis = [[field.one if i == a else field.zero for i in range(w_dim)] for a in range(Y)]
    else:
        Ybasis = [[field(x) for x in v] for v in Y]
    y = len(Ybasis)
    if y and linalg.rank(Ybasis) != y:
        raise BadParameter("Y vectors are linearly dependent")
    Bm = _check_form(field, B) if y else []
    if len(Bm) != y:
        raise BadParameter("B must be dim Y x dim Y")
    psi = _normalize_table(field, psi)
    check_cocycle(Gg, Hset, psi, field)
    rho = _normalize_rho(field, V)
    if rho is not None:
        _check_projective_rep(Gg, Hset, psi, rho, field)
    elif any(v != field.one for v in psi.values()):
        raise InconsistentData("a nontrivial cocycle needs a projective representation V")
    wact = _w_action(field, Gg, w_dim, w_action, u)

    # radical of B, as vectors in W
    ker_coords = linalg.nullspace(Bm, y, one=field.one, zero=field.zero) if y else []
    kerB = [[sum((c * Ybasis[a][i] for a, c in enumerate(kc)), field.zero) for i in range(w_dim)]
            for kc in ker_coords]
    # annihilator of Ker B in W^*
    if kerB:
        xi = linalg.nullspace(kerB, w_dim, one=field.one, zero=field.zero)
    else:
        xi = _eye(field, w_dim)
    r = len(xi)
    # dual form: restrict to a complement Y' of Ker B in Y and invert B there
    if ker_coords:
        _, kpiv = linalg.rref(ker_coords)
    else:
        kpiv = []
    comp = [a for a in range(y) if a not in kpiv]
    Bc = [[Bm[a][b] for b in comp] for a in comp]
    Bc_inv = _inv(field, Bc) if comp else []

    def pair(f, v):
        return sum((a * b for a, b in zip(f, v)), field.zero)

    alpha = [[pair(f, Ybasis[a]) for a in comp] for f in xi]
    form = [[sum((alpha[i][p] * Bc_inv[p][q] * alpha[j][q] for p in range(len(comp))
                  for q in range(len(comp))), field.zero) for j in range(r)] for i in range(r)]

    m = len(next(iter(rho.values()))) if rho else 1
    expected = (Gg.order // len(Hhat)) * (len(Hhat) // len(Hset)) * m * m * (1 << r)
    if expected > dim_cap:
        raise DimensionOverflow(f"internal Hom algebra has dimension {expected} > cap {dim_cap}")

    cl = Clifford(field, form)

    def cl_act(k):
        kinv = wact(Gg.inv(k))
        cols = []
        for f in xi:
            g = [pair(f, [kinv[i][j] for i in range(w_dim)]) for j in range(w_dim)]
            cols.append(_to_basis(field, xi, g))
        A = [[cols[j][i] for j in range(r)] for i in range(r)]
        return cl.linear_action(A)

    cl_raw = _Raw(cl.dim, cl.table, [field.one] + [field.zero] * (cl.dim - 1), cl_act,
                  lambda w: cl.contraction([pair(f, w) for f in xi]))
    Hhat_group = _subgroup_as_group(Gg, Hhat)
    end_ind = _induce(field, Hhat_group, Hset, _end_algebra(field, rho, Hset))
    inner = _tensor(field, end_ind, cl_raw, twist=end_ind.act(u),
                    parities=[cl.parity(s) for s in range(cl.dim)])
    A = _induce(field, Gg, Hhat, inner, wact)

    parity_mat = A.act(u)
    extra = [GroupAction("u", _freeze(parity_mat), 2)]
    alg = _package(field, Gg, A, extra_group=extra, nilpotence_degree=w_dim,
                   meta={"kind": "supergroup_internal_hom", "r": r, "y_dim": y, "w_dim": w_dim})
    alg.parity = len(alg.group) - 1
    ders = []
    for v in range(w_dim):
        e = [field.one if i == v else field.zero for i in range(w_dim)]
        ders.append(Derivation(f"d{v}", _freeze(A.der(e)), alg.parity, 2, True))
    alg.derivations = ders
    if alg.dim != expected:
        raise InconsistentData("internal Hom dimension does not match its formula")
    return alg


def _to_basis(field, basis, v):
    """Coordinates of v in the (independent) list ``basis``."""
    cols = [[basis[j][i] for j in range(len(basis))] for i in range(len(v))]
    x = linalg.solve(cols, v)
    if x is None:
        raise InconsistentData("the group does not preserve Ker B")
    return x


def _subgroup_as_group(G: FiniteGroup, K: frozenset) -> FiniteGroup:
    elems = [g for g in G.elements if g in K]
    gens = [(f"k{i}", g) for i, g in enumerate(elems) if g != G.identity]
    return FiniteGroup(elems, G.mul, G.identity, gens, f"sub({G.name})")


def build_taft_A(l: int, d: int, lam=1, field: ExactField | None = None) -> EquivariantAlgebra:
    """A(d, lambda): generated by k[G/H] (G = Z/l, |H| = d) and y with
    y e_s = e_{s+1} y, y^l = lambda, g(e_s) = e_{s-1}, g(y) = zeta^{-1} y,
    d(y) = 1 and d = 0 on k[G/H]."""
    if l < 2:
        raise BadParameter("l must be at least 2")
    if d < 1 or l % d:
        raise BadDivisor(f"{d} does not divide {l}")
    field = field or ExactField.cyclotomic(l)
    zinv = field.zeta ** -1
    lam = field(lam)
    n = l // d
    es = [f"e{s}" for s in range(n - 1)]
    gens = es + ["y"]
    rels = []
    for s in range(n - 1):
        for t in range(n - 1):
            rels.append((f"e{s} e{t}", {f"e{s}": 1} if s == t else {}))
    for s in range(n - 1):
        if s < n - 2:
            rels.append((f"y e{s}", {f"e{s + 1} y": 1}))
        else:
            rhs = {"y": 1}
            for t in range(n - 1):
                rhs[f"e{t} y"] = -1
            rels.append((f"y e{s}", rhs))
    rels.append((" ".join(["y"] * l), {"1": lam} if lam else {}))

    # g(e_s) = e_{s-1}; in particular g(e_0) = e_{n-1} = 1 - sum_t e_t
    g_images = {f"e{s}": {f"e{s - 1}": 1} for s in range(1, n - 1)}
    if n > 1:
        g_images["e0"] = {"1": 1, **{f"e{t}": -1 for t in range(n - 1)}}
    g_images["y"] = {"y": zinv}
    alg = build_from_presentation(
        gens, rels, field, dimension_bound=2 * l * n,
        actions={"g": {"order": l, "images": g_images}},
        derivations={"d": {"twist": "g", "images": {"y": {"1": 1}}, "nilpotency": l}},
        commutations=[("d", "g", zinv)],
        nilpotence_degree=l)
    alg.meta = {"kind": "taft_A", "l": l, "d": d, "lambda": str(lam), "expected_dim": l * n}
    return alg


def taft_hopf_algebra(l: int, field: ExactField | None = None) -> EquivariantAlgebra:
    """H_l = <g, x | g^l = 1, x^l = 0, g x g^{-1} = zeta x> as a plain algebra."""
    field = field or ExactField.cyclotomic(l)
    zinv = field.zeta ** -1
    rels = [(" ".join(["g"] * l), {"1": 1}),
            (" ".join(["x"] * l), {}),
            ("x g", {"g x": zinv})]
    alg = build_from_presentation(["g", "x"], rels, field, dimension_bound=l * l + 1)
    alg.meta = {"kind": "taft_hopf", "l": l}
    return alg


@dataclass(frozen=True)
class TaftProjectives:
    l: int
    dim: int
    cartan: tuple[tuple[int, ...], ...]
    socle: tuple[int, ...]
    projective_dims: tuple[int, ...]

    @property
    def fpdim(self) -> int:
        """sum_i dim(L_i) dim(P_i); every simple is one dimensional."""
        return sum(self.projective_dims)


def taft_projectives(l: int) -> TaftProjectives:
    """Cartan matrix and socles of the indecomposable projectives H_l e_i,
    where e_i are the eigen-idempotents of g and L_j is the character g -> zeta^j."""
    alg = taft_hopf_algebra(l)
    field = alg.field
    z = field.zeta
    gi = alg.names.index("g")
    xi = alg.names.index("x")
    Lg = alg.left_mult(alg.basis_vec(gi))
    Lx = alg.left_mult(alg.basis_vec(xi))
    gpow = [alg.power(alg.basis_vec(gi), k) for k in range(l)]
    cartan, socle, dims = [], [], []
    for i in range(l):
        e = [field.zero] * alg.dim
        for k in range(l):
            c = z ** (-i * k) / l
            e = [a + c * b for a, b in zip(e, gpow[k])]
        P = Subspace([alg.mul(alg.basis_vec(j), e) for j in range(alg.dim)], alg.dim, field)
        dims.append(P.dim)

        def restricted(M):
            cols = [P.coords(alg.apply(M, r)) for r in P.rows]
            return [[cols[j][a] for j in range(P.dim)] for a in range(P.dim)]
        G = restricted(Lg)
        X = restricted(Lx)
        row = []
        for j in range(l):
            shifted = [[G[a][b] - (z ** j if a == b else field.zero) for b in range(P.dim)]
                       for a in range(P.dim)]
            row.append(len(linalg.nullspace(shifted, P.dim, one=field.one, zero=field.zero)))
        cartan.append(tuple(row))
        soc = linalg.nullspace(X, P.dim, one=field.one, zero=field.zero)
        if len(soc) != 1:
            raise InconsistentData("projective does not have a simple socle")
        v = soc[0]
        gv = [sum((G[a][b] * v[b] for b in range(P.dim)), field.zero) for a in range(P.dim)]
        k = next(a for a in range(P.dim) if v[a])
        ratio = gv[k] / v[k]
        socle.append(next(j for j in range(l) if z ** j == ratio))
    return TaftProjectives(l, alg.dim, tuple(cartan), tuple(socle), tuple(dims))


# -- small named examples --------------------------------------------------------------------

def group_algebra_z2(field: ExactField | None = None) -> EquivariantAlgebra:
    return build_from_presentation(["e"], [("e e", {"1": 1})], field)


def exterior_one(field: ExactField | None = None, with_structure: bool = True) -> EquivariantAlgebra:
    """k[y]/(y^2) with parity and the odd derivation d(y) = 1."""
    field = field or ExactField.rationals()
    if not with_structure:
        return build_from_presentation(["y"], [("y y", {})], field)
    return build_from_presentation(
        ["y"], [("y y", {})], field,
        actions={"u": {"order": 2, "images": {"y": {"y": -1}}}},
        derivations={"d": {"twist": "u", "images": {"y": {"1": 1}}, "nilpotency": 2, "odd": True}},
        parity="u", nilpotence_degree=1)


def clifford_one(b, field: ExactField | None = None) -> EquivariantAlgebra:
    return build_from_presentation(["y"], [("y y", {"1": b} if b else {})], field)


def trivial_action_square(field: ExactField | None = None) -> EquivariantAlgebra:
    """k x k with the trivial group action."""
    alg = build_group_quotient("Z2", None, field=field)
    alg.group = [GroupAction("g", alg.identity(), 1)]
    return alg
