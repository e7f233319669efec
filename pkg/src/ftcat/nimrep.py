"""Irreducible Z+-modules (NIM-reps) over a based ring: verification,
exhaustive enumeration and canonical forms.

Convention: ``R[i][b2][b]`` is the multiplicity of the basis element b2
in L_i * b, so that ``R_i R_j = sum_k N_ij^k R_k``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .errors import EigenspaceDimensionNotOne, InvalidInput, RankTooLarge
from .report import Finding
from .ring import BasedRing, _strongly_connected
from .tensorcat import TensorCatData

Matrix = tuple[tuple[int, ...], ...]
DEFAULT_RANK_CAP = 8


def _mm(A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        oi = out[i]
        for k in range(m):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(p):
                    if Bk[j]:
                        oi[j] += a * Bk[j]
    return out


def _freeze(M) -> Matrix:
    return tuple(tuple(r) for r in M)


def _transpose(M) -> Matrix:
    return tuple(zip(*M)) if M else ()


@dataclass(frozen=True)
class ZPlusModule:
    rank: int
    matrices: tuple[Matrix, ...]

    def to_json(self) -> dict:
        return {"rank": self.rank, "matrices": [[list(r) for r in M] for M in self.matrices]}

    def permuted(self, perm: Sequence[int]) -> "ZPlusModule":
        """New basis element a is old perm[a]."""
        return ZPlusModule(self.rank, tuple(
            tuple(tuple(M[perm[a]][perm[b]] for b in range(self.rank)) for a in range(self.rank))
            for M in self.matrices))

    def reindexed(self, order: Sequence[int]) -> "ZPlusModule":
        """Same module over a ring whose basis was reordered by ``order``."""
        return ZPlusModule(self.rank, tuple(self.matrices[o] for o in order))


def regular_module(r: BasedRing) -> ZPlusModule:
    return ZPlusModule(r.rank, tuple(_freeze(r.basis_matrix(i, "left")) for i in range(r.rank)))


def verify_module(r: BasedRing, m: ZPlusModule, duality: bool = False) -> list[Finding]:
    out: list[Finding] = []
    n, k = r.rank, m.rank
    if len(m.matrices) != n or any(len(M) != k or any(len(row) != k for row in M)
                                   for M in m.matrices):
        return [Finding("shape", f"need {n} matrices of size {k}x{k}", ())]
    R = m.matrices
    for i, M in enumerate(R):
        if any(x < 0 for row in M for x in row):
            out.append(Finding("negative_entry", f"R_{r.labels[i]} has a negative entry", (i,)))
    ident = tuple(tuple(int(a == b) for b in range(k)) for a in range(k))
    unit_sum = [[sum(R[u][a][b] for u in r.units) for b in range(k)] for a in range(k)]
    if _freeze(unit_sum) != ident:
        out.append(Finding("unit", "the unit does not act as the identity", ()))
    for i in range(n):
        for j in range(n):
            lhs = _mm(R[i], R[j])
            rhs = [[0] * k for _ in range(k)]
            for t, c in enumerate(r.N[i][j]):
                if c:
                    for a in range(k):
                        for b in range(k):
                            rhs[a][b] += c * R[t][a][b]
            if lhs != rhs:
                out.append(Finding("relation", f"R_{r.labels[i]} R_{r.labels[j]} violates the fusion rule",
                                   (i, j)))
    adj = [[any(R[i][b][a] for i in range(n)) for b in range(k)] for a in range(k)]
    if not _strongly_connected(adj):
        out.append(Finding("irreducibility", "support graph is not strongly connected", ()))
    if duality:
        for i in range(n):
            if R[r.star[i]] != _transpose(R[i]):
                out.append(Finding("duality", f"R_{r.labels[i]}* is not the transpose of R_{r.labels[i]}",
                                   (i,)))
    return out


# -- canonical form -----------------------------------------------------------------------

def canonical_form(m: ZPlusModule) -> ZPlusModule:
    """Lexicographically least simultaneous basis permutation.

    The comparison key lists, for t = 0, 1, ..., every entry R_i[a][b] with
    max(a, b) = t; fixing the images of the first t+1 positions fixes that
    block, which makes branch and bound possible.
    """
    k = m.rank
    R = m.matrices
    best_key: list[tuple] | None = None
    best_perm: list[int] | None = None

    def block(perm, t):
        pt = perm[t]
        vals = []
        for M in R:
            for s in range(t + 1):
                ps = perm[s]
                vals.append(M[ps][pt])
                vals.append(M[pt][ps])
        return tuple(vals)

    def dfs(perm, used, key):
        nonlocal best_key, best_perm
        t = len(perm)
        if t == k:
            if best_key is None or key < best_key:
                best_key, best_perm = list(key), list(perm)
            return
        for c in range(k):
            if used[c]:
                continue
            perm.append(c)
            b = block(perm, t)
            key.append(b)
            if best_key is None or key <= best_key[:t + 1]:
                used[c] = True
                dfs(perm, used, key)
                used[c] = False
            key.pop()
            perm.pop()

    dfs([], [False] * k, [])
    return m.permuted(best_perm)


# -- enumeration ----------------------------------------------------------------------------

def _real_floor(x) -> int:
    return x.to_real().floor()


def _plan(r: BasedRing, d, duality: bool):
    """Order in which module matrices are chosen freely or derived."""
    n = r.rank
    known = set(r.units)
    steps = []
    while len(known) < n:
        progress = True
        while progress:
            progress = False
            for i in sorted(known):
                for j in sorted(known):
                    unknown = [t for t in range(n) if r.N[i][j][t] and t not in known]
                    if len(unknown) == 1:
                        t = unknown[0]
                        steps.append(("derive", t, i, j))
                        known.add(t)
                        if duality and r.star[t] not in known:
                            steps.append(("dual", r.star[t], t))
                            known.add(r.star[t])
                        progress = True
        if len(known) == n:
            break
        s = min((t for t in range(n) if t not in known), key=lambda t: (d[t].to_real(), t))
        steps.append(("free", s))
        known.add(s)
        if duality and r.star[s] not in known:
            steps.append(("dual", r.star[s], s))
            known.add(r.star[s])
    return steps


def enumerate_modules(r: BasedRing, max_rank: int, duality: bool = True,
                      rank_cap: int = DEFAULT_RANK_CAP,
                      fpdims: Sequence | None = None) -> list[ZPlusModule]:
    """All irreducible Z+-modules of rank <= max_rank up to basis
    permutation, in canonical form, sorted by (rank, matrices)."""
    if max_rank < 1:
        raise InvalidInput("max_rank must be at least 1")
    if max_rank > rank_cap:
        raise RankTooLarge(f"max_rank {max_rank} exceeds the cap {rank_cap}")
    if len(r.units) != 1:
        raise InvalidInput("enumeration needs a ring with a simple unit")
    if fpdims is None:
        fpdims = TensorCatData(r, [[int(i == j) for j in range(r.rank)] for i in range(r.rank)]).d
    steps = _plan(r, fpdims, duality)
    total_dim = sum(fpdims[1:], start=fpdims[0])
    # a positive eigenvector with R_i v = d_i v makes d_i the spectral radius of R_i
    radius = [x.to_real().hi for x in fpdims]
    found: set[ZPlusModule] = set()
    for k in range(1, max_rank + 1):
        if duality:
            bounds = [_real_floor(x) for x in fpdims]
        else:
            scale = total_dim ** (k - 1)
            bounds = [_real_floor(x * scale) for x in fpdims]
        for mod in _search(r, k, steps, bounds, duality, radius):
            if not verify_module(r, mod, duality):
                found.add(canonical_form(mod))
    return sorted(found, key=lambda m: (m.rank, m.matrices))


def _search(r: BasedRing, k: int, steps, bounds, duality: bool, radius):
    n = r.rank
    ident = tuple(tuple(int(a == b) for b in range(k)) for a in range(k))
    R: list[Matrix | None] = [None] * n
    for u in r.units:
        R[u] = ident

    def closed_relations_hold(s):
        """R_i R_j = sum_t N_ij^t R_t for every pair through s whose terms are all known."""
        for i in range(n):
            for j in range(n):
                if s not in (i, j) or R[i] is None or R[j] is None:
                    continue
                if any(c and R[t] is None for t, c in enumerate(r.N[i][j])):
                    continue
                M = _mm(R[i], R[j])
                for t, c in enumerate(r.N[i][j]):
                    if c:
                        Rt = R[t]
                        for a in range(k):
                            for b in range(k):
                                M[a][b] -= c * Rt[a][b]
                if any(any(row) for row in M):
                    return False
        return True

    def run(pos):
        if pos == len(steps):
            yield ZPlusModule(k, tuple(R))
            return
        step = steps[pos]
        kind = step[0]
        if kind == "dual":
            _, t, src = step
            R[t] = _transpose(R[src])
            yield from run(pos + 1)
            R[t] = None
        elif kind == "derive":
            _, t, i, j = step
            M = _mm(R[i], R[j])
            c = r.N[i][j][t]
            for s, cs in enumerate(r.N[i][j]):
                if cs and s != t:
                    Rs = R[s]
                    for a in range(k):
                        for b in range(k):
                            M[a][b] -= cs * Rs[a][b]
            for a in range(k):
                for b in range(k):
                    if M[a][b] < 0 or M[a][b] % c or M[a][b] // c > bounds[t]:
                        return
                    M[a][b] //= c
            R[t] = _freeze(M)
            yield from run(pos + 1)
            R[t] = None
        else:
            _, s = step
            for M in _free_matrices(r, k, s, R, bounds, duality, radius[s]):
                R[s] = M
                if closed_relations_hold(s):
                    yield from run(pos + 1)
                R[s] = None

    yield from run(0)


def _free_matrices(r: BasedRing, k: int, s: int, R, bounds, duality: bool, rho):
    """Candidate matrices for a freely chosen generator, row by row, pruned
    (with duality) by R_s R_s^T = sum_t N_{s s*}^t R_t, and always by the
    spectral radius: the product along any m-cycle is at most rho^m."""
    bound = bounds[s]
    self_dual = r.star[s] == s
    gram = r.N[s][r.star[s]]
    rows: list[list[int]] = []

    def gram_ok(a):
        ra = rows[a]
        for b in range(a + 1):
            rb = rows[b]
            lhs = sum(x * y for x, y in zip(ra, rb))
            lo = hi = 0
            for t, c in enumerate(gram):
                if not c:
                    continue
                if R[t] is not None:
                    v = R[t][a][b]
                    lo += c * v
                    hi += c * v
                elif t == s:
                    v = rows[a][b]
                    lo += c * v
                    hi += c * v
                elif t == r.star[s]:
                    v = rows[b][a]
                    lo += c * v
                    hi += c * v
                else:
                    hi += c * bounds[t]
            if not lo <= lhs <= hi:
                return False
        return True

    def cycles_ok(a, b, v):
        if b == a:
            return v <= rho
        if b > a:
            return True
        if v * rows[b][a] > rho ** 2:
            return False
        return all(v * rows[b][c] * rows[c][a] <= rho ** 3 for c in range(a) if c != b)

    def fill_row(a, b, row):
        if b == k:
            rows.append(list(row))
            if not duality or gram_ok(a):
                yield from fill(a + 1)
            rows.pop()
            return
        if self_dual and duality and b < a:
            row.append(rows[b][a])
            yield from fill_row(a, b + 1, row)
            row.pop()
            return
        for v in range(bound + 1):
            if v and not cycles_ok(a, b, v):
                continue
            row.append(v)
            yield from fill_row(a, b + 1, row)
            row.pop()

    def fill(a):
        if a == k:
            yield _freeze(rows)
            return
        yield from fill_row(a, 0, [])

    yield from fill(0)


def census_match(modules: Sequence[ZPlusModule], expected: Sequence[int]) -> bool:
    return Counter(m.rank for m in modules) == Counter(expected)


def module_fp_vector(r: BasedRing, m: ZPlusModule, fpdims: Sequence):
    """Positive common eigenvector v with R_i v = d_i v, normalized v[0] = 1."""
    one = fpdims[0] * 0 + 1
    zero = fpdims[0] * 0
    rows = []
    for i, M in enumerate(m.matrices):
        for a in range(m.rank):
            rows.append([one * M[a][b] - (fpdims[i] if a == b else zero) for b in range(m.rank)])
    basis = linalg.nullspace(rows, m.rank, one=one, zero=zero)
    if len(basis) != 1:
        raise EigenspaceDimensionNotOne(f"common eigenspace has dimension {len(basis)}")
    v = basis[0]
    return [x / v[0] for x in v]
