"""Burnside closure: dimension of the operator algebra generated by a set of
n x n matrices, computed modulo a large prime with an exact fallback, and
a spinning search for invariant subspaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import EquivariantAlgebra, Subspace
from .fields import modular_prime


@dataclass(frozen=True)
class SimplicityResult:
    simple: bool
    closure_dim: int
    n: int
    witness: tuple[tuple, ...] | None = None
    method: str = "modular"
    note: str = ""

    def __bool__(self):
        return self.simple

    def __iter__(self):
        yield self.simple
        yield self.witness


class _Echelon:
    """Incrementally maintained reduced row echelon basis over Z/q."""

    def __init__(self, width: int, q: int):
        self.q = q
        self.rows = np.zeros((0, width), dtype=np.int64)
        self.pivots: list[int] = []

    def reduce(self, v: np.ndarray) -> np.ndarray:
        if self.pivots:
            c = v[self.pivots]
            v = (v - (c @ self.rows) % self.q) % self.q
        return v

    def add(self, v: np.ndarray) -> bool:
        v = self.reduce(v % self.q)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        p = int(nz[0])
        v = v * pow(int(v[p]), -1, self.q) % self.q
        if self.pivots:
            col = self.rows[:, p].copy()
            self.rows = (self.rows - np.outer(col, v) % self.q) % self.q
        self.rows = np.vstack([self.rows, v])
        self.pivots.append(p)
        return True


def _modular_ops(alg: EquivariantAlgebra, ops) -> tuple[list[np.ndarray], int] | None:
    field = alg.field
    if field.kind == "Fp":
        q = field.p
        return [np.array([[x.v for x in row] for row in M], dtype=np.int64) for M in ops], q
    l = field.l if field.kind == "cyclotomic" else 1
    start = (1 << 25) + 1
    for _ in range(20):
        q, omega = modular_prime(l, start)
        red = field.reducer(q, omega)
        try:
            mats = [np.array([[red(x) for x in row] for row in M], dtype=np.int64) for M in ops]
        except ValueError:  # a denominator vanishes mod q
            start = q + 1
            continue
        return mats, q
    return None


def closure_dimension_modular(mats: Sequence[np.ndarray], q: int, n: int) -> int:
    """Dimension over Z/q of the algebra generated by ``mats`` and the identity."""
    target = n * n
    ech = _Echelon(target, q)
    ident = np.eye(n, dtype=np.int64)
    ech.add(ident.reshape(-1))
    queue = [ident]
    head = 0
    while head < len(queue) and len(ech.pivots) < target:
        B = queue[head]
        head += 1
        for M in mats:
            P = (B @ M) % q
            if ech.add(P.reshape(-1)):
                queue.append(P)
                if len(ech.pivots) == target:
                    break
    return len(ech.pivots)


def closure_dimension_exact(alg: EquivariantAlgebra, ops) -> int:
    n = alg.dim
    ident = alg.identity()
    queue = [ident]
    space = Subspace([[x for row in ident for x in row]], n * n, alg.field)
    head = 0
    while head < len(queue) and space.dim < n * n:
        B = queue[head]
        head += 1
        for M in ops:
            P = alg.compose(B, M)
            flat = [x for row in P for x in row]
            if not space.contains(flat):
                space = Subspace(space.rows + [flat], n * n, alg.field)
                queue.append(P)
    return space.dim


def spin(alg: EquivariantAlgebra, v: Sequence, ops) -> Subspace:
    """Smallest subspace containing v and stable under every operator."""
    space = Subspace([v], alg.dim, alg.field)
    queue = [list(v)]
    head = 0
    while head < len(queue):
        w = queue[head]
        head += 1
        for M in ops:
            u = alg.apply(M, w)
            if any(u) and not space.contains(u):
                space = Subspace(space.rows + [u], alg.dim, alg.field)
                queue.append(u)
                if space.dim == alg.dim:
                    return space
    return space


def find_witness(alg: EquivariantAlgebra, ops) -> Subspace | None:
    candidates = [alg.basis_vec(i) for i in range(alg.dim)]
    # images of idempotent basis elements under right multiplication
    for i in range(alg.dim):
        e = alg.basis_vec(i)
        if alg.mul(e, e) == e:
            for j in range(alg.dim):
                w = alg.mul(e, alg.basis_vec(j))
                if any(w):
                    candidates.append(w)
    for v in candidates:
        s = spin(alg, v, ops)
        if 0 < s.dim < alg.dim:
            return s
    return None


def is_simple_from_right(alg: EquivariantAlgebra, ops=None) -> SimplicityResult:
    """Decide whether ``alg`` has no proper nonzero right ideal stable under
    the group action and the derivations, over the algebraic closure."""
    n = alg.dim
    if ops is None:
        ops = alg.operators()
    if n == 1:
        return SimplicityResult(True, 1, 1, method="trivial")
    mod = _modular_ops(alg, ops)
    d = -1
    if mod is not None:
        mats, q = mod
        d = closure_dimension_modular(mats, q, n)
        if d == n * n:
            return SimplicityResult(True, d, n, method="modular")
        if alg.field.kind == "Fp":
            w = find_witness(alg, ops)
            return SimplicityResult(False, d, n, _rows(w), "exact-Fp",
                                    "" if w else "reducible over the closure, no rational witness found")
    w = find_witness(alg, ops)
    if w is not None:
        return SimplicityResult(False, d, n, _rows(w), "witness")
    d = closure_dimension_exact(alg, ops)
    if d == n * n:
        return SimplicityResult(True, d, n, method="exact")
    return SimplicityResult(False, d, n, None, "exact",
                            "reducible over the closure, no rational witness found")


def _rows(s: Subspace | None):
    if s is None:
        return None
    return tuple(tuple(r) for r in s.rows)


__all__ = ["SimplicityResult", "is_simple_from_right", "spin", "find_witness",
           "closure_dimension_modular", "closure_dimension_exact"]
