"""Based Z+-rings: fusion data, duality and validation."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .errors import (
    IndexOutOfRange,
    InvalidInput,
    LengthMismatch,
    NegativeEntry,
)
from .report import Finding

Vector = list[int]


def _strongly_connected(adj: Sequence[Sequence[bool]]) -> bool:
    n = len(adj)
    if n == 0:
        return True
    for transpose in (False, True):
        seen = {0}
        stack = [0]
        while stack:
            a = stack.pop()
            for b in range(n):
                edge = adj[b][a] if transpose else adj[a][b]
                if edge and b not in seen:
                    seen.add(b)
                    stack.append(b)
        if len(seen) != n:
            return False
    return True


class BasedRing:
    """A based ring with basis ``labels``.

    ``fusion[i][j][k]`` is the multiplicity of ``L_k`` in ``L_i L_j`` and
    ``star[i]`` is the index of the right dual.  ``units`` lists the basis
    elements whose sum is the identity; it has one entry for the
    Grothendieck ring of a tensor category and several for formal direct
    sums.
    """

    def __init__(self, labels: Sequence[str], units: int | Sequence[int],
                 fusion: Sequence[Sequence[Sequence[int]]], star: Sequence[int]):
        labels = [str(x) for x in labels]
        n = len(labels)
        if len(set(labels)) != n:
            raise InvalidInput("labels are not distinct")
        if n == 0:
            raise InvalidInput("a based ring needs at least one basis element")
        units = (units,) if isinstance(units, int) else tuple(units)
        if not units:
            raise InvalidInput("no unit given")
        for u in units:
            if not 0 <= u < n:
                raise IndexOutOfRange(f"unit index {u} out of range")
        if len(fusion) != n or any(len(row) != n for row in fusion) \
                or any(len(cell) != n for row in fusion for cell in row):
            raise LengthMismatch(f"fusion tensor must have shape {n}x{n}x{n}")
        N = tuple(tuple(tuple(int(x) for x in cell) for cell in row) for row in fusion)
        for i, j, k in product(range(n), repeat=3):
            if N[i][j][k] < 0:
                raise NegativeEntry(f"N[{labels[i]}][{labels[j]}][{labels[k]}] = {N[i][j][k]} is negative")
        star = tuple(int(s) for s in star)
        if len(star) != n:
            raise LengthMismatch("star must have one entry per label")
        if sorted(star) != list(range(n)):
            raise InvalidInput("star is not a bijection")
        self.labels = tuple(labels)
        self.units = units
        self.N = N
        self.star = star
        self._star_inv = tuple(star.index(i) for i in range(n))

    # -- basic structure ------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def unit(self) -> int:
        if len(self.units) != 1:
            raise InvalidInput("ring has a decomposable unit")
        return self.units[0]

    def star_inv(self, i: int) -> int:
        return self._star_inv[i]

    def index(self, label: str | int) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.rank:
                raise IndexOutOfRange(f"index {label} out of range")
            return label
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise IndexOutOfRange(f"unknown label {label!r}") from None

    def basis_vector(self, i: int) -> Vector:
        v = [0] * self.rank
        v[i] = 1
        return v

    def unit_vector(self) -> Vector:
        v = [0] * self.rank
        for u in self.units:
            v[u] = 1
        return v

    def _check_len(self, x: Sequence) -> None:
        if len(x) != self.rank:
            raise LengthMismatch(f"vector of length {len(x)} for ring of rank {self.rank}")

    # -- products -------------------------------------------------------------

    def gr_mul(self, x: Sequence, y: Sequence) -> list:
        self._check_len(x)
        self._check_len(y)
        n = self.rank
        out = [0] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                c = x[i] * y[j]
                row = self.N[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] += c * row[k]
        return out

    def mult_matrix(self, x: Sequence, side: str = "left") -> list[list[int]]:
        """Left: column j is x * L_j.  Right: column j is L_j * x."""
        self._check_len(x)
        n = self.rank
        if side not in ("left", "right"):
            raise InvalidInput(f"side must be 'left' or 'right', not {side!r}")
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                cell = self.N[i][j] if side == "left" else self.N[j][i]
                for k in range(n):
                    M[k][j] += x[i] * cell[k]
        return M

    def basis_matrix(self, i: int, side: str = "left") -> list[list[int]]:
        return self.mult_matrix(self.basis_vector(i), side)

    def total_matrix(self) -> list[list[int]]:
        """Sum of the left multiplication matrices of all basis elements."""
        return self.mult_matrix([1] * self.rank, "left")

    def dual_vector(self, x: Sequence) -> list:
        out = [0] * self.rank
        for i, c in enumerate(x):
            out[self.star[i]] += c
        return out

    def is_transitive(self) -> bool:
        T = self.total_matrix()
        return _strongly_connected([[T[a][b] > 0 for b in range(self.rank)]
                                    for a in range(self.rank)])

    def is_invertible(self, i: int) -> bool:
        """L_i L_{i*} equals the unit class exactly."""
        return self.gr_mul(self.basis_vector(i), self.basis_vector(self.star[i])) == self.unit_vector()

    # -- relabelling / serialization ------------------------------------------

    def permuted(self, order: Sequence[int]) -> "BasedRing":
        """Same ring with basis listed in ``order`` (new index a is old order[a])."""
        pos = {old: new for new, old in enumerate(order)}
        n = self.rank
        N = [[[self.N[order[a]][order[b]][order[c]] for c in range(n)] for b in range(n)]
             for a in range(n)]
        return BasedRing([self.labels[o] for o in order], [pos[u] for u in self.units], N,
                         [pos[self.star[o]] for o in order])

    def to_json(self) -> dict:
        L = self.labels
        fusion = {}
        for i, j in product(range(self.rank), repeat=2):
            cell = {L[k]: self.N[i][j][k] for k in range(self.rank) if self.N[i][j][k]}
            if cell:
                fusion[f"{L[i]}|{L[j]}"] = cell
        unit = L[self.units[0]] if len(self.units) == 1 else [L[u] for u in self.units]
        return {"labels": list(L), "unit": unit,
                "star": {L[i]: L[self.star[i]] for i in range(self.rank)},
                "fusion": fusion}

    @classmethod
    def from_json(cls, obj: dict) -> "BasedRing":
        try:
            labels = [str(x) for x in obj["labels"]]
            unit = obj["unit"]
            star_map = obj["star"]
            fusion_map = obj["fusion"]
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"ring JSON missing field: {exc}") from None
        pos = {lab: i for i, lab in enumerate(labels)}

        def idx(name):
            if str(name) not in pos:
                raise IndexOutOfRange(f"unknown label {name!r}")
            return pos[str(name)]

        n = len(labels)
        units = [idx(u) for u in unit] if isinstance(unit, list) else [idx(unit)]
        if not isinstance(star_map, dict):
            raise InvalidInput("star must be an object mapping labels to labels")
        missing = [lab for lab in labels if lab not in star_map]
        if missing:
            raise InvalidInput(f"star undefined on {missing}")
        star = [idx(star_map[lab]) for lab in labels]
        N = [[[0] * n for _ in range(n)] for _ in range(n)]
        if not isinstance(fusion_map, dict):
            raise InvalidInput("fusion must be an object")
        for key, cell in fusion_map.items():
            parts = str(key).split("|")
            if len(parts) != 2:
                raise InvalidInput(f"fusion key {key!r} is not of the form 'i|j'")
            i, j = idx(parts[0]), idx(parts[1])
            if not isinstance(cell, dict):
                raise InvalidInput(f"fusion entry {key!r} must be an object")
            for k, m in cell.items():
                if not isinstance(m, int) or isinstance(m, bool):
                    raise InvalidInput(f"fusion multiplicity for {key!r} -> {k!r} is not an integer")
                N[i][j][idx(k)] = m
        return cls(labels, units, N, star)

    @classmethod
    def from_rules(cls, labels: Sequence[str], unit: str, star: dict,
                   rules: dict[tuple[str, str], dict[str, int]]) -> "BasedRing":
        """Build from products of non-unit pairs; products with the unit
        are filled in automatically."""
        obj_fusion = {}
        for lab in labels:
            obj_fusion[f"{unit}|{lab}"] = {lab: 1}
            obj_fusion[f"{lab}|{unit}"] = {lab: 1}
        for (a, b), cell in rules.items():
            obj_fusion[f"{a}|{b}"] = dict(cell)
        return cls.from_json({"labels": list(labels), "unit": unit, "star": star,
                              "fusion": obj_fusion})

    def __eq__(self, other):
        if not isinstance(other, BasedRing):
            return NotImplemented
        return (self.labels, self.units, self.N, self.star) == \
            (other.labels, other.units, other.N, other.star)

    def __hash__(self):
        return hash((self.labels, self.units, self.N, self.star))

    def __repr__(self):
        return f"BasedRing({list(self.labels)})"


def group_ring(n: int, labels: Iterable[str] | None = None) -> BasedRing:
    """Z[Z/n] with basis g^0..g^(n-1) and star(i) = -i."""
    labels = list(labels) if labels is not None else [str(i) for i in range(n)]
    N = [[[int((i + j) % n == k) for k in range(n)] for j in range(n)] for i in range(n)]
    return BasedRing(labels, 0, N, [(-i) % n for i in range(n)])


def validate_ring(r: BasedRing, strict: bool = False) -> list[Finding]:
    """Axiom violations, each with a witness index tuple; empty if valid.

    With ``strict`` the coevaluation bound is upgraded to
    ``N[i][j][unit] = delta(j, star(i))`` (semisimple inputs).
    """
    n = r.rank
    N = r.N
    L = r.labels
    out: list[Finding] = []
    units = set(r.units)

    # unit laws
    for j, k in product(range(n), repeat=2):
        want = int(j == k)
        left = sum(N[u][j][k] for u in units)
        right = sum(N[j][u][k] for u in units)
        if left != want:
            out.append(Finding("unit_left", f"1*{L[j]} has coefficient {left} at {L[k]}", (j, k)))
        if right != want:
            out.append(Finding("unit_right", f"{L[j]}*1 has coefficient {right} at {L[k]}", (j, k)))

    # associativity
    for i, j, k in product(range(n), repeat=3):
        lhs = [0] * n
        rhs = [0] * n
        for m in range(n):
            a = N[i][j][m]
            if a:
                for l in range(n):
                    lhs[l] += a * N[m][k][l]
            b = N[j][k][m]
            if b:
                for l in range(n):
                    rhs[l] += b * N[i][m][l]
        for l in range(n):
            if lhs[l] != rhs[l]:
                out.append(Finding("associativity",
                                   f"({L[i]}{L[j]}){L[k]} and {L[i]}({L[j]}{L[k]}) differ at {L[l]}",
                                   (i, j, k, l)))
                break

    # duality
    for u in units:
        if r.star[u] not in units:
            out.append(Finding("star_unit", f"star moves the unit {L[u]}", (u,)))
    s = r.star
    for i, j, k in product(range(n), repeat=3):
        if N[i][j][k] != N[s[j]][s[i]][s[k]]:
            out.append(Finding("star_antiautomorphism",
                               f"N[{L[i]}][{L[j]}][{L[k]}] != N[{L[s[j]]}][{L[s[i]]}][{L[s[k]]}]",
                               (i, j, k)))
    for i in range(n):
        if strict:
            for j in range(n):
                val = sum(N[i][j][u] for u in units)
                if val != int(j == s[i]):
                    out.append(Finding("coevaluation_strict",
                                       f"unit multiplicity in {L[i]}{L[j]} is {val}", (i, j)))
        elif sum(N[i][s[i]][u] for u in units) < 1:
            out.append(Finding("coevaluation", f"unit does not occur in {L[i]}{L[s[i]]}", (i,)))
    return out
