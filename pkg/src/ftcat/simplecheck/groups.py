"""Concrete finite groups for building equivariant algebras."""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Hashable, Iterable

from ..catalog import GroupSpec
from ..errors import NotASubgroup, UnsupportedGroup


class FiniteGroup:
    def __init__(self, elements: list, mul: Callable, identity: Hashable,
                 generators: list[tuple[str, Hashable]], name: str = ""):
        self.elements = list(elements)
        self._mul = mul
        self.identity = identity
        self.generators = generators
        self.name = name
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._inv = {}
        for a in self.elements:
            for b in self.elements:
                if mul(a, b) == identity:
                    self._inv[a] = b
                    break

    @classmethod
    def from_spec(cls, spec) -> "FiniteGroup":
        if isinstance(spec, FiniteGroup):
            return spec
        if isinstance(spec, str):
            spec = GroupSpec.parse(spec)
        if spec.name == "S3":
            elems = sorted(permutations(range(3)))
            return cls(elems, lambda a, b: tuple(a[b[x]] for x in range(3)), (0, 1, 2),
                       [("r", (1, 2, 0)), ("s", (1, 0, 2))], "S3")
        if spec.name is not None:
            raise UnsupportedGroup(f"no concrete model for {spec.name}")
        gens = []
        for k in range(len(spec.factors)):
            gens.append((f"g{k}" if len(spec.factors) > 1 else "g",
                         tuple(int(i == k) for i in range(len(spec.factors)))))
        return cls(spec.elements(), spec.add, spec.zero(), gens, str(spec))

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a, b):
        return self._mul(a, b)

    def inv(self, a):
        return self._inv[a]

    def contains(self, a) -> bool:
        return a in self._index

    def element_order(self, a) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def generated(self, gens: Iterable) -> frozenset:
        gens = list(gens)
        for g in gens:
            if not self.contains(g):
                raise NotASubgroup(f"{g!r} is not an element of {self.name}")
        out = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return frozenset(out)

    def subgroup(self, elements: Iterable) -> frozenset:
        """Validate a subset as a subgroup."""
        H = frozenset(elements)
        for h in H:
            if not self.contains(h):
                raise NotASubgroup(f"{h!r} is not an element of {self.name}")
        if self.identity not in H:
            raise NotASubgroup("subset does not contain the identity")
        for a in H:
            for b in H:
                if self.mul(a, b) not in H:
                    raise NotASubgroup("subset is not closed under multiplication")
        return H

    def cosets(self, H: frozenset) -> list:
        """Representatives t_i of the left cosets t_i H, in element order."""
        reps, seen = [], set()
        for g in self.elements:
            if g in seen:
                continue
            reps.append(g)
            seen.update(self.mul(g, h) for h in H)
        return reps

    def decompose(self, reps: list, H: frozenset, x) -> tuple[int, Hashable]:
        """(j, k) with x = t_j k, k in H."""
        for j, t in enumerate(reps):
            k = self.mul(self.inv(t), x)
            if k in H:
                return j, k
        raise NotASubgroup("coset decomposition failed")

    def word_for(self, target) -> list[int]:
        """Indices of generators whose product (left to right) is ``target``."""
        gens = [g for _, g in self.generators]
        paths = {self.identity: []}
        frontier = [self.identity]
        while frontier and target not in paths:
            nxt = []
            for x in frontier:
                for i, g in enumerate(gens):
                    y = self.mul(x, g)
                    if y not in paths:
                        paths[y] = paths[x] + [i]
                        nxt.append(y)
            frontier = nxt
        return paths[target]
