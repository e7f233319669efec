"""Algebras from generators and rewriting relations.

Words are tuples of generator indices.  Each relation rewrites a word into
a linear combination of words; irreducible words reachable from the empty
word span the algebra.  Any relation between those words that the
rewriting system misses shows up as an associator, so the algebra is the
quotient of the span by the two-sided ideal generated by all associators.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import BadParameter, DimensionOverflow, InconsistentRelations
from .algebra import Derivation, EquivariantAlgebra, GroupAction, Subspace
from .fields import ExactField

Word = tuple[int, ...]
Combo = dict[Word, object]

MAX_REWRITE_STEPS = 200_000


def parse_scalar(field: ExactField, x):
    """Field element from an int, "p/q", a list of zeta-coefficients, or "c*zeta^k"."""
    if isinstance(x, (list, tuple)):
        z, acc = field.zeta, field.zero
        for k, c in enumerate(x):
            acc = acc + field(Fraction(c)) * z ** k
        return acc
    if isinstance(x, str):
        s = x.replace(" ", "")
        m = re.fullmatch(r"([+-]?\d*(?:/\d+)?)\*?zeta(?:\^\(?(-?\d+)\)?)?", s)
        if m:
            c = m.group(1)
            coef = Fraction(-1) if c == "-" else Fraction(1) if c in ("", "+") else Fraction(c)
            return field(coef) * field.zeta ** int(m.group(2) or 1)
        try:
            return field(Fraction(s))
        except ValueError:
            raise BadParameter(f"cannot parse scalar {x!r}") from None
    return field(x)


def parse_word(names: Sequence[str], text) -> Word:
    if isinstance(text, (list, tuple)):
        toks = list(text)
    else:
        toks = text.split()
    if toks in ([], ["1"]):
        return ()
    out = []
    for t in toks:
        m = re.fullmatch(r"(\w+?)(?:\^(\d+))?", t)
        if not m or m.group(1) not in names:
            raise BadParameter(f"unknown generator in {text!r}")
        out += [names.index(m.group(1))] * int(m.group(2) or 1)
    return tuple(out)


class Rewriter:
    def __init__(self, field: ExactField, rules: Sequence[tuple[Word, Combo]]):
        self.field = field
        self.rules = [(lhs, rhs) for lhs, rhs in rules]
        self.memo: dict[Word, Combo] = {}
        self.steps = 0

    def _match(self, w: Word):
        for i in range(len(w)):
            for lhs, rhs in self.rules:
                if w[i:i + len(lhs)] == lhs:
                    return i, lhs, rhs
        return None

    def nf(self, w: Word) -> Combo:
        if w in self.memo:
            return self.memo[w]
        self.steps += 1
        if self.steps > MAX_REWRITE_STEPS:
            raise DimensionOverflow("rewriting did not terminate within the step budget")
        m = self._match(w)
        if m is None:
            out = {w: self.field.one}
        else:
            i, lhs, rhs = m
            out: Combo = {}
            for rw, c in rhs.items():
                for nw, d in self.nf(w[:i] + rw + w[i + len(lhs):]).items():
                    out[nw] = out.get(nw, self.field.zero) + c * d
            out = {k: v for k, v in out.items() if v}
        self.memo[w] = out
        return out


def build_from_presentation(generators: Sequence[str], relations, field: ExactField | None = None,
                            dimension_bound: int = 64,
                            actions: Mapping | None = None,
                            derivations: Mapping | None = None,
                            commutations: Sequence = (),
                            parity: str | None = None,
                            nilpotence_degree: int | None = None) -> EquivariantAlgebra:
    """Algebra presented by generators and rewriting relations.

    ``relations`` is a list of (lhs, rhs) where lhs is a word and rhs maps
    words to scalars.  ``actions`` maps a group generator name to
    {"order": k, "images": {generator: combo}}; ``derivations`` maps a name
    to {"twist": group name or None, "images": {...}, "nilpotency": k,
    "odd": bool}.  ``commutations`` lists (derivation, group, scalar).
    """
    field = field or ExactField.rationals()
    names = list(generators)
    rules = []
    for lhs, rhs in relations:
        lw = parse_word(names, lhs)
        if not lw:
            raise BadParameter("a relation cannot rewrite the empty word")
        rules.append((lw, {parse_word(names, k): parse_scalar(field, v) for k, v in rhs.items()}))
    rw = Rewriter(field, rules)

    words: list[Word] = [()]
    index = {(): 0}

    def admit(combo: Combo):
        for w in combo:
            if w not in index:
                index[w] = len(words)
                words.append(w)
                if len(words) > dimension_bound:
                    raise DimensionOverflow(f"spanning set exceeds {dimension_bound} words")

    # each relation must hold between normal forms, even when its left side
    # is rewritten by an earlier rule
    checks = []
    for lw, rhs in rules:
        diff = dict(rw.nf(lw))
        for rword, c in rhs.items():
            for w, d in rw.nf(rword).items():
                diff[w] = diff.get(w, field.zero) - c * d
        diff = {w: c for w, c in diff.items() if c}
        if diff:
            admit(diff)
            checks.append(diff)

    head = 0
    while head < len(words):
        w = words[head]
        head += 1
        for x in range(len(names)):
            admit(rw.nf(w + (x,)))
    products: dict[tuple[int, int], Combo] = {}
    i = 0
    while i < len(words):
        for j in range(len(words)):
            if (i, j) not in products:
                c = rw.nf(words[i] + words[j])
                admit(c)
                products[(i, j)] = c
            if (j, i) not in products:
                c = rw.nf(words[j] + words[i])
                admit(c)
                products[(j, i)] = c
        i += 1

    n = len(words)
    zero = field.zero

    def vec(combo: Combo) -> list:
        v = [zero] * n
        for w, c in combo.items():
            v[index[w]] = v[index[w]] + c
        return v

    table = [[{index[w]: c for w, c in products[(a, b)].items()} for b in range(n)] for a in range(n)]

    def raw_mul(u, v):
        out = [zero] * n
        for a, x in enumerate(u):
            if x:
                for b, y in enumerate(v):
                    if y:
                        for k, c in table[a][b].items():
                            out[k] = out[k] + x * y * c
        return out

    basis = [vec({w: field.one}) for w in words]
    rels = [vec(c) for c in checks]
    for a in range(n):
        for b in range(n):
            ab = raw_mul(basis[a], basis[b])
            for c in range(n):
                lhs = raw_mul(ab, basis[c])
                rhs = raw_mul(basis[a], raw_mul(basis[b], basis[c]))
                d = [x - y for x, y in zip(lhs, rhs)]
                if any(d):
                    rels.append(d)
    ideal = Subspace(rels, n, field)
    if ideal.dim:
        queue = list(ideal.rows)
        while queue:
            r = queue.pop()
            for b in basis:
                for u in (raw_mul(r, b), raw_mul(b, r)):
                    if any(u) and not ideal.contains(u):
                        ideal = Subspace(ideal.rows + [u], n, field)
                        queue.append(u)
    if ideal.contains(basis[0]):
        raise InconsistentRelations("the relations force 1 = 0")

    keep = [k for k in range(n) if k not in ideal.pivots]
    pos = {k: t for t, k in enumerate(keep)}

    def project(v: list) -> list:
        for p, row in zip(ideal.pivots, ideal.rows):
            if v[p]:
                c = v[p]
                v = [a - c * b for a, b in zip(v, row)]
        return [v[k] for k in keep]

    m = len(keep)
    qtable = [[{pos[keep[t]]: c for t, c in enumerate(project(raw_mul(basis[a], basis[b]))) if c}
               for b in keep] for a in keep]
    unit = project(basis[0])
    qnames = [" ".join(names[x] for x in words[k]) or "1" for k in keep]
    alg = EquivariantAlgebra(field, m, qtable, unit, names=qnames)

    def combo_vec(combo) -> list:
        out = [zero] * m
        for wtext, c in combo.items():
            s = parse_scalar(field, c)
            for w, d in rw.nf(parse_word(names, wtext)).items():
                v = project(vec({w: field.one}))
                out = [a + s * d * b for a, b in zip(out, v)]
        return out

    gen_vecs = [combo_vec({x: 1}) for x in names]

    def word_vec(w: Word) -> list:
        v = list(alg.unit)
        for x in w:
            v = alg.mul(v, gen_vecs[x])
        return v

    group, gidx = [], {}
    for gname, spec in (actions or {}).items():
        images = [combo_vec(spec["images"].get(x, {x: 1})) for x in names]
        cols = []
        for k in keep:
            v = list(alg.unit)
            for x in words[k]:
                v = alg.mul(v, images[x])
            cols.append(v)
        gidx[gname] = len(group)
        group.append(GroupAction(gname, tuple(tuple(cols[j][i] for j in range(m)) for i in range(m)),
                                 spec.get("order")))
    alg.group = group

    ders = []
    for dname, spec in (derivations or {}).items():
        twist = spec.get("twist")
        tw = gidx[twist] if twist is not None else None
        tmat = group[tw].matrix if tw is not None else alg.identity()
        images = [combo_vec(spec["images"].get(x, {})) for x in names]
        twisted = [alg.apply(tmat, v) for v in gen_vecs]
        cols = []
        for k in keep:
            w = words[k]
            # d(x1 ... xr) = sum_i t(x1) ... t(x_{i-1}) d(x_i) x_{i+1} ... x_r
            acc = [zero] * m
            prefix = list(alg.unit)
            for i, x in enumerate(w):
                term = alg.mul(alg.mul(prefix, images[x]), word_vec(w[i + 1:]))
                acc = [a + b for a, b in zip(acc, term)]
                prefix = alg.mul(prefix, twisted[x])
            cols.append(acc)
        ders.append(Derivation(dname, tuple(tuple(cols[j][i] for j in range(m)) for i in range(m)),
                               tw, spec.get("nilpotency"), bool(spec.get("odd", False))))
    alg.derivations = ders
    alg.commutations = [(list((derivations or {}).keys()).index(d), gidx[g], parse_scalar(field, c))
                        for d, g, c in commutations]
    alg.parity = gidx[parity] if parity is not None else None
    alg.nilpotence_degree = nilpotence_degree
    return alg
