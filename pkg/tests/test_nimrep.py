import itertools
import random

import numpy as np
import pytest

from ftcat import catalog, nimrep
from ftcat.catalog import GroupSpec
from ftcat.errors import RankTooLarge
from ftcat.nimrep import ZPlusModule, canonical_form, enumerate_modules, verify_module
from ftcat.ring import group_ring


def freeze(M):
    return tuple(tuple(int(x) for x in row) for row in M)


def module(*mats):
    return ZPlusModule(len(mats[0]), tuple(freeze(M) for M in mats))


def test_verify_regular_module():
    for r in (group_ring(4), catalog.fibonacci_ring(), catalog.s3_ring()):
        assert verify_module(r, nimrep.regular_module(r), duality=True) == []


def test_verify_quotient_module():
    swap = [[0, 1], [1, 0]]
    m = module(np.eye(2), swap, np.eye(2), swap)
    assert verify_module(group_ring(4), m, duality=True) == []


def test_verify_reducible_module():
    e = np.eye(2)
    found = verify_module(group_ring(4), module(e, e, e, e))
    assert [f.code for f in found] == ["irreducibility"]


# -- brute-force oracle ----------------------------------------------------------------

def brute_force(r, max_rank, entry_max):
    """Every irreducible module with transposition duality and entries <= entry_max,
    found by trying all matrices for each basis element independently."""
    out = set()
    n = r.rank
    for k in range(1, max_rank + 1):
        cells = [(a, b) for a in range(k) for b in range(k)]
        candidates = []
        for vals in itertools.product(range(entry_max + 1), repeat=len(cells)):
            M = [[0] * k for _ in range(k)]
            for (a, b), v in zip(cells, vals):
                M[a][b] = v
            candidates.append(freeze(M))
        ident = freeze(np.eye(k))
        # duality fixes R_(i*) as the transpose of R_i, so choose one per pair
        reps = [i for i in range(n) if i != r.unit and i <= r.star[i]]
        for choice in itertools.product(candidates, repeat=len(reps)):
            mats = [None] * n
            mats[r.unit] = ident
            for i, M in zip(reps, choice):
                mats[i] = M
                mats[r.star[i]] = freeze(np.array(M).T)
            m = ZPlusModule(k, tuple(mats))
            if not verify_module(r, m, duality=True):
                out.add(canonical_form(m))
    return out


def test_fibonacci_matches_brute_force():
    r = catalog.fibonacci_ring()
    # R_X v = phi v with v > 0 bounds every entry by phi < 2
    expected = brute_force(r, 3, 1)
    got = enumerate_modules(r, 3)
    assert set(got) == expected
    assert [m.rank for m in got] == [2]
    assert got[0] == canonical_form(nimrep.regular_module(r))


@pytest.mark.parametrize("n", [2, 3])
def test_cyclic_matches_brute_force(n):
    r = group_ring(n)
    assert set(enumerate_modules(r, n)) == brute_force(r, n, 1)


def test_z4_census():
    mods = enumerate_modules(group_ring(4), 4)
    assert [m.rank for m in mods] == [1, 2, 4]
    assert nimrep.census_match(mods, [1, 2, 4])
    assert not nimrep.census_match(mods, [1, 2, 3, 4])


def test_z6_census():
    assert nimrep.census_match(enumerate_modules(group_ring(6), 6), [1, 2, 3, 6])


def test_vec_single_module():
    vec = catalog.build_vec().ring
    mods = enumerate_modules(vec, 4)
    assert [m.rank for m in mods] == [1]


def test_rank_cap():
    with pytest.raises(RankTooLarge):
        enumerate_modules(group_ring(2), 9)


def brute_subgroups(spec):
    """Subsets containing 0 and closed under addition."""
    elems = spec.elements()
    out = []
    for mask in range(1, 2 ** len(elems)):
        S = {g for t, g in enumerate(elems) if mask >> t & 1}
        if spec.zero() in S and all(spec.add(a, b) in S for a in S for b in S):
            out.append(S)
    return out


@pytest.mark.parametrize("orders", [(2,), (3,), (4,), (6,), (2, 2)])
def test_group_ring_modules_are_transitive_gsets(orders):
    spec = GroupSpec.abelian(*orders)
    r = catalog.pointed_ring(spec)
    mods = enumerate_modules(r, spec.order)
    # transitive G-sets G/H, one per subgroup H
    subs = brute_subgroups(spec)
    assert len(mods) == len(subs)
    sizes = sorted(spec.order // len(H) for H in subs)
    assert sorted(m.rank for m in mods) == sizes
    for m in mods:
        assert all(sorted(row) == [0] * (m.rank - 1) + [1] for M in m.matrices for row in M)


@pytest.mark.parametrize("name", ["fibonacci", "taft:3", "group:S3", "pointed:2x2"])
def test_enumeration_invariants(name):
    cat = catalog.build_named(name)
    r = cat.ring
    mods = enumerate_modules(r, 3, fpdims=cat.d)
    rng = random.Random(name)
    order = list(range(r.rank))
    rng.shuffle(order)
    order.remove(r.unit)
    order.insert(0, r.unit)
    shuffled = r.permuted(order)
    again = enumerate_modules(shuffled, 3)
    assert {canonical_form(m.reindexed(order)) for m in mods} == set(again)
    for m in mods:
        assert verify_module(r, m, duality=True) == []
        v = nimrep.module_fp_vector(r, m, cat.d)
        assert all(x.sign() > 0 for x in v)
        for i, M in enumerate(m.matrices):
            assert [sum((M[a][b] * v[b] for b in range(m.rank)), v[0] * 0) for a in range(m.rank)] \
                == [cat.d[i] * x for x in v]


def test_canonical_form_is_permutation_invariant():
    r = catalog.s3_ring()
    m = nimrep.regular_module(r)
    for perm in itertools.permutations(range(3)):
        assert canonical_form(m.permuted(perm)) == canonical_form(m)
