import itertools
from math import gcd

import pytest

from ftcat import catalog, nimrep
from ftcat.catalog import GroupSpec
from ftcat.errors import BadParameter, NotPrime, UnsupportedGroup
from ftcat.ring import group_ring, validate_ring
from ftcat.tensorcat import validate_category

from conftest import EXAMPLES


# -- builders ---------------------------------------------------------------------

def test_build_taft_examples():
    t = catalog.build_taft(2)
    assert t.rank == 2 and [list(r) for r in t.cartan] == [[1, 1], [1, 1]]
    assert list(t.socle) == [1, 0]
    with pytest.raises(BadParameter):
        catalog.build_taft(1)
    with pytest.raises(BadParameter):
        catalog.build_taft(4, characteristic=2)


def test_build_modular_cyclic_examples():
    c = catalog.build_modular_cyclic(3, 2)
    assert c.rank == 1 and [list(r) for r in c.cartan] == [[9]] and c.characteristic == 3
    with pytest.raises(NotPrime):
        catalog.build_modular_cyclic(4)
    with pytest.raises(BadParameter):
        catalog.build_modular_cyclic(2, 0)


def test_group_spec_parsing():
    assert GroupSpec.parse("2x2").factors == (2, 2)
    assert GroupSpec.parse("Z/2xZ/3").factors == (6,)
    assert GroupSpec.parse("4x2").factors == (2, 4)
    assert GroupSpec.parse("trivial").order == 1
    assert GroupSpec.parse("S3").order == 6
    with pytest.raises(UnsupportedGroup):
        GroupSpec.parse("A5")
    with pytest.raises(UnsupportedGroup):
        GroupSpec(name="D4")


def test_unsupported_groups():
    s3 = GroupSpec(name="S3")
    with pytest.raises(UnsupportedGroup):
        catalog.count_repG_module_cats(s3)
    with pytest.raises(UnsupportedGroup):
        catalog.pointed_ring(s3)
    with pytest.raises(NotPrime):
        catalog.count_repG_module_cats(GroupSpec.abelian(2), 4)


def test_build_named_errors():
    with pytest.raises(BadParameter):
        catalog.build_named("taft:x")
    with pytest.raises(BadParameter):
        catalog.build_named("nonsense")
    with pytest.raises(NotPrime):
        catalog.build_named("modular-cyclic:6")


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_examples_valid(name):
    assert validate_category(EXAMPLES[name]) == []


# -- components --------------------------------------------------------------------

def test_decompose_fibonacci_plus_z2():
    fib, z2 = catalog.fibonacci_ring(), group_ring(2)
    total = catalog.direct_sum(fib, z2)
    assert validate_ring(total) == []
    assert not total.is_transitive()
    parts = catalog.decompose_components(total)
    assert [p.rank for p in parts] == [2, 2]
    assert parts[0].N == fib.N and parts[1].N == z2.N
    assert all(p.is_transitive() for p in parts)


def test_decompose_transitive_is_trivial():
    r = catalog.s3_ring()
    assert [p.N for p in catalog.decompose_components(r)] == [r.N]


# -- module category counts -----------------------------------------------------------

def brute_subgroups(spec):
    elems = spec.elements()
    out = []
    for mask in range(1, 2 ** len(elems)):
        S = frozenset(g for t, g in enumerate(elems) if mask >> t & 1)
        if spec.zero() in S and all(spec.add(a, b) in S for a in S for b in S):
            out.append(S)
    return out


def span(spec, gens):
    seen = {spec.zero(): (0,) * len(gens)}
    frontier = [spec.zero()]
    while frontier:
        h = frontier.pop()
        for t, g in enumerate(gens):
            k = spec.add(h, g)
            if k not in seen:
                seen[k] = tuple(c + (s == t) for s, c in enumerate(seen[h]))
                frontier.append(k)
    return seen


def alternating_bicharacters(spec, H, characteristic):
    """Alternating bicharacters H x H -> Z/e, found by brute force over their
    values on a generating set. In characteristic p only values of order
    prime to p survive, since k* has no nontrivial p-torsion."""
    e = max(spec.factors, default=1)
    gens = []
    for h in sorted(H):
        if h not in span(spec, gens):
            gens.append(h)
    coords = span(spec, gens)
    m = len(gens)
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    found = set()
    for vals in itertools.product(range(e), repeat=len(pairs)):
        b = {}
        for (i, j), v in zip(pairs, vals):
            b[i, j], b[j, i] = v, -v % e

        def beta(x, y):
            cx, cy = coords[x], coords[y]
            return sum(cx[i] * cy[j] * b.get((i, j), 0) for i in range(m) for j in range(m)) % e

        if not all(beta(spec.add(x, z), y) == (beta(x, y) + beta(z, y)) % e
                   for x in H for y in H for z in H):
            continue
        table = tuple(beta(x, y) for x in sorted(H) for y in sorted(H))
        if characteristic and any((e // gcd(v, e)) % characteristic == 0 for v in table if v):
            continue
        found.add(table)
    return len(found)


def oracle_count(spec, characteristic=0):
    return sum(alternating_bicharacters(spec, H, characteristic) for H in brute_subgroups(spec))


def test_klein_counts():
    k = GroupSpec.abelian(2, 2)
    assert catalog.count_repG_module_cats(k, 0).total == oracle_count(k, 0) == 6
    assert catalog.count_repG_module_cats(k, 2).total == oracle_count(k, 2) == 5


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_cyclic_prime_in_own_characteristic(p):
    assert catalog.count_repG_module_cats(GroupSpec.abelian(p), p).total == 2


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclic_counts_subgroups(n):
    spec = GroupSpec.abelian(n) if n > 1 else GroupSpec(())
    res = catalog.count_repG_module_cats(spec, 0)
    # a cyclic group has one subgroup per divisor and no nontrivial 2-cocycles
    assert res.total == len(catalog.divisors(n)) == len(brute_subgroups(spec))
    assert all(m == 1 for _, _, m in res.items)


@pytest.mark.parametrize("orders,char", [((2, 4), 0), ((3, 3), 0), ((3, 3), 3), ((2, 2, 2), 0),
                                         ((2, 2, 2), 2), ((2, 6), 3), ((2, 6), 0)])
def test_counts_match_brute_force(orders, char):
    spec = GroupSpec.abelian(*orders)
    res = catalog.count_repG_module_cats(spec, char)
    assert res.total == oracle_count(spec, char)
    assert sorted(o for _, o, _ in res.items) == sorted(len(H) for H in brute_subgroups(spec))


# -- Taft census --------------------------------------------------------------------

@pytest.mark.parametrize("l", [2, 3, 4, 6])
def test_taft_census_shape(l):
    census = catalog.taft_module_census(l)
    divs = [d for d in range(1, l + 1) if l % d == 0]
    assert len(census) == 2 * len(divs)
    assert sorted(e.simple_count for e in census) == sorted(divs * 2)
    assert {e.parameter_dimension for e in census if e.description == "semisimple family"} == {1}


@pytest.mark.parametrize("l", [2, 3, 4])
def test_taft_census_against_nimreps(l):
    # the NIM-reps over Gr(Rep H_l) are the transitive Z/l-sets, one per divisor
    cat = catalog.build_taft(l)
    mods = nimrep.enumerate_modules(cat.ring, l)
    counts = sorted({e.simple_count for e in catalog.taft_module_census(l)})
    assert sorted(m.rank for m in mods) == counts
    assert nimrep.census_match(mods, counts)


def test_census_bad_parameter():
    with pytest.raises(BadParameter):
        catalog.taft_module_census(1)
