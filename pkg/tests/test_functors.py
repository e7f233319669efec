import pytest
import sympy

from ftcat import catalog, functors
from ftcat.algnum import is_algebraic_integer, minimal_polynomial
from ftcat.catalog import GroupSpec
from ftcat.errors import ImageCartanUnavailable, NotASubring, NotSurjective
from ftcat.functors import FunctorData
from ftcat.ring import BasedRing
from ftcat.tensorcat import TensorCatData, deligne_product

from conftest import sym_minpoly


def pointed(*orders):
    return catalog.build_pointed(GroupSpec.abelian(*orders))


# -- validation ----------------------------------------------------------------------

def test_identity_functor_valid():
    for cat in (catalog.build_taft(3), catalog.build_fibonacci()):
        assert functors.validate_functor(catalog.identity_functor(cat)) == []


@pytest.mark.parametrize("l", [2, 3, 4, 6])
def test_taft_restriction_valid(l):
    assert functors.validate_functor(catalog.taft_restriction(l)) == []


def test_s3_restriction_valid():
    f = catalog.s3_restriction()
    assert [list(r) for r in f.A] == [[1, 0, 0], [1, 0, 0], [0, 1, 1]]
    assert functors.validate_functor(f) == []


def test_invalid_functor_reported():
    f = catalog.taft_restriction(2)
    bad = FunctorData(f.source, f.target, [[1, 0], [1, 1]], [[1, 1], [1, 1]])
    found = {x.code for x in functors.validate_functor(bad)}
    assert {"gr_k_compatibility", "multiplicativity", "fp_preservation"} <= found


# -- image, surjectivity, injectivity -------------------------------------------------

def test_image_examples():
    f = catalog.taft_restriction(3)
    assert functors.image_labels(f) == [0, 1, 2]
    inc = catalog.taft_inclusion(3)
    assert functors.image_labels(inc) == [0, 1, 2]
    # Vec -> Vec x Fib sending 1 to (1,1): image is the first factor only
    vec, fib = catalog.build_vec(), catalog.build_fibonacci()
    tgt = deligne_product(fib, vec)
    emb = FunctorData(vec, tgt, [[1, 0]], [[1], [0]])
    assert functors.image_labels(emb) == [0]


def test_identity_surjective_and_injective():
    f = catalog.identity_functor(catalog.build_taft(2))
    assert functors.is_surjective(f) and functors.is_injective(f)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_restriction_and_inclusion(l):
    res, inc = catalog.taft_restriction(l), catalog.taft_inclusion(l)
    assert functors.is_surjective(res) and not functors.is_injective(res)
    assert functors.is_injective(inc) and not functors.is_surjective(inc)
    assert functors.image_fpdim(res) == l
    assert functors.image_fpdim(inc) == l
    # dual pair exchange: surjective one way, injective the other
    assert functors.is_surjective(res) == functors.is_injective(inc)


def test_image_cartan_unavailable():
    res = catalog.taft_restriction(2)
    partial = FunctorData(res.source, res.target, res.A, None)
    with pytest.raises(ImageCartanUnavailable):
        functors.is_surjective(partial)
    # the one-sided bound still settles injectivity: d+ drops from 4 to at most 2
    assert not functors.is_injective(partial)


def test_equivalence_is_permutation():
    c = pointed(3)
    neg = FunctorData(c, c, [[int(c.ring.star[i] == j) for j in range(3)] for i in range(3)],
                      [[int(c.ring.star[i] == j) for i in range(3)] for j in range(3)])
    assert functors.validate_functor(neg) == []
    res = functors.analyze(neg)
    assert res.surjective and res.injective and not res.findings
    assert all(sorted(row) == [0, 0, 1] for row in neg.A)


def test_factorization_through_smaller_category():
    z2, vec = pointed(2), catalog.build_vec()
    to_vec = FunctorData(z2, vec, [[1], [1]], [[1, 1]])
    from_vec = FunctorData(vec, z2, [[1, 0]], [[1], [0]])
    f = functors.compose(to_vec, from_vec)
    assert functors.validate_functor(f) == []
    assert not functors.is_surjective(f) and not functors.is_injective(f)


# -- freeness ------------------------------------------------------------------------

def test_identity_freeness():
    res = functors.freeness_check(catalog.identity_functor(catalog.build_taft(3)))
    assert res.ratio == 1 and res.ok
    assert functors.integer_freeness(catalog.identity_functor(catalog.build_taft(3)))


@pytest.mark.parametrize("l", [2, 3, 4, 6])
def test_taft_freeness(l):
    f = catalog.taft_restriction(l)
    res = functors.freeness_check(f)
    assert res.ratio == l and res.ok
    assert functors.integer_freeness(f)


def test_s3_freeness():
    f = catalog.s3_restriction()
    res = functors.freeness_check(f)
    assert res.ratio == 2 and res.ok
    assert functors.integer_freeness(f)


def test_freeness_needs_surjective():
    with pytest.raises(NotSurjective):
        functors.freeness_check(catalog.taft_inclusion(2))


# -- Lagrange ------------------------------------------------------------------------

def test_lagrange_self():
    fib = catalog.build_fibonacci()
    res = functors.lagrange(fib, fib, ["1", "X"])
    assert res.quotient == 1 and res.integral


@pytest.mark.parametrize("l", [2, 3, 4, 6])
def test_lagrange_taft(l):
    res = functors.lagrange(pointed(l), catalog.build_taft(l), list(range(l)))
    assert res.quotient == l and res.integral


def test_lagrange_fibonacci():
    res = functors.lagrange(catalog.build_vec(), catalog.build_fibonacci(), {"1": "1"})
    assert minimal_polynomial(res.quotient) == sym_minpoly((5 + sympy.sqrt(5)) / 2) == (5, -5, 1)
    assert res.integral and is_algebraic_integer(res.quotient)


def test_lagrange_rejects_non_subring():
    with pytest.raises(NotASubring):
        functors.lagrange(pointed(2), catalog.build_fibonacci(), ["1", "X"])


# -- dimension identities ------------------------------------------------------------

def opposite(cat):
    r = cat.ring
    n = r.rank
    N = [[[r.N[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
    ring = BasedRing(r.labels, r.units, N, [r.star_inv(i) for i in range(n)])
    return TensorCatData(ring, cat.cartan, cat.characteristic)


def test_dual_pair():
    fib = catalog.build_fibonacci()
    for cat in (fib, catalog.build_taft(4), catalog.build_group_semisimple(GroupSpec(name="S3"))):
        assert functors.verify_dual_pair(cat, opposite(cat))
    assert functors.verify_dual_pair(catalog.build_taft(3), catalog.build_taft(3))
    assert not functors.verify_dual_pair(catalog.build_vec(), fib)


def test_center_dim_examples():
    vec = catalog.build_vec()
    assert functors.verify_center_dim(vec, vec, catalog.identity_functor(vec)) == []
    f = catalog.z2_center()
    assert functors.verify_center_dim(f.target, f.source, f) == []
    sw = catalog.build_taft(2)
    found = functors.verify_center_dim(sw, sw, catalog.identity_functor(sw))
    assert "center_dimension" in {x.code for x in found}


def test_json_round_trip():
    f = catalog.taft_restriction(3)
    obj = f.to_json()
    g = FunctorData.from_json(obj, TensorCatData.from_json(obj["source"]),
                              TensorCatData.from_json(obj["target"]))
    assert g.to_json() == obj
    assert functors.freeness_check(g).ratio == 3
