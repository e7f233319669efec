import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ftcat import catalog, tensorcat
from ftcat.algnum import minimal_polynomial
from ftcat.catalog import GroupSpec
from ftcat.errors import Ambiguous, CharacteristicMismatch, IndexOutOfRange, NotTransitive
from ftcat.ring import group_ring
from ftcat.simplecheck import taft_projectives
from ftcat.tensorcat import TensorCatData

from conftest import EXAMPLES, sym_minpoly


def as_float(x):
    return float(x.to_real().refine(2 ** -40).lo)


# -- FP dimensions -------------------------------------------------------------------

def test_fpdims_taft3_all_one():
    assert [di == 1 for di in catalog.build_taft(3).d] == [True] * 3


def test_fpdims_fibonacci():
    cat = catalog.build_fibonacci()
    d = cat.d
    assert d[0] == 1
    assert minimal_polynomial(d[1]) == sym_minpoly(sympy.GoldenRatio)
    assert abs(as_float(d[1]) - (1 + 5 ** 0.5) / 2) < 1e-9


def test_fpdims_modular_cyclic():
    assert list(catalog.build_modular_cyclic(3, 1).d) == [1]


def test_fpdims_reject_non_transitive():
    r = catalog.direct_sum(group_ring(1), group_ring(2))
    cat = TensorCatData(r, [[int(i == j) for j in range(3)] for i in range(3)])
    with pytest.raises(NotTransitive):
        cat.d


def test_fpdim_object_examples():
    fib = catalog.build_fibonacci()
    assert fib.fpdim_object([1, 0]) == 1
    assert fib.fpdim_object([1, 1]) == 1 + fib.d[1]
    taft4 = catalog.build_taft(4)
    assert taft4.fpdim_object(taft4.cartan[0]) == 4


@pytest.mark.parametrize("l", [2, 3, 4, 6])
def test_fpdim_category_taft(l):
    assert catalog.build_taft(l).fpdim_category() == l * l


@pytest.mark.parametrize("l", [2, 3, 4])
def test_taft_dimension_matches_explicit_hopf_algebra(l):
    assert taft_projectives(l).fpdim == l * l


def test_fpdim_category_vec_and_fibonacci():
    assert catalog.build_vec().fpdim_category() == 1
    q = catalog.build_fibonacci().fpdim_category()
    assert minimal_polynomial(q) == sym_minpoly((5 + sympy.sqrt(5)) / 2)


# -- projective calculus -------------------------------------------------------------

def test_proj_tensor_unit_and_sweedler():
    sw = catalog.build_taft(2)
    assert tensorcat.proj_tensor(sw, 1, [1, 0]) == [0, 1]
    assert tensorcat.proj_tensor(sw, 0, [0, 1]) == [0, 1]
    mc = catalog.build_modular_cyclic(3, 1)
    assert tensorcat.proj_tensor(mc, 0, [1]) == [1]
    with pytest.raises(IndexOutOfRange):
        tensorcat.proj_tensor(sw, 5, [1, 0])


def test_proj_fusion_examples():
    fib = catalog.build_fibonacci()
    x = fib.ring.index("X")
    assert tensorcat.proj_fusion(fib, x, x) == list(fib.ring.N[x][x])
    assert tensorcat.proj_fusion(catalog.build_taft(2), 0, 0) == [1, 1]
    assert tensorcat.proj_fusion(catalog.build_taft(3), 0, 1) == [1, 1, 1]


def test_regular_object_examples():
    assert tensorcat.regular_object(catalog.build_vec()) == [1]
    assert tensorcat.regular_object(catalog.build_taft(4)) == [1] * 4
    fib = catalog.build_fibonacci()
    assert tensorcat.regular_object(fib) == list(fib.d)


# -- distinguished object ------------------------------------------------------------

def test_distinguished_semisimple_is_star():
    for name in ("vec", "fibonacci", "group:S3", "pointed:3"):
        cat = EXAMPLES[name]
        dist = tensorcat.distinguished(cat)
        assert dist.rho == cat.unit and dist.D == cat.ring.star


def test_distinguished_sweedler():
    dist = tensorcat.distinguished(catalog.build_taft(2))
    assert dist.rho == 1 and dist.D == (1, 0)
    assert not tensorcat.is_unimodular(catalog.build_taft(2))
    assert tensorcat.is_unimodular(catalog.build_modular_cyclic(5, 1))


def test_distinguished_sweedler_without_socle_is_ambiguous():
    sw = catalog.build_taft(2)
    bare = TensorCatData(sw.ring, sw.cartan, 0)
    with pytest.raises(Ambiguous) as exc:
        tensorcat.distinguished(bare)
    pairs = {(c.rho, c.D) for c in exc.value.candidates}
    assert pairs == {(0, (0, 1)), (1, (1, 0))}


@pytest.mark.parametrize("l", [2, 3, 4])
def test_taft_socle_matches_explicit_modules(l):
    oracle = taft_projectives(l)
    cat = catalog.build_taft(l)
    assert [list(r) for r in cat.cartan] == [list(r) for r in oracle.cartan]
    assert tuple(cat.socle) == tuple(oracle.socle)


def lemma_duali_holds(cat, dist) -> bool:
    s, rho = cat.ring, dist.rho
    e_rho = s.basis_vector(rho)
    for i in range(cat.rank):
        if tensorcat.proj_tensor(cat, s.star_inv(i), e_rho, "right") != s.basis_vector(dist.D[i]):
            return False
    return True


def double_dual_holds(cat, dist) -> bool:
    s, rho = cat.ring, dist.rho
    for i in range(cat.rank):
        inner = tensorcat.proj_tensor(cat, s.star_inv(s.star_inv(i)), s.basis_vector(rho), "right")
        k = inner.index(1)
        outer = tensorcat.proj_tensor(cat, k, s.basis_vector(s.star[rho]), "left")
        if outer != s.basis_vector(s.star[s.star[i]]):
            return False
    return True


SOCLED = sorted(n for n, c in EXAMPLES.items() if c.socle is not None)


@pytest.mark.parametrize("name", SOCLED)
def test_distinguished_identities(name):
    cat = EXAMPLES[name]
    dist = tensorcat.distinguished(cat)
    D, star = dist.D, cat.ring.star
    assert tuple(D[D[i]] for i in range(cat.rank)) == tuple(star[star[i]] for i in range(cat.rank))
    assert lemma_duali_holds(cat, dist)
    assert double_dual_holds(cat, dist)


# -- Cartan diagnostics --------------------------------------------------------------

def test_cartan_rank_examples():
    sw = tensorcat.cartan_rank(catalog.build_taft(2))
    assert (sw.rational, sw.degenerate) == (1, True)
    mc = tensorcat.cartan_rank(catalog.build_modular_cyclic(3, 1))
    assert (mc.rational, mc.modular) == (1, 0)
    fib = tensorcat.cartan_rank(catalog.build_fibonacci())
    assert fib.ground == 2 and not fib.degenerate and not fib.findings


def test_lorentz_violation_flagged():
    sw = catalog.build_taft(2)
    fake = TensorCatData(sw.ring, [[2, 1], [1, 2]], 0, None, True)
    assert [f.code for f in tensorcat.cartan_rank(fake).findings] == ["lorentz_violation"]


def test_integrality_flag():
    assert tensorcat.integrality_flag(catalog.build_taft(3))
    assert not tensorcat.integrality_flag(catalog.build_fibonacci())
    s3 = catalog.build_group_semisimple(GroupSpec(name="S3"))
    assert tensorcat.integrality_flag(s3)
    assert sorted(int(x.as_fraction()) for x in s3.d) == [1, 1, 2]


def test_dimension_inequality_examples():
    assert tensorcat.dimension_inequality(catalog.build_taft(4)).slack == 0
    assert tensorcat.dimension_inequality(catalog.build_vec()).slack == 0
    s3 = catalog.build_group_semisimple(GroupSpec(name="S3"))
    assert tensorcat.dimension_inequality(s3).slack == 3


def test_deligne_examples():
    vec, sw, fib = catalog.build_vec(), catalog.build_taft(2), catalog.build_fibonacci()
    vs = tensorcat.deligne_product(vec, sw)
    assert vs.rank == 2 and vs.fpdim_category() == 4
    ss = tensorcat.deligne_product(sw, sw)
    assert ss.rank == 4 and all(x == 1 for row in ss.cartan for x in row)
    assert ss.fpdim_category() == 16
    ff = tensorcat.deligne_product(fib, fib)
    d = (5 + sympy.sqrt(5)) / 2
    assert minimal_polynomial(ff.fpdim_category()) == sym_minpoly(sympy.expand(d * d))
    with pytest.raises(CharacteristicMismatch):
        tensorcat.deligne_product(sw, catalog.build_modular_cyclic(2, 1))


# -- invariants on every example -----------------------------------------------------

@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_category_valid_and_eigen(name):
    cat = EXAMPLES[name]
    assert tensorcat.validate_category(cat) == []
    d = cat.d
    for i in range(cat.rank):
        M = cat.fusion_matrix(i)
        assert [sum((d[k] * M[j][k] for k in range(cat.rank)), d[0] * 0) for j in range(cat.rank)] \
            == [d[i] * dj for dj in d]
    # float oracle for the Perron vector
    T = np.array(cat.ring.total_matrix(), dtype=float)
    w, V = np.linalg.eig(T)
    v = np.abs(V[:, np.argmax(w.real)].real)
    v = v / v[cat.unit]
    assert np.allclose(v, [as_float(x) for x in d])
    assert tensorcat.regular_eigen_findings(cat) == []
    assert tensorcat.dimension_inequality(cat).holds
    semisimple = cat.is_semisimple()
    assert semisimple == all(cat.cartan[i][j] == (i == j) for i in range(cat.rank)
                             for j in range(cat.rank))
    # the class of the regular object in Gr(C) equals sum d_i L_i exactly when semisimple
    reg = tensorcat.regular_object(cat)
    gr_class = [sum((reg[i] * cat.cartan[i][j] for i in range(cat.rank)), d[0] * 0)
                for j in range(cat.rank)]
    assert semisimple == (gr_class == list(d))


@pytest.mark.parametrize("name", sorted(EXAMPLES))
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_fp_multiplicative(name, data):
    cat = EXAMPLES[name]
    vec = st.lists(st.integers(0, 3), min_size=cat.rank, max_size=cat.rank)
    x, y = data.draw(vec), data.draw(vec)
    assert cat.fpdim_object(cat.ring.gr_mul(x, y)) == cat.fpdim_object(x) * cat.fpdim_object(y)


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_proj_fusion_sides_agree(name):
    cat = EXAMPLES[name]
    for i in range(cat.rank):
        for j in range(cat.rank):
            assert tensorcat.proj_fusion_right(cat, i, j) == tensorcat.proj_fusion_left(cat, i, j)


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_proj_tensor_preserves_fpdim(name):
    cat = EXAMPLES[name]
    rng = random.Random(name)
    for _ in range(20):
        i = rng.randrange(cat.rank)
        z = [rng.randrange(4) for _ in range(cat.rank)]
        for side in ("right", "left"):
            v = tensorcat.proj_tensor(cat, i, z, side)
            assert cat.fpdim_kvector(v) == cat.fpdim_projective(i) * cat.fpdim_object(z)


def test_deligne_multiplicative_on_examples():
    names = ["vec", "fibonacci", "taft:2", "taft:3", "group:S3", "pointed:2x2"]
    for a in names:
        for b in names:
            ca, cb = EXAMPLES[a], EXAMPLES[b]
            prod = tensorcat.deligne_product(ca, cb)
            lhs = prod.fpdim_category().to_real()
            rhs = ca.fpdim_category().to_real() * cb.fpdim_category().to_real()
            assert lhs == rhs, (a, b)


def test_json_round_trip():
    for cat in EXAMPLES.values():
        again = TensorCatData.from_json(cat.to_json())
        assert again.to_json() == cat.to_json()
        assert again.fpdim_category().to_real() == cat.fpdim_category().to_real()
