import cmath
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ftcat import catalog
from ftcat.errors import (AsymmetricForm, BadDivisor, CharacteristicTooSmall, CharacteristicTwo,
                          CocycleInvalid, DimensionOverflow, InconsistentRelations, InvalidInput,
                          NotASubgroup)
from ftcat.simplecheck import (ExactField, algebra_from_json, build_clifford_smash,
                               build_from_presentation, build_group_quotient, build_taft_A,
                               change_basis, check_invariants, clifford_one, compute_filtration,
                               exterior_one, fingerprint, group_algebra_z2, is_simple_from_right,
                               klein_pauli, lambda_invariant, semisimplicity_test,
                               supergroup_internal_hom, taft_hopf_algebra, taft_projectives,
                               trivial_action_square, verify_q_derivative)
from ftcat.simplecheck.fields import Cyc


# -- independent closure oracle ------------------------------------------------------

def to_complex(x):
    if isinstance(x, Cyc):
        z = cmath.exp(2j * cmath.pi / x.l)
        return sum(complex(c) * z ** k for k, c in enumerate(x.c))
    return complex(Fraction(x))


def numeric(M):
    return np.array([[to_complex(x) for x in row] for row in M])


def oracle_closure_dim(alg):
    """Dimension of the unital matrix algebra generated by the operator set,
    by floating-point spanning over C."""
    n = alg.dim
    gens = [numeric(M) for M in alg.operators()]
    basis = []

    def rank_with(mats):
        return np.linalg.matrix_rank(np.array([m.ravel() for m in mats]), tol=1e-8)

    frontier = [np.eye(n, dtype=complex)]
    while frontier:
        new = []
        for W in frontier:
            if basis and rank_with(basis + [W]) == len(basis):
                continue
            basis.append(W)
            new.extend(W @ g for g in gens)
        frontier = new
    return len(basis)


# -- the built algebras ----------------------------------------------------------------

def built_algebras():
    psi, rho = klein_pauli()
    out = {
        "z2": group_algebra_z2(),
        "exterior": exterior_one(),
        "exterior_plain": exterior_one(with_structure=False),
        "clifford": clifford_one(1),
        "swap": build_group_quotient("Z2"),
        "trivial_square": trivial_action_square(),
        "s3_mod_z3": build_group_quotient("S3", {"generators": [(1, 2, 0)]}),
        "klein_pauli": build_group_quotient("2x2", "G", psi, rho),
        "smash_b1": build_clifford_smash("Z2", 1, [[1]]),
        "smash_b0": build_clifford_smash("Z2", 1, [[0]]),
        "smash_y0": build_clifford_smash("Z2", 0, []),
        "super_b1": supergroup_internal_hom("Z2", "G", 1, [[1]]),
        "super_b0": supergroup_internal_hom("Z2", "G", 1, [[0]]),
        "super_y0": supergroup_internal_hom("Z2", "G", 0, []),
        # u outside H: u swaps the two cosets of Ind_H^{H^}, which is then not purely even
        "super_induced_y0": supergroup_internal_hom("2x2", {"generators": [(0, 1)]}, 0, [],
                                                    u=(1, 0)),
        "super_induced_b1": supergroup_internal_hom("2x2", {"generators": [(0, 1)]}, 1, [[1]],
                                                    u=(1, 0), w_dim=2),
        "taft_hopf_3": taft_hopf_algebra(3),
    }
    for l, d in [(2, 1), (2, 2), (3, 1), (3, 3), (4, 2), (4, 4)]:
        out[f"taft_A_{l}_{d}"] = build_taft_A(l, d, 1)
    out["taft_A_2_1_lam0"] = build_taft_A(2, 1, 0)
    return out


ALGEBRAS = built_algebras()


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_invariants_hold(name):
    assert check_invariants(ALGEBRAS[name]) == []


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_closure_matches_oracle(name):
    alg = ALGEBRAS[name]
    res = is_simple_from_right(alg)
    expected = oracle_closure_dim(alg)
    assert res.closure_dim == expected
    assert res.simple == (expected == alg.dim ** 2)


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_filtration_properties(name):
    alg = ALGEBRAS[name]
    filt = compute_filtration(alg)
    assert filt.findings == []
    assert filt.dims == sorted(filt.dims) and filt.dims[-1] == alg.dim


# -- presentations -----------------------------------------------------------------

def test_presentation_examples():
    assert group_algebra_z2().dim == 2
    assert exterior_one(with_structure=False).dim == 2
    cl = clifford_one(1)
    assert cl.dim == 2 and semisimplicity_test(cl)


def test_presentation_errors():
    with pytest.raises(InconsistentRelations):
        build_from_presentation(["e"], [("e", {}), ("e e", {"1": 1})])
    with pytest.raises(DimensionOverflow):
        build_from_presentation(["x", "y"], [("y x", {"x y": 1})], dimension_bound=8)


# -- group quotients -----------------------------------------------------------------

def test_group_quotient_examples():
    swap = ALGEBRAS["swap"]
    assert swap.dim == 2 and fingerprint(swap) == (2, 2, 2)
    s3 = ALGEBRAS["s3_mod_z3"]
    assert s3.dim == 2 and is_simple_from_right(s3).simple
    kp = ALGEBRAS["klein_pauli"]
    # End(V) for the 2-dimensional projective representation: M_2(k)
    assert fingerprint(kp) == (4, 1, 4)


def test_group_quotient_errors():
    with pytest.raises(NotASubgroup):
        build_group_quotient("Z4", [(0,), (1,)])
    psi, rho = klein_pauli()
    bad = dict(psi)
    key = next(k for k, v in psi.items() if v == -1)
    bad[key] = Fraction(1)
    with pytest.raises(CocycleInvalid):
        build_group_quotient("2x2", "G", bad, rho)
    with pytest.raises(DimensionOverflow):
        build_group_quotient("Z4", dim_cap=2)


# -- Clifford smash products and internal Hom algebras ----------------------------------

def test_clifford_smash_examples():
    b1, b0, y0 = ALGEBRAS["smash_b1"], ALGEBRAS["smash_b0"], ALGEBRAS["smash_y0"]
    assert (b1.dim, b0.dim, y0.dim) == (4, 4, 2)
    assert semisimplicity_test(b1) and not semisimplicity_test(b0)
    assert fingerprint(y0) == fingerprint(group_algebra_z2())


def test_clifford_smash_errors():
    with pytest.raises(AsymmetricForm):
        build_clifford_smash("Z2", 2, [[0, 1], [0, 0]])
    with pytest.raises(CharacteristicTwo):
        build_clifford_smash("Z2", 1, [[1]], field=ExactField.prime(2))
    with pytest.raises(CharacteristicTwo):
        supergroup_internal_hom("Z2", "G", 1, [[1]], field=ExactField.prime(2))


def test_internal_hom_examples():
    b1, b0, y0 = ALGEBRAS["super_b1"], ALGEBRAS["super_b0"], ALGEBRAS["super_y0"]
    # Cl((W/Ker B)^*, B^*) has dimension 2^(dim W - dim Ker B): the radical of
    # the pulled-back form on W^* is (W/Y)^*
    assert (b1.dim, b0.dim, y0.dim) == (2, 1, 2)
    assert semisimplicity_test(b1)
    assert not semisimplicity_test(y0)
    assert all(is_simple_from_right(a).simple for a in (b1, b0, y0))


def test_internal_hom_induced_from_h():
    y0, b1 = ALGEBRAS["super_induced_y0"], ALGEBRAS["super_induced_b1"]
    # [H^ : H] = 2 copies of k, times Cl of dimension 2 and 4
    assert (y0.dim, b1.dim) == (4, 8)
    assert check_invariants(y0) == [] and check_invariants(b1) == []


def test_internal_hom_dimension_cap():
    with pytest.raises(DimensionOverflow):
        supergroup_internal_hom("Z2", "G", 0, [], w_dim=3, dim_cap=4)


@pytest.mark.parametrize("sign", [1, -1])
def test_internal_hom_with_character(sign):
    a = supergroup_internal_hom("Z2", "G", 1, [[1]], V={(0,): [[1]], (1,): [[sign]]})
    assert a.dim == 2 and is_simple_from_right(a).simple


# -- simplicity ------------------------------------------------------------------------

def test_simplicity_examples():
    assert is_simple_from_right(ALGEBRAS["swap"]).closure_dim == 4
    res = is_simple_from_right(ALGEBRAS["trivial_square"])
    assert not res.simple and res.witness is not None and len(res.witness) == 1
    assert is_simple_from_right(ALGEBRAS["exterior"]).simple
    # without parity and derivation the exterior algebra has the ideal (y)
    assert not is_simple_from_right(ALGEBRAS["exterior_plain"]).simple


def test_witness_is_invariant_right_ideal():
    alg = ALGEBRAS["trivial_square"]
    res = is_simple_from_right(alg)
    span = np.array([[float(x) for x in w] for w in res.witness])
    ops = [np.array([[float(x) for x in row] for row in M]) for M in alg.operators()]
    for v in span:
        for M in ops:
            w = M @ v
            assert np.linalg.matrix_rank(np.vstack([span, w])) == len(span)


def random_invertible(rng, n):
    """Product of a random permutation and unit triangular matrices."""
    perm = list(range(n))
    rng.shuffle(perm)
    L = [[Fraction(rng.randint(-2, 2)) if i > j else Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    U = [[Fraction(rng.randint(-2, 2)) if i < j else Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    LU = [[sum(L[i][k] * U[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [LU[perm[i]] for i in range(n)]


SMALL = ["swap", "trivial_square", "exterior", "exterior_plain", "klein_pauli", "smash_b1",
         "smash_b0", "taft_A_2_1", "taft_A_3_3", "super_y0"]


@settings(max_examples=30, deadline=None)
@given(name=st.sampled_from(SMALL), seed=st.integers(0, 10 ** 6))
def test_simplicity_invariant_under_base_change(name, seed):
    alg = ALGEBRAS[name]
    field = alg.field
    P = [[field(x) for x in row] for row in random_invertible(random.Random(seed), alg.dim)]
    other = change_basis(alg, P)
    assert check_invariants(other) == []
    a, b = is_simple_from_right(alg), is_simple_from_right(other)
    assert (a.simple, a.closure_dim) == (b.simple, b.closure_dim)
    assert compute_filtration(other).dims == compute_filtration(alg).dims
    assert fingerprint(other) == fingerprint(alg)


def test_change_basis_rejects_singular():
    alg = ALGEBRAS["swap"]
    with pytest.raises(InvalidInput):
        change_basis(alg, [[1, 1], [1, 1]])


# -- Taft algebras A(d, lambda) ----------------------------------------------------------

def test_taft_A_examples():
    a22 = ALGEBRAS["taft_A_2_2"]
    assert a22.dim == 2
    y = a22.basis_vec(a22.names.index("y"))
    assert a22.mul(y, y) == a22.unit
    a21 = ALGEBRAS["taft_A_2_1"]
    assert a21.dim == 4
    # y interchanges the two idempotents of k[Z/2]
    e0 = a21.basis_vec(a21.names.index("e0"))
    y = a21.basis_vec(a21.names.index("y"))
    e1 = [u - v for u, v in zip(a21.unit, e0)]
    assert a21.mul(y, e0) == a21.mul(e1, y)
    with pytest.raises(BadDivisor):
        build_taft_A(4, 3)


@pytest.mark.parametrize("l,d", [(l, d) for l in (2, 3, 4) for d in range(1, l + 1) if l % d == 0])
def test_taft_A_dimension_and_simplicity(l, d):
    alg = build_taft_A(l, d, 1)
    assert alg.dim == l * (l // d) == alg.meta["expected_dim"]
    assert is_simple_from_right(alg).simple
    assert semisimplicity_test(alg)


@pytest.mark.parametrize("l,d", [(2, 1), (2, 2), (3, 3)])
def test_taft_A_lambda_zero(l, d):
    alg = build_taft_A(l, d, 0)
    assert alg.dim == l * (l // d)
    assert check_invariants(alg) == []
    assert not semisimplicity_test(alg)
    assert compute_filtration(alg).findings == []


@pytest.mark.parametrize("l,d", [(2, 1), (3, 1), (3, 3)])
def test_lambda_separates_algebras(l, d):
    lams = [1, 2, 3]
    algs = [build_taft_A(l, d, lam) for lam in lams]
    # the plain fingerprints cannot see lambda
    assert len({fingerprint(a) for a in algs}) == 1
    vals = [lambda_invariant(a, l) for a in algs]
    assert vals == [a.field(lam) for a, lam in zip(algs, lams)]
    assert len(set(map(str, vals))) == 3


def test_lambda_invariant_survives_base_change():
    alg = build_taft_A(2, 1, 3)
    P = [[alg.field(x) for x in row] for row in random_invertible(random.Random(7), alg.dim)]
    assert lambda_invariant(change_basis(alg, P), 2) == 3


@pytest.mark.parametrize("l", [2, 3, 4])
@pytest.mark.parametrize("lam", [0, 1])
def test_q_derivative(l, lam):
    alg = build_taft_A(l, 1, lam)
    y = alg.basis_vec(alg.names.index("y"))
    assert verify_q_derivative(alg, y, l) == []


def test_q_derivative_detects_wrong_element():
    alg = build_taft_A(3, 1, 1)
    e0 = alg.basis_vec(alg.names.index("e0"))
    assert verify_q_derivative(alg, e0, 3) != []


# -- filtrations ---------------------------------------------------------------------

def test_filtration_examples():
    ext = compute_filtration(ALGEBRAS["exterior"])
    assert ext.dims == [1, 2] and ext.a0_simple.simple
    # A_0 = k[G/H] with |H| = d = 1, so A_0 = k^2 and A_1 = A
    t = compute_filtration(ALGEBRAS["taft_A_2_1"])
    assert t.dims == [2, 4] and t.a0_simple.simple
    flat = compute_filtration(ALGEBRAS["z2"])
    assert flat.dims == [2] and flat.a0_simple is None


@pytest.mark.parametrize("l,d", [(3, 1), (4, 2)])
def test_taft_filtration_steps(l, d):
    # each level adds one more power of y over A_0 = k[G/H]
    n = l // d
    assert compute_filtration(build_taft_A(l, d, 1)).dims == [n * (i + 1) for i in range(l)]


# -- semisimplicity --------------------------------------------------------------------

def test_semisimplicity_examples():
    assert semisimplicity_test(group_algebra_z2())
    assert not semisimplicity_test(exterior_one())
    assert semisimplicity_test(clifford_one(1))
    with pytest.raises(CharacteristicTooSmall):
        semisimplicity_test(group_algebra_z2(ExactField.prime(2)))
    assert semisimplicity_test(group_algebra_z2(ExactField.prime(5)))


# -- the Taft Hopf algebra as an oracle for the catalog ------------------------------------

@pytest.mark.parametrize("l", [2, 3])
def test_taft_hopf_dimension(l):
    assert taft_hopf_algebra(l).dim == l * l
    proj = taft_projectives(l)
    assert proj.fpdim == l * l
    cat = catalog.build_taft(l)
    assert [list(r) for r in proj.cartan] == [list(r) for r in cat.cartan]
    assert list(proj.socle) == list(cat.socle)


# -- JSON specs ------------------------------------------------------------------------

def test_json_presentation():
    alg = algebra_from_json({"generators": ["y"], "relations": [["y y", {"1": 1}]]})
    assert fingerprint(alg) == fingerprint(clifford_one(1))
    alg = algebra_from_json({"generators": ["y"], "relations": [{"lhs": "y y", "rhs": {}}],
                             "actions": {"u": {"order": 2, "images": {"y": {"y": -1}}}},
                             "derivations": {"d": {"twist": "u", "images": {"y": {"1": 1}},
                                                   "nilpotency": 2, "odd": True}},
                             "parity": "u", "nilpotence_degree": 1})
    assert is_simple_from_right(alg).simple


@pytest.mark.parametrize("obj,dim", [
    ({"builder": "taft_A", "l": 3, "d": 1, "lambda": 2}, 9),
    ({"builder": "taft_hopf", "l": 2}, 4),
    ({"builder": "group_quotient", "G": "2x2", "H": "G", "psi": "klein", "V": "klein"}, 4),
    ({"builder": "group_quotient", "G": "Z3"}, 3),
    ({"builder": "clifford_smash", "H": "Z2", "y_dim": 1, "B": [[1]]}, 4),
    ({"builder": "supergroup", "G": "Z2", "H": "G", "Y": 1, "B": [[1]]}, 2),
    ({"builder": "exterior"}, 2),
    ({"builder": "clifford", "b": 2}, 2),
    ({"builder": "group_algebra_z2"}, 2),
    ({"builder": "trivial_action_square"}, 2),
])
def test_json_builders(obj, dim):
    assert algebra_from_json(obj).dim == dim


def test_json_errors():
    with pytest.raises(InvalidInput):
        algebra_from_json([])
    with pytest.raises(InvalidInput):
        algebra_from_json({"generators": ["y"]})
    with pytest.raises(InvalidInput):
        algebra_from_json({"builder": "nope"})
    with pytest.raises(InvalidInput):
        algebra_from_json({"builder": "taft_A"})
    with pytest.raises(BadDivisor):
        algebra_from_json({"builder": "taft_A", "l": 4, "d": 3})
