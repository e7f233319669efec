"""Equivariant algebras, their filtrations, and the test for having no
nontrivial invariant right ideals."""

from .algebra import Derivation, EquivariantAlgebra, GroupAction, Subspace, change_basis, check_invariants, subalgebra
from .builders import (TaftProjectives, build_clifford_smash, build_group_quotient, build_taft_A,
                       clifford_one, exterior_one, group_algebra_z2, klein_pauli, supergroup_internal_hom,
                       taft_hopf_algebra, taft_projectives, trivial_action_square)
from .closure import SimplicityResult, is_simple_from_right
from .fields import ExactField
from .filtration import (Filtration, compute_filtration, fingerprint, lambda_invariant,
                         semisimplicity_test, verify_q_derivative)
from .groups import FiniteGroup
from .presentation import build_from_presentation
from .spec import algebra_from_json
