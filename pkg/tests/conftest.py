import numpy as np
import pytest
import sympy

from ftcat import catalog
from ftcat.catalog import GroupSpec

X = sympy.Symbol("x")


def sym_minpoly(expr):
    """Primitive integer coefficients (low degree first) of the minimal polynomial."""
    p = sympy.Poly(sympy.minimal_polynomial(expr, X), X)
    coeffs = [int(c) for c in reversed(p.all_coeffs())]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(coeffs)


def example_categories():
    """Every bundled category, keyed by a readable name."""
    cats = {name: catalog.build_named(name) for name in catalog.EXAMPLE_NAMES}
    cats["modular-cyclic:5^1"] = catalog.build_modular_cyclic(5, 1)
    cats["group:2x2"] = catalog.build_group_semisimple(GroupSpec.abelian(2, 2))
    return cats


EXAMPLES = example_categories()


def oracle_valid(labels, unit, N, star) -> bool:
    """Direct numpy check of the based-ring axioms."""
    N = np.array(N)
    n = len(labels)
    eye = np.eye(n, dtype=int)
    if (N < 0).any():
        return False
    if not (N[unit] == eye).all() or not (N[:, unit, :] == eye).all():
        return False
    lhs = np.einsum("ijm,mkl->ijkl", N, N)
    rhs = np.einsum("jkm,iml->ijkl", N, N)
    if not (lhs == rhs).all():
        return False
    s = np.array(star)
    if s[unit] != unit:
        return False
    if not (N == N[np.ix_(s, s, s)].transpose(1, 0, 2)).all():
        return False
    return all(N[i, s[i], unit] >= 1 for i in range(n))


@pytest.fixture(params=sorted(EXAMPLES))
def example(request):
    return request.param, EXAMPLES[request.param]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
