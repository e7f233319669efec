"""Exact real algebraic numbers and number-field arithmetic."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import (
    DivisionByZero,
    EigenspaceDimensionNotOne,
    InvalidInput,
    NegativeEntry,
    NonSquare,
    NotAnEigenvalue,
)
from .. import linalg
from . import poly
from .factor import MAX_FACTOR_DEGREE, charpoly, factor_through_root
from .field import NumberFieldElement, same_generator
from .real import EQUAL, GREATER, LESS, RealAlgebraic, cmp

__all__ = [
    "RealAlgebraic", "NumberFieldElement", "perron_root", "field_solve_eigvector",
    "nf_arith", "minimal_polynomial", "is_algebraic_integer", "cmp", "charpoly",
    "factor_through_root", "same_generator", "poly", "LESS", "EQUAL", "GREATER",
    "MAX_FACTOR_DEGREE",
]


def _check_square_nonneg(M: Sequence[Sequence[int]]) -> None:
    n = len(M)
    for i, row in enumerate(M):
        if len(row) != n:
            raise NonSquare(f"row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if x < 0:
                raise NegativeEntry(f"entry ({i}, {j}) = {x} is negative")


def perron_root(M: Sequence[Sequence[int]], irreducible: bool = True) -> RealAlgebraic:
    """Largest real eigenvalue of a nonnegative integer matrix.

    For a nonnegative matrix the spectral radius is itself an eigenvalue,
    so the largest real root of the characteristic polynomial is the
    Perron root whether or not ``irreducible`` holds; the flag only records
    the caller's guarantee of strict dominance.  The isolating interval
    is bisected from the Cauchy bound down to width at most 1/4.
    """
    _check_square_nonneg(M)
    if not M:
        raise NonSquare("empty matrix")
    return RealAlgebraic.largest_root(charpoly(M)).refine(Fraction(1, 2))


def field_solve_eigvector(M: Sequence[Sequence], eigval: NumberFieldElement,
                          normalize_index: int = 0) -> list[NumberFieldElement]:
    """Exact eigenvector of a rational matrix for an eigenvalue in Q(lambda),
    scaled so that coordinate ``normalize_index`` is 1."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise NonSquare("matrix is not square")
    if not 0 <= normalize_index < n:
        raise InvalidInput(f"normalize_index {normalize_index} out of range")
    one = eigval._like([1])
    zero = eigval._like([0])
    A = [[one * M[i][j] - (eigval if i == j else zero) for j in range(n)] for i in range(n)]
    basis = linalg.nullspace(A, n, one=one, zero=zero)
    if not basis:
        raise NotAnEigenvalue("value is not an eigenvalue of the matrix")
    if len(basis) > 1:
        raise EigenspaceDimensionNotOne(f"eigenspace has dimension {len(basis)}")
    v = basis[0]
    pivot = v[normalize_index]
    if not pivot:
        raise EigenspaceDimensionNotOne(
            f"eigenvector vanishes at normalize_index {normalize_index}")
    return [x / pivot for x in v]


def nf_arith(a: NumberFieldElement, b: NumberFieldElement, op: str) -> NumberFieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if isinstance(b, NumberFieldElement) and b.is_zero():
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def minimal_polynomial(a: NumberFieldElement | RealAlgebraic | int | Fraction) -> tuple[int, ...]:
    if isinstance(a, RealAlgebraic):
        return a.minpoly
    if isinstance(a, (int, Fraction)):
        return poly.primitive((-Fraction(a), 1))
    return a.minimal_polynomial()


def is_algebraic_integer(a: NumberFieldElement | RealAlgebraic | int | Fraction) -> bool:
    return minimal_polynomial(a)[-1] == 1
