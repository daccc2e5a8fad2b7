"""
The unit test module of exact integer linear algebra.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix

from toricbound.errors import ToricError, ValidationError
from toricbound.lattice import (IntMatrix, content, hermite_basis, inverse_unimodular,
                                is_primitive, kernel_basis, rational_rank, smith_normal_form,
                                solve_rational)
from toricbound.logger import get_default_logger

LOG = get_default_logger('UNIT-TEST', 'DEBUG')

small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda rows: st.integers(min_value=1, max_value=4).flatmap(lambda cols: st.lists(
        st.integers(min_value=-9, max_value=9), min_size=rows * cols, max_size=rows * cols).map(
            lambda entries: IntMatrix(rows, cols, tuple(entries)))))


def test_int_matrix():
    #pylint:disable=missing-docstring

    LOG.info('=== Testing IntMatrix start')

    mat = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert mat[1, 2] == 6
    assert mat.row(0) == (1, 2, 3)
    assert mat.col(1) == (2, 5)
    assert mat.transpose().to_rows() == [[1, 4], [2, 5], [3, 6]]
    assert mat.apply((1, 0, -1)) == (-2, -2)
    assert (mat @ IntMatrix.identity(3)) == mat
    assert IntMatrix.from_columns([(1, 4), (2, 5), (3, 6)], 2) == mat
    assert IntMatrix.from_rows([[2, 1], [1, 1]]).det() == 1
    assert mat.rank() == 2

    with pytest.raises(ValidationError) as err:
        IntMatrix(2, 2, (1, 2, 3))
    assert err.value.code == ToricError.Code.SHAPE_MISMATCH

    with pytest.raises(ValidationError):
        IntMatrix.from_rows([[1, 2], [3]])

    with pytest.raises(ValidationError):
        mat @ mat  # pylint: disable=pointless-statement

    # No overflow on big entries
    big = IntMatrix.from_rows([[10**30, 1], [1, 0]])
    assert big.det() == -1

    LOG.info('=== Testing IntMatrix end')


def test_smith_normal_form():
    #pylint:disable=missing-docstring

    LOG.info('=== Testing smith_normal_form start')

    snf = smith_normal_form(IntMatrix.identity(2))
    assert snf.U == IntMatrix.identity(2)
    assert snf.S == IntMatrix.identity(2)
    assert snf.V == IntMatrix.identity(2)

    snf = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    assert snf.diagonal == (1, 6)

    # The pairing matrix of P2, rays as rows
    snf = smith_normal_form(IntMatrix.from_rows([[1, 0], [0, 1], [-1, -1]]))
    assert snf.diagonal == (1, 1)
    assert snf.rank == 2

    snf = smith_normal_form(IntMatrix.from_rows([[0, 0, 0]]))
    assert snf.diagonal == (0, )
    assert snf.rank == 0

    with pytest.raises(ValidationError):
        smith_normal_form(IntMatrix(0, 3, ()))

    LOG.info('=== Testing smith_normal_form end')


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_smith_normal_form_invariants(mat):
    #pylint:disable=missing-docstring

    snf = smith_normal_form(mat)
    assert snf.U @ mat @ snf.V == snf.S
    assert abs(snf.U.det()) == 1 and abs(snf.V.det()) == 1

    diagonal = snf.diagonal
    for i in range(mat.rows):
        for j in range(mat.cols):
            if i != j:
                assert snf.S[i, j] == 0
    assert all(d >= 0 for d in diagonal)
    for first, second in zip(diagonal, diagonal[1:]):
        assert (second == 0) if first == 0 else second % first == 0

    # Recomposition through the unimodular inverses
    assert inverse_unimodular(snf.U) @ snf.S @ inverse_unimodular(snf.V) == mat

    # Deterministic
    assert smith_normal_form(mat) == snf

    # Rank agrees with sympy
    assert snf.rank == Matrix(mat.to_rows()).rank()


def test_kernel_basis():
    #pylint:disable=missing-docstring

    LOG.info('=== Testing kernel_basis start')

    # Rays of H2 as columns
    mat = IntMatrix.from_columns([(-1, 2), (0, 1), (1, 0), (0, -1)], 2)
    basis = kernel_basis(mat)
    assert len(basis) == 2
    assert basis == hermite_basis([(0, 1, 0, 1), (1, -2, 1, 0)], 4)
    assert basis == [(1, -2, 1, 0), (0, 1, 0, 1)]
    for vec in basis:
        assert mat.apply(vec) == (0, 0)

    assert kernel_basis(IntMatrix.from_rows([[0, 0, 0]])) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert kernel_basis(IntMatrix.from_rows([[2, 1], [1, 1]])) == []

    LOG.info('=== Testing kernel_basis end')


@settings(max_examples=60, deadline=None)
@given(small_matrices, st.lists(st.integers(min_value=-3, max_value=3), min_size=4, max_size=4))
def test_kernel_saturation(mat, coefs):
    #pylint:disable=missing-docstring

    basis = kernel_basis(mat)
    for vec in basis:
        assert not any(mat.apply(vec))
    assert len(basis) == mat.cols - mat.rank()

    # Any integer combination of the basis divided by its content is again in the lattice
    if not basis:
        return
    vec = [sum(c * b[i] for c, b in zip(coefs, basis)) for i in range(mat.cols)]
    if not any(vec):
        return
    scale = content(vec)
    reduced = [e // scale for e in vec]
    assert not any(mat.apply(reduced))
    assert hermite_basis(basis + [tuple(reduced)], mat.cols) == basis


def test_hermite_basis():
    #pylint:disable=missing-docstring

    LOG.info('=== Testing hermite_basis start')

    # Generators living in the leading coordinates only
    expected = [(1, 0, 0, 0), (0, 1, 0, 0)]
    assert hermite_basis([(1, 0, 0, 0), (0, 1, 0, 0)], 4) == expected
    assert hermite_basis([(1, 0, 0, 0), (1, 1, 0, 0), (3, 5, 0, 0)], 4) == expected
    assert hermite_basis([(0, 0, 0, 0), (0, 1, 0, 0), (-1, 0, 0, 0)], 4) == expected

    # Index-two sublattice keeps its index
    assert hermite_basis([(2, 0), (0, 1)], 2) == hermite_basis([(2, 1), (0, 1)], 2)
    assert hermite_basis([(2, 0), (0, 1)], 2) != hermite_basis([(1, 0), (0, 1)], 2)

    assert hermite_basis([], 3) == []
    assert hermite_basis([(0, 0, 0)], 3) == []

    LOG.info('=== Testing hermite_basis end')


def test_is_primitive():
    #pylint:disable=missing-docstring

    LOG.info('=== Testing is_primitive start')

    assert is_primitive((-1, 2))
    assert not is_primitive((2, 4))
    assert is_primitive((0, -1))
    with pytest.raises(ValidationError) as err:
        is_primitive((0, 0))
    assert err.value.code == ToricError.Code.ZERO_VECTOR
    assert content((6, -4, 0)) == 2
    assert content((0, 0)) == 0

    LOG.info('=== Testing is_primitive end')


def test_solve_rational():
    #pylint:disable=missing-docstring

    LOG.info('=== Testing solve_rational start')

    assert solve_rational([(1, 0), (0, 1)], (Fraction(2), Fraction(1))) == (2, 1)
    assert solve_rational([(2, 0)], (Fraction(1), Fraction(0))) == (Fraction(1, 2), )
    assert solve_rational([(1, 0)], (Fraction(0), Fraction(1))) is None
    assert solve_rational([], (Fraction(0), Fraction(0))) == ()
    assert solve_rational([], (Fraction(1), Fraction(0))) is None
    assert rational_rank([(1, 2), (2, 4)], 2) == 1
    assert rational_rank([], 2) == 0

    LOG.info('=== Testing solve_rational end')
