from fractions import Fraction

import pytest
import sympy
from sympy.matrices.normalforms import invariant_factors
from hypothesis import given, settings
from hypothesis import strategies as st

from lapsimplex.errors import SingularMatrixError
from lapsimplex.exact_linalg import (
    determinant,
    identity,
    matmul,
    minor_determinant,
    rank,
    scaled_inverse,
    smith_normal_form,
    solve_rational,
)


def square(max_n=5, lo=-6, hi=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


def rect(max_m=4, max_n=4, lo=-9, hi=9):
    return st.tuples(st.integers(1, max_m), st.integers(1, max_n)).flatmap(
        lambda mn: st.lists(
            st.lists(st.integers(lo, hi), min_size=mn[1], max_size=mn[1]),
            min_size=mn[0],
            max_size=mn[0],
        )
    )


def laplace(A):
    if len(A) == 1:
        return A[0][0]
    return sum(
        (-1) ** j * A[0][j] * laplace([row[:j] + row[j + 1:] for row in A[1:]])
        for j in range(len(A))
    )


def test_determinant_examples():
    assert determinant([[2, 1], [1, 2]]) == 3
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([]) == 1
    assert determinant([[1, -1, 0], [0, 1, -1], [-1, -1, 2]]) == 0


def test_minor_of_example_laplacian():
    L = [[1, -1, 0], [0, 1, -1], [-1, -1, 2]]
    assert [minor_determinant(L, i, i) for i in range(3)] == [1, 2, 1]
    with pytest.raises(IndexError):
        minor_determinant(L, 3, 0)


@given(square())
def test_determinant_matches_laplace_expansion(A):
    assert determinant(A) == laplace(A)


@given(square(max_n=4))
def test_row_swap_flips_sign(A):
    if len(A) < 2:
        return
    B = [A[1], A[0]] + A[2:]
    assert determinant(B) == -determinant(A)


@given(square(max_n=4))
def test_rank_matches_sympy(A):
    assert rank(A) == sympy.Matrix(A).rank()


@given(square(max_n=4), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solve_multiplies_back(A, b):
    b = b[: len(A)]
    if determinant(A) == 0:
        with pytest.raises(SingularMatrixError):
            solve_rational(A, b)
        return
    x = solve_rational(A, b)
    assert all(isinstance(v, Fraction) for v in x)
    assert [sum(a * v for a, v in zip(row, x)) for row in A] == b


def test_solve_shape_mismatch():
    with pytest.raises(ValueError):
        solve_rational([[1, 0], [0, 1]], [1])


@given(square(max_n=4))
def test_scaled_inverse(A):
    d = determinant(A)
    if d == 0:
        with pytest.raises(SingularMatrixError):
            scaled_inverse(A)
        return
    N, s = scaled_inverse(A)
    assert s == abs(d)
    assert matmul(A, N) == [[s * x for x in row] for row in identity(len(A))]


@settings(max_examples=200)
@given(rect())
def test_smith_recomposes_and_matches_sympy(A):
    snf = smith_normal_form(A)
    m, n = len(A), len(A[0])
    assert matmul(matmul(snf.U, A), snf.V) == snf.diagonal_matrix(m, n)
    assert matmul(snf.U, snf.U_inv) == identity(m)
    assert matmul(snf.V, snf.V_inv) == identity(n)
    assert all(d > 0 for d in snf.diag)
    assert all(b % a == 0 for a, b in zip(snf.diag, snf.diag[1:]))
    expected = [
        abs(int(x))
        for x in invariant_factors(sympy.Matrix(A), domain=sympy.ZZ)
        if x != 0
    ]
    assert list(snf.diag) == expected


def test_smith_example():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).diag == (2, 6, 12)
