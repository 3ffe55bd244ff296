"""Exact linear algebra tests."""
import itertools
import random

from fractions import Fraction

import pytest

from frobcheck import DimensionLimitError, linalg, ShapeError
from frobcheck.linalg import RatMatrix
from frobcheck.tests import naive_kron, naive_matmul, naive_rank, random_matrix


A = RatMatrix.from_rows([[1, 1], [0, 1]])
B = RatMatrix.from_rows([[1, 0], [1, 1]])
C = RatMatrix.from_rows([['1/2', -3], [0, '7/3']])


def test_to_fraction():
    """Integers, Fractions and p/q strings should be converted to canonical Fractions."""
    assert linalg.to_fraction(3) == Fraction(3)
    assert linalg.to_fraction('-6/14') == Fraction(-3, 7)
    assert linalg.to_fraction(Fraction(2, 4)) == Fraction(1, 2)


@pytest.mark.parametrize('value', ('1/0', 'a', 1.5))
def test_to_fraction_invalid(value):
    """Anything else should raise ShapeError."""
    with pytest.raises(ShapeError, match='Invalid rational'):
        linalg.to_fraction(value)


def test_format_rational():
    """Rationals should be serialized as p or p/q."""
    assert linalg.format_rational(3) == '3'
    assert linalg.format_rational('-3/7') == '-3/7'
    assert linalg.format_rational('4/2') == '2'


@pytest.mark.parametrize('f, g, expected', (
    (linalg.identity(3), RatMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]]),
     RatMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])),
    (RatMatrix.from_rows([[2]]), RatMatrix.from_rows([['1/2']]), linalg.identity(1)),
    (A, B, RatMatrix.from_rows([[2, 1], [1, 1]])),
))
def test_mat_mul(f, g, expected):
    """The ordinary matrix product should give the expected result."""
    assert linalg.mat_mul(f, g) == expected
    assert f @ g == expected


def test_mat_mul_naive_oracle():
    """The product should match the schoolbook oracle."""
    assert (C @ A @ C).to_lists() == naive_matmul(naive_matmul(C.to_lists(), A.to_lists()), C.to_lists())


def test_mat_mul_shape_mismatch():
    """Multiplying matrices with mismatching shapes should raise ShapeError naming both shapes."""
    with pytest.raises(ShapeError, match='2x2 and 3x3'):
        linalg.mat_mul(A, linalg.identity(3))


def test_mat_mul_zero_sized():
    """Zero sized shapes should be first class."""
    assert linalg.mat_mul(linalg.zeros(2, 0), linalg.zeros(0, 3)) == linalg.zeros(2, 3)
    assert linalg.mat_mul(linalg.zeros(0, 2), A).shape == (0, 2)


def test_mat_mul_associative():
    """The product should be associative."""
    assert (A @ B) @ C == A @ (B @ C)
    assert linalg.compose(A, B, C) == A @ B @ C


@pytest.mark.parametrize('f, g, expected', (
    (linalg.identity(1), C, C),
    (RatMatrix.from_rows([[2]]), RatMatrix.from_rows([[3]]), RatMatrix.from_rows([[6]])),
    (linalg.identity(2), linalg.identity(3), linalg.identity(6)),
))
def test_kron(f, g, expected):
    """The Kronecker product should give the expected result."""
    assert linalg.kron(f, g) == expected


def test_kron_naive_oracle():
    """The first factor should index the outer blocks."""
    f = RatMatrix.from_rows([[1, 2, 0]])
    assert linalg.kron(f, C).to_lists() == naive_kron(f.to_lists(), C.to_lists())
    assert linalg.kron(C, f).to_lists() == naive_kron(C.to_lists(), f.to_lists())


def test_kron_interchange():
    """The Kronecker product should satisfy the interchange law."""
    assert linalg.kron(A, B) @ linalg.kron(C, A) == linalg.kron(A @ C, B @ A)


@pytest.mark.parametrize('seed', range(10))
def test_kron_interchange_random(seed):
    """The interchange law should hold exactly on random composable rational matrices."""
    rng = random.Random(seed)
    m, n, p, q, s, t = (rng.randint(1, 3) for _ in range(6))
    a, c = random_matrix(rng, m, n), random_matrix(rng, n, p)
    b, d = random_matrix(rng, q, s), random_matrix(rng, s, t)
    assert linalg.kron(a, b) @ linalg.kron(c, d) == linalg.kron(a @ c, b @ d)
    assert (linalg.kron(a, b) @ linalg.kron(c, d)).to_lists() == naive_matmul(
        naive_kron(a.to_lists(), b.to_lists()), naive_kron(c.to_lists(), d.to_lists()))


def test_kron_all():
    """The Kronecker product of no matrices should be [[1]], of many the left fold."""
    assert linalg.kron_all() == linalg.identity(1)
    assert linalg.kron_all(A, B, C) == linalg.kron(linalg.kron(A, B), C)


@pytest.mark.parametrize('m, n', itertools.product(range(1, 5), repeat=2))
def test_commutation_matrix(m, n):
    """The commutation matrix should swap the tensor factors and be inverted by the opposite one."""
    sigma = linalg.commutation_matrix(m, n)
    assert linalg.commutation_matrix(n, m) @ sigma == linalg.identity(m * n)
    f = RatMatrix({(i, j): i * m + j + 1 for i in range(m) for j in range(m)}, (m, m))
    g = RatMatrix({(i, j): i - j for i in range(n) for j in range(n)}, (n, n))
    assert sigma @ linalg.kron(f, g) == linalg.kron(g, f) @ sigma


def test_commutation_matrix_values():
    """The commutation matrix of 1 and n is the identity, the one of 2 and 2 the 4x4 swap."""
    assert linalg.commutation_matrix(1, 4) == linalg.identity(4)
    assert linalg.commutation_matrix(2, 2) == RatMatrix.from_rows(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


@pytest.mark.parametrize('f', (
    RatMatrix.from_rows([[1, 2], [2, 4], [0, 0]]),
    RatMatrix.from_rows([[1, -1, 0, 0], [0, 0, 1, -1], [-1, 1, 0, 0], [0, 0, -1, 1]]),
    linalg.identity(3),
    linalg.zeros(3, 2),
    linalg.zeros(2, 0),
))
def test_cokernel(f):
    """The cokernel projection should annihilate f, have full row rank and a section."""
    projection, section = linalg.cokernel(f)
    quotient = f.rows - naive_rank(f.to_lists())
    assert projection.shape == (quotient, f.rows)
    assert (projection @ f).is_zero()
    assert linalg.rank(projection) == quotient
    assert projection @ section == linalg.identity(quotient)


@pytest.mark.parametrize('seed', range(10))
def test_cokernel_random_rank_deficient(seed):
    """The cokernel postconditions should hold on random rank deficient matrices."""
    rng = random.Random(seed)
    rows, cols = rng.randint(2, 6), rng.randint(2, 6)
    f = random_matrix(rng, rows, cols, rank=rng.randint(1, min(rows, cols) - 1))
    projection, section = linalg.cokernel(f)
    quotient = rows - naive_rank(f.to_lists())
    assert quotient > 0
    assert projection.shape == (quotient, rows)
    assert (projection @ f).is_zero()
    assert projection @ section == linalg.identity(quotient)


def test_cokernel_deterministic():
    """Relation matrices with the same column space should give the same projection."""
    f = RatMatrix.from_rows([[1, 0], [-1, 0], [0, 1], [0, -1]])
    g = RatMatrix.from_rows([[2, 1, 1], [-2, -1, -1], [0, 1, -1], [0, -1, 1]])
    assert linalg.cokernel(f) == linalg.cokernel(g)


def test_rank_and_is_iso():
    """Rank should match the naive oracle and is_iso require a square full rank matrix."""
    singular = RatMatrix.from_rows([[1, 2], [2, 4]])
    assert linalg.rank(singular) == naive_rank(singular.to_lists()) == 1
    assert not linalg.is_iso(singular)
    assert not linalg.is_iso(linalg.zeros(2, 3))
    assert linalg.is_iso(C)
    assert linalg.is_iso(linalg.identity(0))


def test_inverse():
    """The inverse should be two-sided, a singular matrix should raise ShapeError."""
    assert linalg.inverse(C) @ C == linalg.identity(2)
    assert C @ linalg.inverse(C) == linalg.identity(2)
    with pytest.raises(ShapeError, match='not invertible'):
        linalg.inverse(RatMatrix.from_rows([[1, 2], [2, 4]]))


def test_stack():
    """Matrices should be stacked side by side and one on top of the other."""
    assert linalg.hstack(A, B) == RatMatrix.from_rows([[1, 1, 1, 0], [0, 1, 1, 1]])
    assert linalg.vstack(A, B) == RatMatrix.from_rows([[1, 1], [0, 1], [1, 0], [1, 1]])
    with pytest.raises(ShapeError, match='Unable to hstack'):
        linalg.hstack(A, linalg.identity(3))


def test_first_difference():
    """The first differing entry should be found in row-major order."""
    assert A.first_difference(A) is None
    assert A.first_difference(B) == (0, 1)
    with pytest.raises(ShapeError, match='Unable to compare'):
        A.first_difference(linalg.identity(3))


def test_matrix_equality_and_hash():
    """Equality should be exact and consistent with hashing."""
    half = RatMatrix.from_rows([['1/2', '2/4']])
    assert half == RatMatrix.from_rows([[Fraction(1, 2), Fraction(1, 2)]])
    assert hash(half) == hash(RatMatrix.from_rows([[Fraction(1, 2), Fraction(1, 2)]]))
    assert linalg.zeros(0, 2) != linalg.zeros(2, 0)
    assert A != 'A'


def test_matrix_arithmetic():
    """Sum, difference, negation, scaling and transposition should be exact."""
    assert A + B == RatMatrix.from_rows([[2, 1], [1, 2]])
    assert (A - A).is_zero()
    assert -A == A.scale(-1)
    assert C.scale('2/3').entry(1, 1) == Fraction(14, 9)
    assert C.transpose().entry(0, 1) == Fraction(0)
    assert C.transpose().entry(1, 0) == Fraction(-3)
    assert repr(C) == "RatMatrix([['1/2', '-3'], ['0', '7/3']])"


@pytest.mark.parametrize('entries, shape, message', (
    ({}, (-1, 2), 'Invalid negative shape'),
    ({(2, 0): 1}, (2, 2), 'out of bounds'),
))
def test_matrix_invalid(entries, shape, message):
    """Invalid shapes and entries should raise ShapeError."""
    with pytest.raises(ShapeError, match=message):
        RatMatrix(entries, shape)


def test_from_rows_ragged():
    """Rows of different lengths should raise ShapeError."""
    with pytest.raises(ShapeError, match='Row 2 has 1 entries, expected 2'):
        RatMatrix.from_rows([[1, 2], [3]])


def test_dimension_cap():
    """Matrices above the cap should be refused inside the context manager only."""
    with linalg.dimension_cap(4):
        assert linalg.identity(4).shape == (4, 4)
        with pytest.raises(DimensionLimitError, match='Refusing to materialize a 2x5 matrix, the dimension cap is 4'):
            linalg.zeros(2, 5)
        with pytest.raises(DimensionLimitError):
            linalg.kron(linalg.identity(2), linalg.identity(3))

    assert linalg.identity(8).shape == (8, 8)
