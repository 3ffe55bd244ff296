"""Tests utils."""

import logging
import os

from fractions import Fraction

from frobcheck.linalg import RatMatrix

logging.basicConfig(level=logging.DEBUG)
_TESTS_BASE_PATH = os.path.realpath(os.path.dirname(__file__))


def get_fixture(path, as_string=False):
    """Return the content of a fixture file.

    Arguments:
        path: the relative path to the test's fixture directory to be opened.
        as_string: return the content as a multiline string instead of a list of lines [optional, default: False]

    """
    with open(get_fixture_path(path), encoding='utf8') as f:
        if as_string:
            content = f.read()
        else:
            content = f.readlines()

    return content


def get_fixture_path(path):
    """Return the absolute path of the given fixture.

    Arguments:
        path: the relative path to the test's fixture directory.

    """
    return os.path.join(_TESTS_BASE_PATH, 'fixtures', path)


def naive_matmul(first, second):
    """Schoolbook product of two lists of lists of Fractions, independent from the sympy backed implementation."""
    inner = len(second)
    cols = len(second[0]) if second else 0
    return [[sum((row[k] * second[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)] for row in first]


def naive_kron(first, second):
    """Kronecker product of two lists of lists of Fractions."""
    rows, cols = len(second), len(second[0]) if second else 0
    return [[first[i // rows][j // cols] * second[i % rows][j % cols]
             for j in range(len(first[0]) * cols if first else 0)] for i in range(len(first) * rows)]


def naive_rank(matrix):
    """Rank of a list of lists of Fractions by Gaussian elimination."""
    rows = [list(row) for row in matrix]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col] / rows[rank][col]
                rows[i] = [value - factor * pivot_value for value, pivot_value in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def first_failure(report):
    """Return the first entry of a report that did not pass, None if all passed."""
    return next((entry for entry in report.entries if entry.status != 'pass'), None)


def assert_witness(entry):
    """Assert that the witness of a failed entry differs at the reported position according to the naive oracle."""
    assert entry.status == 'fail'
    witness = entry.witness
    lhs, rhs = witness.lhs.to_lists(), witness.rhs.to_lists()
    assert lhs[witness.row][witness.col] != rhs[witness.row][witness.col]
    for i, (lhs_row, rhs_row) in enumerate(zip(lhs, rhs)):
        for j, (lhs_value, rhs_value) in enumerate(zip(lhs_row, rhs_row)):
            if (i, j) < (witness.row, witness.col):
                assert lhs_value == rhs_value


def random_matrix(rng, rows, cols, rank=None):
    """Return a random rational matrix drawn from a seeded random.Random instance.

    Arguments:
        rng: the random.Random instance.
        rows: the number of rows.
        cols: the number of columns.
        rank: if given, the matrix is the product of two random factors through this dimension [optional]

    """
    if rank is not None:
        return random_matrix(rng, rows, rank) @ random_matrix(rng, rank, cols)
    return RatMatrix({(i, j): Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for i in range(rows)
                      for j in range(cols)}, (rows, cols))
