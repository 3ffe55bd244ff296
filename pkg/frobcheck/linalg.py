"""Exact rational linear algebra.

Every categorical equation checked by frobcheck is decided here, with exact arithmetic and zero tolerance. Matrices are
immutable and backed by a sparse :py:class:`sympy.polys.matrices.DomainMatrix` over the rationals: the matrices that
show up in monoidal structure maps (Kronecker products of permutations, elementary matrices, group algebra tables) are
overwhelmingly sparse.
"""
import contextlib
import logging

from contextvars import ContextVar
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from frobcheck import DimensionLimitError, ShapeError


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""
_max_dim: ContextVar[Optional[int]] = ContextVar('max_dim', default=None)


def to_fraction(value) -> Fraction:
    """Convert an integer, a :py:class:`fractions.Fraction`, a ``p/q`` string or a ``QQ`` element to a Fraction.

    Arguments:
        value (mixed): the value to convert.

    Returns:
        fractions.Fraction: the value in canonical form.

    Raises:
        frobcheck.ShapeError: if the value is not a rational number.

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ShapeError("Invalid rational '{value}': {e}".format(value=value, e=e)) from e
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return Fraction(int(value.numerator), int(value.denominator))

    raise ShapeError("Invalid rational '{value}' of type {type}".format(value=value, type=type(value).__name__))


def _to_qq(value):
    """Convert a rational value to an element of the sympy QQ domain."""
    if QQ.of_type(value):
        return value
    fraction = to_fraction(value)
    return QQ(fraction.numerator, fraction.denominator)


@contextlib.contextmanager
def dimension_cap(max_dim: Optional[int]) -> Iterator[None]:
    """Context manager that caps the number of rows and columns of every matrix built inside it.

    Arguments:
        max_dim (int, optional): the cap, :py:data:`None` for unlimited.

    Examples:
        >>> with dimension_cap(16):
        ...     identity(32)
        Traceback (most recent call last):
        ...
        frobcheck.DimensionLimitError: Refusing to materialize a 32x32 matrix, the dimension cap is 16

    """
    token = _max_dim.set(max_dim)
    try:
        yield
    finally:
        _max_dim.reset(token)


def _enforce_dimension_cap(rows: int, cols: int) -> None:
    """Raise DimensionLimitError if the shape exceeds the active dimension cap."""
    max_dim = _max_dim.get()
    if max_dim is not None and max(rows, cols) > max_dim:
        raise DimensionLimitError('Refusing to materialize a {rows}x{cols} matrix, the dimension cap is {cap}'.format(
            rows=rows, cols=cols, cap=max_dim))


def format_rational(value) -> str:
    """Serialize a rational as ``p`` or ``p/q``, the format read back by the DSL."""
    return str(to_fraction(value))


class RatMatrix:
    """Immutable matrix with exact rational entries.

    Zero-sized shapes are first class: cokernels of full rank maps and the hom-spaces of zero-dimensional functors have
    them. Equality is exact and matrices are hashable.
    """

    __slots__ = ('_dm', '_shape')

    def __init__(self, entries: Dict[Tuple[int, int], Fraction], shape: Tuple[int, int]):
        """Matrix constructor from the non-zero entries.

        Arguments:
            entries (dict): a ``{(row, col): value}`` mapping, zero values are discarded.
            shape (tuple): the ``(rows, cols)`` shape.

        Raises:
            frobcheck.ShapeError: if the shape is negative or an entry is out of bounds.

        """
        rows, cols = shape
        if rows < 0 or cols < 0:
            raise ShapeError('Invalid negative shape {rows}x{cols}'.format(rows=rows, cols=cols))
        _enforce_dimension_cap(rows, cols)

        sdm: Dict[int, Dict[int, object]] = {}
        for (i, j), value in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):  # pylint: disable=superfluous-parens
                raise ShapeError('Entry ({i}, {j}) out of bounds for shape {rows}x{cols}'.format(
                    i=i, j=j, rows=rows, cols=cols))
            element = _to_qq(value)
            if element:
                sdm.setdefault(i, {})[j] = element

        self._shape = (rows, cols)
        self._dm = DomainMatrix(sdm, (rows, cols), QQ)

    @classmethod
    def _from_domain(cls, dm) -> 'RatMatrix':
        """Wrap a DomainMatrix result, converting it to the sparse representation over QQ."""
        _enforce_dimension_cap(*dm.shape)
        matrix = cls.__new__(cls)
        matrix._shape = tuple(dm.shape)  # pylint: disable=protected-access
        matrix._dm = dm.convert_to(QQ).to_sparse()  # pylint: disable=protected-access
        return matrix

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> 'RatMatrix':
        """Build a matrix from a row-major list of rows.

        Arguments:
            rows (list): the rows, each a list of rationals (int, Fraction or ``p/q`` string).
            cols (int, optional): the number of columns, required only when there are no rows.

        Raises:
            frobcheck.ShapeError: if the rows have different lengths.

        """
        if cols is None:
            cols = len(rows[0]) if rows else 0

        entries = {}
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ShapeError('Row {row} has {num} entries, expected {cols}'.format(
                    row=i + 1, num=len(row), cols=cols))
            for j, value in enumerate(row):
                entries[(i, j)] = value

        return cls(entries, (len(rows), cols))

    @property
    def shape(self) -> Tuple[int, int]:
        """The ``(rows, cols)`` shape of the matrix."""
        return self._shape

    @property
    def rows(self) -> int:
        """Number of rows."""
        return self._shape[0]

    @property
    def cols(self) -> int:
        """Number of columns."""
        return self._shape[1]

    def items(self) -> Iterable[Tuple[Tuple[int, int], object]]:
        """Iterate the non-zero entries as ``((row, col), QQ element)`` pairs in row-major order."""
        sdm = self._dm.rep
        for i in sorted(sdm):
            row = sdm[i]
            for j in sorted(row):
                if row[j]:
                    yield (i, j), row[j]

    def entry(self, row: int, col: int) -> Fraction:
        """Return the entry at the given position as a Fraction."""
        if not (0 <= row < self.rows and 0 <= col < self.cols):  # pylint: disable=superfluous-parens
            raise ShapeError('Entry ({row}, {col}) out of bounds for shape {shape}'.format(
                row=row, col=col, shape=format_shape(self)))
        return to_fraction(self._dm.rep.get(row, {}).get(col, QQ(0)))

    def to_lists(self) -> List[List[Fraction]]:
        """Return the dense row-major list of lists of Fractions."""
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.items():
            dense[i][j] = to_fraction(value)
        return dense

    def is_zero(self) -> bool:
        """Whether every entry is zero."""
        return next(iter(self.items()), None) is None

    def transpose(self) -> 'RatMatrix':
        """Return the transposed matrix."""
        return RatMatrix({(j, i): value for (i, j), value in self.items()}, (self.cols, self.rows))

    def scale(self, factor) -> 'RatMatrix':
        """Return the matrix multiplied by the given rational scalar."""
        factor_qq = _to_qq(factor)
        return RatMatrix({key: value * factor_qq for key, value in self.items()}, self.shape)

    def __matmul__(self, other: 'RatMatrix') -> 'RatMatrix':
        """Matrix product, see :py:func:`mat_mul`."""
        return mat_mul(self, other)

    def __add__(self, other: 'RatMatrix') -> 'RatMatrix':
        """Entrywise sum of two matrices of the same shape."""
        _check_same_shape('add', self, other)
        entries = dict(self.items())
        for key, value in other.items():
            entries[key] = entries.get(key, QQ(0)) + value
        return RatMatrix(entries, self.shape)

    def __sub__(self, other: 'RatMatrix') -> 'RatMatrix':
        """Entrywise difference of two matrices of the same shape."""
        return self + other.scale(-1)

    def __neg__(self) -> 'RatMatrix':
        """Entrywise negation."""
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        """Exact equality, shapes included."""
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and dict(self.items()) == dict(other.items())

    def __hash__(self) -> int:
        """Hash consistent with the exact equality."""
        return hash((self.shape, frozenset(self.items())))

    def __repr__(self) -> str:
        """Return the representation of the matrix, with rationals as strings."""
        return 'RatMatrix({rows})'.format(rows=[[format_rational(value) for value in row] for row in self.to_lists()])

    def first_difference(self, other: 'RatMatrix') -> Optional[Tuple[int, int]]:
        """Return the first ``(row, col)`` in row-major order where the two matrices differ.

        Returns:
            tuple: the position, or :py:data:`None` if the matrices are equal.

        Raises:
            frobcheck.ShapeError: if the shapes differ.

        """
        _check_same_shape('compare', self, other)
        keys = sorted(key for key, _ in (self - other).items())
        if not keys:
            return None
        return keys[0]


def format_shape(matrix: RatMatrix) -> str:
    """Format the shape of a matrix as ``RxC``."""
    return '{rows}x{cols}'.format(rows=matrix.rows, cols=matrix.cols)


def _check_same_shape(operation, first, second):
    """Raise ShapeError if the two matrices have different shapes."""
    if first.shape != second.shape:
        raise ShapeError('Unable to {op} matrices of shapes {first} and {second}'.format(
            op=operation, first=format_shape(first), second=format_shape(second)))


def identity(n: int) -> RatMatrix:
    """The ``n x n`` identity matrix."""
    return RatMatrix({(i, i): 1 for i in range(n)}, (n, n))


def zeros(rows: int, cols: int) -> RatMatrix:
    """The ``rows x cols`` zero matrix."""
    return RatMatrix({}, (rows, cols))


def scalar(value) -> RatMatrix:
    """The ``1 x 1`` matrix holding the given rational, a morphism of the unit object."""
    return RatMatrix({(0, 0): value}, (1, 1))


def elementary(rows: int, cols: int, row: int, col: int) -> RatMatrix:
    """The ``rows x cols`` elementary matrix with a single 1 at ``(row, col)``."""
    return RatMatrix({(row, col): 1}, (rows, cols))


def elementary_matrices(rows: int, cols: int) -> List[RatMatrix]:
    """All the elementary matrices of the given shape, in row-major order of the non-zero entry.

    The list spans the space of ``rows x cols`` matrices, hence a property linear in a morphism argument holds for all
    morphisms of that shape if and only if it holds on this list.
    """
    return [elementary(rows, cols, i, j) for i in range(rows) for j in range(cols)]


def mat_mul(f: RatMatrix, g: RatMatrix) -> RatMatrix:
    """Ordinary matrix product ``f·g``, i.e. the composite "``g`` then ``f``" in the category of matrices.

    Arguments:
        f (frobcheck.linalg.RatMatrix): the left factor.
        g (frobcheck.linalg.RatMatrix): the right factor.

    Returns:
        frobcheck.linalg.RatMatrix: the product.

    Raises:
        frobcheck.ShapeError: if ``f.cols != g.rows``.

    Examples:
        >>> mat_mul(RatMatrix.from_rows([[2]]), RatMatrix.from_rows([['1/2']])) == identity(1)
        True

    """
    if f.cols != g.rows:
        raise ShapeError('Unable to multiply matrices of shapes {first} and {second}'.format(
            first=format_shape(f), second=format_shape(g)))

    if 0 in (f.rows, f.cols, g.cols):
        return zeros(f.rows, g.cols)

    return RatMatrix._from_domain(f._dm.matmul(g._dm))  # pylint: disable=protected-access


def compose(*matrices: RatMatrix) -> RatMatrix:
    """Product of any number of matrices, written in composition order: ``compose(f, g, h) = f·g·h``."""
    if not matrices:
        raise ShapeError('Unable to compose an empty list of matrices')

    result = matrices[-1]
    for matrix in reversed(matrices[:-1]):
        result = mat_mul(matrix, result)
    return result


def kron(f: RatMatrix, g: RatMatrix) -> RatMatrix:
    """Kronecker product, the tensor product of morphisms in ``Mat(Q)``.

    The first factor indexes the outer blocks: ``kron(f, g)[i*g.rows + k, j*g.cols + l] = f[i, j]*g[k, l]``.

    Examples:
        >>> kron(identity(2), identity(3)) == identity(6)
        True

    """
    g_items = list(g.items())
    entries = {}
    for (i, j), f_value in f.items():
        for (k, l), g_value in g_items:
            entries[(i * g.rows + k, j * g.cols + l)] = f_value * g_value

    return RatMatrix(entries, (f.rows * g.rows, f.cols * g.cols))


def kron_all(*matrices: RatMatrix) -> RatMatrix:
    """Kronecker product of any number of matrices, ``kron_all() = [[1]]``."""
    result = identity(1)
    for matrix in matrices:
        result = kron(result, matrix)
    return result


def commutation_matrix(m: int, n: int) -> RatMatrix:
    """The ``mn x mn`` permutation matrix swapping the tensor factors of ``Q^m ⊗ Q^n``.

    Sends ``e_i ⊗ e_j`` (index ``i*n + j``) to ``e_j ⊗ e_i`` (index ``j*m + i``), 0-based.
    """
    return RatMatrix({(j * m + i, i * n + j): 1 for i in range(m) for j in range(n)}, (m * n, m * n))


def hstack(*matrices: RatMatrix) -> RatMatrix:
    """Concatenate matrices with the same number of rows side by side."""
    if not matrices:
        raise ShapeError('Unable to stack an empty list of matrices')

    rows = matrices[0].rows
    entries = {}
    offset = 0
    for matrix in matrices:
        if matrix.rows != rows:
            raise ShapeError('Unable to hstack matrices with {first} and {second} rows'.format(
                first=rows, second=matrix.rows))
        for (i, j), value in matrix.items():
            entries[(i, j + offset)] = value
        offset += matrix.cols

    return RatMatrix(entries, (rows, offset))


def vstack(*matrices: RatMatrix) -> RatMatrix:
    """Stack matrices with the same number of columns one on top of the other."""
    if not matrices:
        raise ShapeError('Unable to stack an empty list of matrices')

    return hstack(*(matrix.transpose() for matrix in matrices)).transpose()


def rref(f: RatMatrix) -> Tuple[RatMatrix, Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns, computed exactly.

    Returns:
        tuple: the ``(rref, pivots)`` pair.

    """
    if f.rows == 0 or f.cols == 0:
        return f, ()

    reduced, pivots = f._dm.rref()  # pylint: disable=protected-access
    return RatMatrix._from_domain(reduced), tuple(int(pivot) for pivot in pivots)  # pylint: disable=protected-access


def rank(f: RatMatrix) -> int:
    """Rank of the matrix by exact elimination."""
    return len(rref(f)[1])


def is_iso(f: RatMatrix) -> bool:
    """Whether the matrix is an isomorphism of ``Mat(Q)``: square and of full rank.

    Examples:
        >>> is_iso(identity(5))
        True
        >>> is_iso(RatMatrix.from_rows([[1, 2], [2, 4]]))
        False

    """
    return f.rows == f.cols and rank(f) == f.rows


def inverse(f: RatMatrix) -> RatMatrix:
    """Exact inverse of an invertible matrix.

    Raises:
        frobcheck.ShapeError: if the matrix is not square or is singular.

    """
    if not is_iso(f):
        raise ShapeError('Matrix of shape {shape} is not invertible'.format(shape=format_shape(f)))

    if f.rows == 0:
        return f

    return RatMatrix._from_domain(f._dm.to_dense().inv())  # pylint: disable=protected-access


def cokernel(f: RatMatrix) -> Tuple[RatMatrix, RatMatrix]:
    """Cokernel of ``f: Q^cols -> Q^rows`` as a projection with a chosen section.

    The rows of the projection are the basis of the left null space of ``f`` read off the reduced row echelon form of
    ``fᵀ``: one vector per free column ``j``, with a 1 at ``j``, zero on the other free columns. The section is made of
    the unit vectors at the free columns. The basis depends only on the column space of ``f``, so two relation
    matrices spanning the same relations give bit-for-bit identical projections.

    Returns:
        tuple: the ``(projection, section)`` pair, with ``projection·f = 0`` and ``projection·section = id``.

    """
    reduced, pivots = rref(f.transpose())
    free = [column for column in range(f.rows) if column not in set(pivots)]

    projection_entries = {}
    for k, column in enumerate(free):
        projection_entries[(k, column)] = 1
        for pivot_row, pivot_column in enumerate(pivots):
            value = reduced.entry(pivot_row, column)
            if value:
                projection_entries[(k, pivot_column)] = -value

    projection = RatMatrix(projection_entries, (len(free), f.rows))
    section = RatMatrix({(column, k): 1 for k, column in enumerate(free)}, (f.rows, len(free)))
    logger.trace('Cokernel of a %s matrix has dimension %d', format_shape(f), len(free))

    return projection, section
