"""Spec files tests."""
import os

from fractions import Fraction

import pytest

from frobcheck import grammar, spec
from frobcheck.duality import FrobeniusAlgebra
from frobcheck.functor import FrobFunctorData
from frobcheck.linalg import RatMatrix
from frobcheck.monoidal import Mat
from frobcheck.spec import Declaration, Directive, InvalidSpecError, SpecSyntaxError
from frobcheck.tests import get_fixture_path


SPECS = ('tensor_left.spec', 'duality.spec', 'matrices.spec', 'strong.spec', 'convolution.spec')
TENSOR_LEFT = 'frobalg R = zmod(2)\nfunctor F = tensor_left(R)\n'


@pytest.mark.parametrize('name', SPECS)
def test_round_trip(name):
    """Serializing a parsed spec and parsing it back should give an equal model."""
    model = spec.parse_spec_file(get_fixture_path(os.path.join('specs', name)))
    text = spec.serialize_spec(model)
    assert spec.parse_spec(text) == model
    assert spec.serialize_spec(spec.parse_spec(text)) == text


def test_parse_spec():
    """Statements should be parsed in order, skipping comments and blank lines."""
    model = spec.parse_spec('\n# comment\nfrobalg R = zmod(2)  # trailing\nfunctor F = tensor_left(R)\n\n'
                            'check frobenius F grid 1..3\n')
    assert model.statements == [
        Declaration('frobalg', 'R', constructor='zmod', args=('2',)),
        Declaration('functor', 'F', constructor='tensor_left', args=('R',)),
        Directive('check frobenius', args=('F',), grid=(1, 2, 3)),
    ]
    assert [statement.line for statement in model.statements] == [3, 4, 6]
    assert len(model.declarations) == 2
    assert len(model.directives) == 1


def test_parse_spec_bindings():
    """Declarations should be bound to values renamed after the declared name."""
    model = spec.parse_spec(TENSOR_LEFT + 'matrix m 2x2 = [1/2 -3; 0 +7/3]\nbase G = zmod(3)\n')
    assert isinstance(model.bindings['R'], FrobeniusAlgebra)
    assert model.bindings['R'].name == 'R'
    assert isinstance(model.bindings['F'], FrobFunctorData)
    assert model.bindings['F'].name == 'F'
    assert model.bindings['m'] == RatMatrix.from_rows([['1/2', -3], [0, '7/3']])
    assert model.bindings['G'].name == 'Z/3'
    assert model.declarations[2].rows == ((Fraction(1, 2), Fraction(-3)), (Fraction(0), Fraction(7, 3)))


def test_parse_spec_empty_matrix():
    """Zero sized matrices should be allowed."""
    model = spec.parse_spec('matrix z 0x0 = []\nmatrix w 0x3 = []\n')
    assert model.bindings['z'].shape == (0, 0)
    assert model.bindings['w'].shape == (0, 3)


def test_parse_spec_override():
    """The override constructors should replace a single component."""
    model = spec.parse_spec(TENSOR_LEFT + 'matrix eps 1x2 = [2 0]\nfunctor G = override(F, i0, eps)\n'
                            'matrix Z 2x4 = [0 0 0 0; 0 0 0 0]\nfunctor H = override(F, r, 1, 1, Z)\n'
                            'base B = zmod(2)\nfunctor RG = regular(B)\nmatrix two 2x2 = [2 0; 0 2]\n'
                            'functor X = override(RG, rho, a, two)\n')
    assert model.bindings['G'].counit_i0() == RatMatrix.from_rows([[2, 0]])
    assert model.bindings['G'].kind == 'custom'
    assert model.bindings['H'].r_at(Mat(1), Mat(1)).is_zero()
    assert model.bindings['X'].act('a') == RatMatrix.from_rows([[2, 0], [0, 2]])
    assert model.bindings['X'].name == 'X'


def test_parse_spec_external_directive():
    """Directives registered from external modules should be parsed and validated."""
    registry = grammar.get_registered_directives(external=['frobcheck.tests.unit.directives.external.ok'])
    model = spec.parse_spec('matrix P 2x2 = [1 0; 0 0]\ncheck idempotent P\n', registry=registry)
    assert model.directives == [Directive('check idempotent', args=('P',))]


@pytest.mark.parametrize('text, line, col, message', (
    ('frobalg R = zmod(2)\nfrobalg R = unit', 2, 9, "Name 'R' already bound at line 1"),
    ('functor F = tensor_left(R)', 1, 25, "Unknown name 'R'"),
    ('dual D = cupcap(2)\nfunctor F = tensor_left(D)', 2, 25, "Name 'D' is a DualSituation, expected a frobalg"),
    ('matrix m 2x2 = [1 0]', 1, 16, 'Matrix m declared with 2 rows, got 1'),
    ('matrix m 2x2 = [1 0; 1]', 1, 22, 'Row 2 of matrix m has 1 entries, expected 2'),
    ('frobalg R = magic(2)', 1, 13,
     "Unknown frobalg constructor 'magic', expected one of algebra, group, override, unit, zmod"),
    ('frobalg R = zmod(2, 3)', 1, 13, 'Constructor zmod expects 1 arguments, got 2'),
    ('frobalg R = zmod(x)', 1, 18, "Expected a non-negative integer, got 'x'"),
    ('frobalg R = zmod(0)', 1, 13, 'Unable to bind frobalg R: Invalid order 0'),
    (TENSOR_LEFT + 'check frobenius F R', 3, 16, 'Directive check frobenius expects 1 arguments (functor), got 2'),
    (TENSOR_LEFT + 'check frobenius F mirrored', 3, 19,
     'Directive check frobenius does not accept the mirrored option'),
    (TENSOR_LEFT + 'check frobenius X', 3, 17, "Unknown name 'X'"),
    (TENSOR_LEFT + 'check frobenius F grid 3..1', 3, 24, "Invalid grid range '3..1'"),
))
def test_parse_spec_invalid(text, line, col, message):
    """Invalid statements should raise SpecSyntaxError at the position of the problem."""
    with pytest.raises(SpecSyntaxError) as excinfo:
        spec.parse_spec(text)

    assert excinfo.value.line == line
    assert excinfo.value.col == col
    assert excinfo.value.message.startswith(message)
    assert str(excinfo.value).startswith('line {line}, col {col}: '.format(line=line, col=col))


def test_parse_spec_invalid_statement():
    """Statements that do not match the grammar should raise SpecSyntaxError."""
    with pytest.raises(SpecSyntaxError, match='Invalid statement') as excinfo:
        spec.parse_spec(TENSOR_LEFT + 'check frobenius F grid\n')

    assert excinfo.value.line == 3


def test_parse_spec_file_missing():
    """A missing spec file should raise InvalidSpecError."""
    with pytest.raises(InvalidSpecError, match='Unable to read spec file'):
        spec.parse_spec_file('/nonexistent/frobcheck.spec')


@pytest.mark.parametrize('text, dims', (
    ('1..3', (1, 2, 3)),
    ('1,2,4', (1, 2, 4)),
    ('1..2,5', (1, 2, 5)),
    ('4,1', (1, 4)),
))
def test_parse_range(text, dims):
    """Grid ranges should be parsed into the sorted dimensions and folded back."""
    assert spec.parse_range(text) == dims
    assert spec.parse_range(spec.format_range(dims)) == dims


def test_format_range():
    """Contiguous dimensions should be folded."""
    assert spec.format_range((1, 2, 3)) == '1..3'
    assert spec.format_range((1, 2, 5)) == '1..2,5'
    assert spec.format_range((2,)) == '2'


def test_serialize_statement():
    """Statements should be serialized in canonical form."""
    assert spec.serialize_statement(Declaration('matrix', 'm', shape=(1, 2), rows=((Fraction(2, 4), Fraction(1)),))) \
        == 'matrix m 1x2 = [1/2 1]'
    assert spec.serialize_statement(Declaration('frobalg', 'U', constructor='unit')) == 'frobalg U = unit'
    assert spec.serialize_statement(Declaration('functor', 'F', constructor='tensor_left', args=('R',))) \
        == 'functor F = tensor_left(R)'
    assert spec.serialize_statement(Directive('check mate', args=('t', 'D'), grid=(1, 2, 4), mirrored=True)) \
        == 'check mate t D grid 1..2,4 mirrored'
