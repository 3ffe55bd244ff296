"""Spec files: parsing, binding of the declarations and canonical serialization."""
import copy
import logging

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

import pyparsing as pp

from ClusterShell.RangeSet import RangeSet, RangeSetParseError

from frobcheck import FrobcheckError, linalg
from frobcheck.convolution import BaseFunctor, regular_functor
from frobcheck.directives import as_functor_data
from frobcheck.duality import (cupcap, DualSituation, FrobeniusAlgebra, group_algebra, identity_transformation,
                               MonComonNatTransf, scaled_transformation, tensor_left_functor, unit_algebra,
                               zmod_algebra)
from frobcheck.frobtensor import pointwise_tensor, unit_functor
from frobcheck.functor import (compose_frobenius, from_strong, FrobFunctorData, identity_functor, ObjectGrid,
                               scaled_identity_functor)
from frobcheck.grammar import get_registered_directives, grammar
from frobcheck.linalg import format_rational, RatMatrix
from frobcheck.monoidal import cyclic_base, FiniteBase, Mat, product_base


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""
KIND_TYPES = {
    'matrix': RatMatrix,
    'frobalg': FrobeniusAlgebra,
    'dual': DualSituation,
    'base': FiniteBase,
    'functor': (FrobFunctorData, BaseFunctor),
    'representation': BaseFunctor,
    'nattrans': MonComonNatTransf,
}
""":py:class:`dict`: the types of the values that each argument kind accepts."""


class InvalidSpecError(FrobcheckError):
    """Custom exception class for invalid spec files."""


class SpecSyntaxError(InvalidSpecError):
    """Invalid statement, with the 1-based position of the problem."""

    def __init__(self, message: str, line: int, col: int):
        """Constructor.

        Arguments:
            message (str): the description of the problem.
            line (int): the line number.
            col (int): the column number.

        """
        super().__init__('line {line}, col {col}: {message}'.format(line=line, col=col, message=message))
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Declaration:
    """A ``matrix`` literal or a name bound through a constructor, e.g. ``functor F = tensor_left(R)``."""

    kind: str
    name: str
    constructor: str = ''
    args: Tuple[str, ...] = ()
    shape: Optional[Tuple[int, int]] = None
    rows: Tuple[Tuple[Fraction, ...], ...] = ()
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Directive:
    """A check to run, e.g. ``check frobenius F grid 1..3``."""

    verb: str
    args: Tuple[str, ...] = ()
    grid: Optional[Tuple[int, ...]] = None
    mirrored: bool = False
    line: int = field(default=0, compare=False)


Statement = Union[Declaration, Directive]


@dataclass
class SpecModel:
    """The ordered statements of a spec and the values bound to its names.

    Two models are equal when they have the same statements, line numbers and bound values are not compared.
    """

    statements: List[Statement] = field(default_factory=list)
    bindings: Dict[str, object] = field(default_factory=dict, compare=False, repr=False)

    @property
    def declarations(self) -> List[Declaration]:
        """The declarations, in order."""
        return [statement for statement in self.statements if isinstance(statement, Declaration)]

    @property
    def directives(self) -> List[Directive]:
        """The directives, in order."""
        return [statement for statement in self.statements if isinstance(statement, Directive)]


def _column(line: str, token: str, start: int = 0) -> int:
    """1-based column of a token in the line, ``start + 1`` if not found."""
    position = line.find(token, start)
    return position + 1 if position >= 0 else start + 1


def parse_range(text: str) -> Tuple[int, ...]:
    """Parse a grid range like ``1..3``, ``1,2,4`` or ``1..2,5`` into the sorted dimensions.

    Raises:
        frobcheck.spec.InvalidSpecError: if the range is not valid.

    """
    try:
        dims = RangeSet(text.replace('..', '-'))
    except RangeSetParseError as e:
        raise InvalidSpecError("Invalid grid range '{text}': {e}".format(text=text, e=e)) from e

    return tuple(sorted(int(dim) for dim in dims.intiter()))


def format_range(dims: Tuple[int, ...]) -> str:
    """Inverse of :py:func:`parse_range`, folding contiguous dimensions."""
    return str(RangeSet(','.join(str(dim) for dim in dims))).replace('-', '..')


def _matrix_declaration(parsed: pp.ParseResults, line: str, lineno: int) -> Declaration:
    """Validate a matrix literal against its declared shape."""
    rows, cols = (int(value) for value in parsed['shape'].split('x'))
    tokens = list(parsed['rows'])
    if rows == 0 and len(tokens) == 1 and not tokens[0].entries:
        tokens = []

    if len(tokens) != rows:
        raise SpecSyntaxError('Matrix {name} declared with {rows} rows, got {num}'.format(
            name=parsed['name'], rows=rows, num=len(tokens)), lineno, _column(line, '['))

    for number, token in enumerate(tokens, start=1):
        if len(token.entries) != cols:
            raise SpecSyntaxError('Row {row} of matrix {name} has {num} entries, expected {cols}'.format(
                row=number, name=parsed['name'], num=len(token.entries), cols=cols), lineno, token.col)

    values = tuple(tuple(linalg.to_fraction(entry) for entry in token.entries) for token in tokens)
    return Declaration('matrix', parsed['name'], shape=(rows, cols), rows=values, line=lineno)


def _statement(parsed: pp.ParseResults, line: str, lineno: int) -> Statement:
    """Convert the parsed tokens of a line into a statement."""
    kind = parsed.get('kind')
    if kind == 'matrix':
        return _matrix_declaration(parsed, line, lineno)
    if kind is not None:
        return Declaration(kind, parsed['name'], constructor=parsed['constructor'], args=tuple(parsed['args']),
                           line=lineno)

    grid = None
    if 'grid' in parsed:
        try:
            grid = parse_range(parsed['grid'])
        except InvalidSpecError as e:
            raise SpecSyntaxError(str(e), lineno, _column(line, parsed['grid'])) from e

    return Directive(parsed['verb'], args=tuple(parsed['args']), grid=grid, mirrored='mirrored' in parsed,
                     line=lineno)


def _override_functor(functor, component: str, *rest):
    """Override a component of a functor.

    ``override(F, FIELD, M)`` for the units or the maps of a representation, ``override(F, FIELD, ADIM, BDIM, M)``
    for the ``r`` and ``i`` components of a functor on ``Mat(Q)`` and ``override(F, rho, LABEL, M)`` for the action of
    a group element.
    """
    if isinstance(functor, BaseFunctor):
        if component == 'rho' and len(rest) == 2:
            return functor.override('rho', rest[1], element=rest[0])
        if len(rest) == 1:
            return functor.override(component, rest[0])
    elif len(rest) == 1:
        return functor.override(component, None, rest[0])
    elif len(rest) == 3:
        return functor.override(component, (Mat(_int(rest[0])), Mat(_int(rest[1]))), rest[2])

    raise FrobcheckError('Invalid arguments to override {component} of {name}'.format(
        component=component, name=functor.name))


def _int(atom: str) -> int:
    """Parse a non-negative integer argument."""
    if not atom.isdigit():
        raise FrobcheckError("Expected a non-negative integer, got '{atom}'".format(atom=atom))
    return int(atom)


CONSTRUCTORS: Dict[str, Dict[str, Tuple[Optional[Tuple[str, ...]], Callable]]] = {
    'frobalg': {
        'zmod': (('int',), zmod_algebra),
        'unit': ((), unit_algebra),
        'group': (('base',), group_algebra),
        'algebra': (('int', 'matrix', 'matrix', 'matrix', 'matrix'),
                    lambda dim, mu, eta, delta, eps: FrobeniusAlgebra(Mat(dim), mu, eta, delta, eps)),
        'override': (('frobalg', 'word', 'matrix'), lambda algebra, name, matrix: algebra.override(name, matrix)),
    },
    'dual': {
        'cupcap': (('int',), cupcap),
        'pair': (('int', 'int', 'matrix', 'matrix'), lambda a, b, e, n: DualSituation(Mat(a), Mat(b), e, n)),
        'override': (('dual', 'word', 'matrix'), lambda dual, name, matrix: dual.override(name, matrix)),
    },
    'base': {
        'zmod': (('int',), cyclic_base),
        'product': (('base', 'base'), product_base),
    },
    'functor': {
        'identity': ((), identity_functor),
        'unit': ((), unit_functor),
        'tensor_left': (('frobalg',), tensor_left_functor),
        'compose': (('functor', 'functor'),
                    lambda second, first: compose_frobenius(as_functor_data(second), as_functor_data(first))),
        'tensor': (('functor', 'functor'),
                   lambda first, second: pointwise_tensor(as_functor_data(first), as_functor_data(second))),
        'strong': (('functor',), lambda functor: from_strong(
            as_functor_data(functor), ObjectGrid.for_category(as_functor_data(functor).source))),
        'scaled': (('rational', 'rational'), scaled_identity_functor),
        'regular': (('base',), regular_functor),
        'override': (None, _override_functor),
    },
    'nattrans': {
        'identity': (('functor', 'functor'),
                     lambda source, target: identity_transformation(as_functor_data(source), as_functor_data(target))),
        'scaled': (('functor', 'functor', 'rational'), lambda source, target, factor: scaled_transformation(
            as_functor_data(source), as_functor_data(target), factor)),
        'override': (('nattrans', 'int', 'matrix'), lambda t, dim, matrix: t.override(Mat(dim), matrix)),
    },
}
""":py:class:`dict`: the ``{kind: {constructor: (argument kinds, builder)}}`` mapping, :py:data:`None` kinds are
resolved positionally by the builder itself."""


class Binder:
    """Bind the declarations of a spec to values and validate its directives, one statement at a time."""

    def __init__(self, model: SpecModel, registry: Dict):
        """Constructor.

        Arguments:
            model (frobcheck.spec.SpecModel): the model to fill.
            registry (dict): the registered directives, see :py:func:`frobcheck.grammar.get_registered_directives`.

        """
        self.model = model
        self.registry = registry
        self.lines: Dict[str, int] = {}

    def bind(self, statement: Statement, line: str) -> None:
        """Bind a declaration or validate a directive.

        Arguments:
            statement (frobcheck.spec.Declaration, frobcheck.spec.Directive): the statement.
            line (str): the text of the statement, to locate errors.

        Raises:
            frobcheck.spec.SpecSyntaxError: on unknown or duplicate names, wrong argument kinds, shape mismatches and
                rejected fixtures.

        """
        if isinstance(statement, Directive):
            self._validate_directive(statement, line)
            return

        if statement.name in self.model.bindings:
            raise SpecSyntaxError("Name '{name}' already bound at line {first}".format(
                name=statement.name, first=self.lines[statement.name]), statement.line, _column(line, statement.name))

        if statement.kind == 'matrix':
            value = RatMatrix.from_rows(statement.rows, cols=statement.shape[1])  # type: ignore
        else:
            value = self._construct(statement, line)

        self.model.bindings[statement.name] = value
        self.lines[statement.name] = statement.line
        logger.trace('Bound %s %s at line %d: %r', statement.kind, statement.name, statement.line, value)

    def _construct(self, statement: Declaration, line: str):
        """Build the value of a declaration through its constructor."""
        start = line.index('=')
        col = _column(line, statement.constructor, start)
        constructors = CONSTRUCTORS[statement.kind]
        if statement.constructor not in constructors:
            raise SpecSyntaxError("Unknown {kind} constructor '{name}', expected one of {names}".format(
                kind=statement.kind, name=statement.constructor, names=', '.join(sorted(constructors))),
                statement.line, col)

        kinds, builder = constructors[statement.constructor]
        if kinds is None:
            kinds = ('functor', 'word') + ('atom',) * (len(statement.args) - 3) + ('matrix',)
        if len(statement.args) != len(kinds):
            raise SpecSyntaxError('Constructor {name} expects {num} arguments, got {got}'.format(
                name=statement.constructor, num=len(kinds), got=len(statement.args)), statement.line, col)

        values = [self._argument(atom, kind, statement, line, col) for atom, kind in zip(statement.args, kinds)]
        try:
            value = builder(*values)
        except FrobcheckError as e:
            raise SpecSyntaxError('Unable to bind {kind} {name}: {e}'.format(kind=statement.kind, name=statement.name,
                                                                             e=e), statement.line, col) from e

        if isinstance(value, (RatMatrix, FiniteBase)):
            return value
        if isinstance(value, FrobFunctorData):
            return value.replace(name=statement.name)
        named = copy.copy(value)
        named.name = statement.name
        return named

    def _argument(self, atom: str, kind: str, statement: Statement, line: str, start: int):
        """Resolve a constructor or directive argument of the given kind."""
        col = _column(line, atom, start - 1)
        try:
            if kind == 'int':
                return _int(atom)
            if kind == 'rational':
                return linalg.to_fraction(atom)
        except FrobcheckError as e:
            raise SpecSyntaxError(str(e), statement.line, col) from e
        if kind in ('word', 'atom'):
            return atom

        if atom not in self.model.bindings:
            raise SpecSyntaxError("Unknown name '{name}'".format(name=atom), statement.line, col)
        value = self.model.bindings[atom]
        if not isinstance(value, KIND_TYPES[kind]):
            raise SpecSyntaxError("Name '{name}' is a {type}, expected a {kind}".format(
                name=atom, type=type(value).__name__, kind=kind), statement.line, col)
        return value

    def _validate_directive(self, directive: Directive, line: str) -> None:
        """Validate the arguments and options of a directive against the signature of its verb."""
        cls = self.registry[directive.verb].cls
        col = _column(line, directive.verb.split()[-1]) + len(directive.verb.split()[-1])
        kinds = cls.signatures[directive.verb]
        if len(directive.args) != len(kinds):
            raise SpecSyntaxError('Directive {verb} expects {num} arguments ({kinds}), got {got}'.format(
                verb=directive.verb, num=len(kinds), kinds=', '.join(kinds), got=len(directive.args)),
                directive.line, col)

        for atom, kind in zip(directive.args, kinds):
            self._argument(atom, kind, directive, line, col)

        if directive.mirrored and directive.verb not in cls.mirrorable:
            raise SpecSyntaxError('Directive {verb} does not accept the mirrored option'.format(verb=directive.verb),
                                  directive.line, _column(line, 'mirrored', col))


def parse_spec(text: str, registry: Optional[Dict] = None) -> SpecModel:
    """Parse and bind a spec.

    Arguments:
        text (str): the spec text, one statement per line.
        registry (dict, optional): the registered directives, the built-in ones if not set.

    Returns:
        frobcheck.spec.SpecModel: the model with its bindings.

    Raises:
        frobcheck.spec.SpecSyntaxError: on the first invalid statement.

    """
    if registry is None:
        registry = get_registered_directives()

    parser = grammar(list(registry.keys()))
    model = SpecModel()
    binder = Binder(model, registry)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].rstrip()
        if not line.strip():
            continue

        try:
            parsed = parser.parseString(line, parseAll=True)
        except pp.ParseException as e:
            raise SpecSyntaxError('Invalid statement: {msg}'.format(msg=e.msg), lineno, e.col) from e

        statement = _statement(parsed, line, lineno)
        binder.bind(statement, line)
        model.statements.append(statement)

    logger.debug('Parsed spec with %d declarations and %d directives', len(model.declarations),
                 len(model.directives))
    return model


def parse_spec_file(path: str, registry: Optional[Dict] = None) -> SpecModel:
    """Read and parse a spec file.

    Raises:
        frobcheck.spec.InvalidSpecError: if the file cannot be read.
        frobcheck.spec.SpecSyntaxError: on the first invalid statement.

    """
    try:
        with open(path, 'r', encoding='utf-8') as spec_file:
            text = spec_file.read()
    except OSError as e:
        raise InvalidSpecError('Unable to read spec file {path}: {e}'.format(path=path, e=e)) from e

    return parse_spec(text, registry=registry)


def serialize_statement(statement: Statement) -> str:
    """Canonical text of a statement."""
    if isinstance(statement, Directive):
        parts = [statement.verb] + list(statement.args)
        if statement.grid is not None:
            parts.extend(['grid', format_range(statement.grid)])
        if statement.mirrored:
            parts.append('mirrored')
        return ' '.join(parts)

    if statement.kind == 'matrix':
        rows = '; '.join(' '.join(format_rational(value) for value in row) for row in statement.rows)
        return 'matrix {name} {rows}x{cols} = [{values}]'.format(
            name=statement.name, rows=statement.shape[0], cols=statement.shape[1], values=rows)  # type: ignore

    args = '({args})'.format(args=', '.join(statement.args)) if statement.args else ''
    return '{kind} {name} = {constructor}{args}'.format(kind=statement.kind, name=statement.name,
                                                         constructor=statement.constructor, args=args)


def serialize_spec(model: SpecModel) -> str:
    """Canonical text of a spec, parsing it back gives an equal model."""
    return ''.join('{statement}\n'.format(statement=serialize_statement(statement)) for statement in model.statements)
