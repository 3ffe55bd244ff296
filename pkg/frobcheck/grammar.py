"""Spec file grammar definition."""
import importlib
import pkgutil

from collections import namedtuple

import pyparsing as pp

from frobcheck import directives, FrobcheckError


INTERNAL_DIRECTIVE_PREFIX = 'frobcheck.directives'
""":py:class:`str` with the prefix for built-in directives."""
DECLARATION_KINDS = ('frobalg', 'dual', 'base', 'functor', 'nattrans')
""":py:class:`tuple`: the declaration keywords bound through a constructor, ``matrix`` has its own syntax."""
RESERVED_WORDS = ('grid', 'mirrored')
""":py:class:`tuple`: the directive options, not valid as names in directives."""


DirectiveModule = namedtuple('DirectiveModule', ['verb', 'name', 'cls'])
""":py:func:`collections.namedtuple` that define a registered directive.

Keyword Arguments:
    verb (str): The directive verb to be used in the grammar, e.g. ``check frobenius``.
    name (str): The name of the module that defines it.
    cls (BaseDirective): The directive class object.
"""

RowToken = namedtuple('RowToken', ['col', 'entries'])
""":py:func:`collections.namedtuple` for a parsed matrix row.

Keyword Arguments:
    col (int): the 1-based column where the row starts, for error reporting.
    entries (tuple): the rational entries as strings.
"""


def get_registered_directives(external=()):
    """Get a mapping of all the registered directives with their verb.

    Arguments:
        external (list, tuple, optional): external directive modules to register.

    Returns:
        dict: A dictionary with a ``{verb: DirectiveModule object}`` mapping for each available directive.

    Raises:
        frobcheck.FrobcheckError: If unable to register a directive.

    """
    available_directives = {}
    directive_names = ['{prefix}.{directive}'.format(prefix=INTERNAL_DIRECTIVE_PREFIX, directive=name)
                       for _, name, ispkg in pkgutil.iter_modules(directives.__path__) if not ispkg]

    for name in directive_names + list(external):
        for verb, directive in _import_directive(name, available_directives):
            available_directives[verb] = directive

    return available_directives


def _rows_action(string, loc, toks):
    """Parse action that records the column of a matrix row."""
    return RowToken(col=pp.col(loc, string), entries=tuple(toks[0]))


def _verb(verb):
    """Grammar element that matches all the words of a verb and returns the verb itself."""
    element = pp.And([pp.Keyword(word) for word in verb.split()])
    return element.setParseAction(lambda: verb)


def grammar(verbs):
    """Define the grammar of a single spec statement.

    A spec file is parsed line by line, blank lines and ``#`` comments are skipped.

    * Matrix literal, row-major with ``;`` between rows: ``matrix e 1x4 = [1 0 0 -3/7]``.
    * Declaration through a constructor: ``functor F = tensor_left(R)``, ``frobalg R = unit``.
    * Directive: ``check frobenius F grid 1..3``, ``check mate t D mirrored``, ``transport dual F D``.

    Backus-Naur form (BNF) of the grammar::

          <statement> ::= <matrix> | <declaration> | <directive>
             <matrix> ::= "matrix" <name> <rows> "x" <cols> "=" "[" <row> [ ";" <row> ]* "]"
                <row> ::= <rational>*
        <declaration> ::= <kind> <name> "=" <constructor> [ "(" <atom> [ "," <atom> ]* ")" ]
          <directive> ::= <verb> <name>* [ "grid" <range> ] [ "mirrored" ]
              <range> ::= <span> [ "," <span> ]*
               <span> ::= <integer> [ ".." <integer> ]

    Arguments:
        verbs (list): the verbs of the registered directives.

    Returns:
        pyparsing.ParserElement: the grammar parser.

    """
    name = pp.Word(pp.alphas + '_', pp.alphanums + '_')
    integer = pp.Word(pp.nums)

    # Matrix literal
    rational = pp.Regex(r'[+-]?\d+(/[1-9]\d*)?')
    row = pp.Group(pp.ZeroOrMore(rational)).setParseAction(_rows_action)
    shape = pp.Regex(r'(?P<rows>\d+)x(?P<cols>\d+)')
    literal = pp.Suppress('[') + pp.Group(pp.delimitedList(row, delim=';'))('rows') + pp.Suppress(']')
    matrix = pp.Keyword('matrix')('kind') + name('name') + shape('shape') + pp.Suppress('=') + literal

    # Declaration through a constructor
    atom = pp.Word(pp.alphanums + '_^/-+')
    arguments = pp.Suppress('(') + pp.Optional(pp.delimitedList(atom)) + pp.Suppress(')')
    declaration = (pp.oneOf(DECLARATION_KINDS, asKeyword=True)('kind') + name('name') + pp.Suppress('=')
                   + name('constructor') + pp.Group(pp.Optional(arguments))('args'))

    # Directive, longest verbs first so that ``check frobenius`` never shadows a longer verb sharing a prefix
    verb = pp.MatchFirst([_verb(item) for item in sorted(verbs, key=lambda item: (-len(item.split()), item))])
    verb.addParseAction(lambda toks: toks[0])  # keep the named verb a plain string on pyparsing 3
    reserved = pp.MatchFirst([pp.Keyword(word) for word in RESERVED_WORDS])
    span = pp.Combine(integer + pp.Optional('..' + integer))
    grid_range = pp.Combine(span + pp.ZeroOrMore(',' + span))
    directive = (verb('verb') + pp.Group(pp.ZeroOrMore(~reserved + name))('args')
                 + pp.Optional(pp.Keyword('grid') + grid_range('grid'))
                 + pp.Optional(pp.Keyword('mirrored')('mirrored')))

    return matrix | declaration | directive


def _import_directive(module, available_directives):
    """Dynamically import a directive module and validate it.

    Arguments:
        module (str): the full module name of the directive to register. Must be importable from Python ``PATH``.
        available_directives (dict): dictionary with a ``{verb: DirectiveModule object}`` mapping for all registered
            directives.

    Returns:
        list: of ``(verb, DirectiveModule object)`` tuples for the verbs of the imported module.

    """
    try:
        directive = importlib.import_module(module)
    except ImportError as e:
        raise FrobcheckError("Unable to import directive '{module}': {e}".format(module=module, e=e)) from e

    name = module.split('.')[-1]
    message = "Unable to register directive '{name}' in module '{module}'".format(name=name, module=module)
    try:
        verbs = directive.VERBS
    except AttributeError as e:
        raise FrobcheckError('{message}: VERBS module attribute not found'.format(message=message)) from e

    for verb in verbs:
        if verb in available_directives:
            raise FrobcheckError("{message}: verb '{verb}' already registered: {directives}".format(
                message=message, verb=verb, directives=available_directives[verb]))

    try:
        class_obj = directive.directive_class
    except AttributeError as e:
        raise FrobcheckError('{message}: directive_class module attribute not found'.format(message=message)) from e

    if not issubclass(class_obj, directives.BaseDirective):
        raise FrobcheckError('{message}: directive_class module attribute is not a subclass of '
                             'frobcheck.directives.BaseDirective'.format(message=message))

    missing = [verb for verb in verbs if verb not in class_obj.signatures]
    if missing:
        raise FrobcheckError('{message}: no signature for verbs {verbs}'.format(message=message, verbs=missing))

    return [(verb, DirectiveModule(verb=verb, name=name, cls=class_obj)) for verb in verbs]
