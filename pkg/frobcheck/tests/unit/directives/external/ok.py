"""Test working external directive module."""
from frobcheck.tests.unit.directives.external import ExternalDirective


VERBS = ('check idempotent',)
""":py:class:`tuple`: the verbs implemented by this module.
Required by the directive auto-loader in :py:func:`frobcheck.grammar.get_registered_directives`."""
directive_class = ExternalDirective  # pylint: disable=invalid-name
"""Required by the directive auto-loader in :py:func:`frobcheck.grammar.get_registered_directives`."""
