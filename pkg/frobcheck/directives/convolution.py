"""Convolution directive."""
from frobcheck.convolution import run_convolution_suite
from frobcheck.directives import BaseDirective
from frobcheck.report import Report


VERBS = ('check convolution',)
""":py:class:`tuple`: the verbs implemented by this module."""


class ConvolutionDirective(BaseDirective):
    """Coend computations for a representation of a finite abelian group, the grid option is ignored."""

    signatures = {'check convolution': ('representation',)}

    def _execute(self) -> Report:
        """Required by BaseDirective."""
        return run_convolution_suite(self.arg(0))


directive_class = ConvolutionDirective  # pylint: disable=invalid-name
"""Required by the directive auto-loader in :py:func:`frobcheck.grammar.get_registered_directives`."""
