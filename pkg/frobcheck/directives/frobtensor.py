"""Pointwise tensor product directives."""
from frobcheck import frobtensor
from frobcheck.directives import BaseDirective
from frobcheck.functor import check_all
from frobcheck.report import Report


VERBS = ('tensor', 'check frobcat')
""":py:class:`tuple`: the verbs implemented by this module."""


class FrobTensorDirective(BaseDirective):
    """The pointwise tensor of two functors and the braided structure of ``Frob(A, B)`` on three."""

    signatures = {
        'tensor': ('functor', 'functor'),
        'check frobcat': ('functor', 'functor', 'functor'),
    }

    def _execute(self) -> Report:
        """Required by BaseDirective."""
        first, second = self.functor(0), self.functor(1)
        grid = self.grid(first.source)
        if self.verb == 'tensor':
            return check_all(frobtensor.pointwise_tensor(first, second), grid)

        return frobtensor.check_frob_category(first, second, self.functor(2), grid)


directive_class = FrobTensorDirective  # pylint: disable=invalid-name
"""Required by the directive auto-loader in :py:func:`frobcheck.grammar.get_registered_directives`."""
