"""Frobenius monoidal functor directives."""
from frobcheck import functor
from frobcheck.directives import BaseDirective
from frobcheck.report import Report


VERBS = ('check frobenius', 'check monoidal', 'check comonoidal', 'check naturality', 'check split',
         'check structure', 'compose')
""":py:class:`tuple`: the verbs implemented by this module."""


class FunctorDirective(BaseDirective):
    """Checks of a single functor and of the composite of two."""

    signatures = {verb: ('functor',) for verb in VERBS}
    signatures['compose'] = ('functor', 'functor')

    checks = {
        'check frobenius': functor.check_frobenius,
        'check monoidal': functor.check_monoidal_coherence,
        'check comonoidal': functor.check_comonoidal_coherence,
        'check naturality': functor.check_naturality,
        'check split': functor.check_split,
        'check structure': functor.structural_validate,
    }
    """:py:class:`dict`: the check function of each single functor verb."""

    def _execute(self) -> Report:
        """Required by BaseDirective."""
        if self.verb == 'compose':
            composite = functor.compose_frobenius(self.functor(0), self.functor(1))
            return functor.check_all(composite, self.grid(composite.source))

        data = self.functor(0)
        return self.checks[self.verb](data, self.grid(data.source))


directive_class = FunctorDirective  # pylint: disable=invalid-name
"""Required by the directive auto-loader in :py:func:`frobcheck.grammar.get_registered_directives`."""
