"""Dual situation, Frobenius algebra and transformation directives."""
from frobcheck import duality
from frobcheck.directives import BaseDirective
from frobcheck.monoidal import MATQ
from frobcheck.report import Report


VERBS = ('check triangles', 'check frobalg', 'check nattrans', 'check mate', 'transport dual', 'apply')
""":py:class:`tuple`: the verbs implemented by this module."""


class DualityDirective(BaseDirective):
    """Dual situations and their transport, Frobenius algebras and their image, transformations and their mates.

    Without a ``grid`` option the directives that need one use the objects of the dual situation.
    """

    signatures = {
        'check triangles': ('dual',),
        'check frobalg': ('frobalg',),
        'check nattrans': ('nattrans',),
        'check mate': ('nattrans', 'dual'),
        'transport dual': ('functor', 'dual'),
        'apply': ('functor', 'frobalg'),
    }
    mirrorable = ('check mate',)

    def _execute(self) -> Report:
        """Required by BaseDirective."""
        if self.verb == 'check triangles':
            return duality.check_triangles(self.arg(0))

        if self.verb == 'check frobalg':
            return duality.check_frobenius_algebra(self.arg(0))

        if self.verb == 'check nattrans':
            transformation = self.arg(0)
            return duality.check_nat_transf(transformation, self.grid(transformation.source.source))

        if self.verb == 'check mate':
            transformation, dual = self.arg(0), self.arg(1)
            grid = self.grid(MATQ, objects=(dual.left, dual.right))
            return duality.check_mate_invertibility(transformation, dual, grid, mirrored=self.directive.mirrored)

        if self.verb == 'transport dual':
            data, dual = self.functor(0), self.arg(1)
            grid = self.grid(data.source) if self.directive.grid is not None else None
            return duality.check_triangles(duality.transport_dual(data, dual, grid=grid))

        # apply
        return duality.check_frobenius_algebra(duality.apply_functor_to_algebra(self.functor(0), self.arg(1)))


directive_class = DualityDirective  # pylint: disable=invalid-name
"""Required by the directive auto-loader in :py:func:`frobcheck.grammar.get_registered_directives`."""
