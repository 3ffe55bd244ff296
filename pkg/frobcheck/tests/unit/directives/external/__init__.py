"""External directives package for testing."""
from frobcheck import linalg
from frobcheck.directives import BaseDirective
from frobcheck.report import format_location, Report


class ExternalDirective(BaseDirective):
    """External test directive that verifies that a matrix is idempotent."""

    signatures = {'check idempotent': ('matrix',)}

    def _execute(self):
        """Required by BaseDirective."""
        matrix = self.arg(0)
        report = Report()
        report.check('idempotent', 'square', format_location(self.directive.args[0]), lambda: matrix @ matrix,
                     lambda: matrix)
        if not linalg.is_iso(matrix):
            report.add_note('Matrix {name} is singular.'.format(name=self.directive.args[0]))
        return report
