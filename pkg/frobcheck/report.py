"""Check reports: ordered pass/fail/error entries with counterexample witnesses."""
import json
import logging

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from frobcheck import DimensionLimitError, FrobcheckError
from frobcheck.color import Colored
from frobcheck.linalg import format_rational, format_shape, RatMatrix


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""
PASS = 'pass'
""":py:class:`str`: status of a verified equation."""
FAIL = 'fail'
""":py:class:`str`: status of an equation that does not hold, always with a witness."""
ERROR = 'error'
""":py:class:`str`: status of a check that could not be carried out."""
REPORT_MODES = ('text', 'json')
""":py:class:`tuple`: the available report formats."""


def _matrix_to_lists(matrix: RatMatrix) -> List[List[str]]:
    """Dense rows of rationals as strings."""
    return [[format_rational(value) for value in row] for row in matrix.to_lists()]


@dataclass(frozen=True)
class Witness:
    """The two sides of a failing equation and the first entry, row-major and 0-based, where they differ."""

    lhs: RatMatrix
    rhs: RatMatrix
    row: Optional[int] = None
    col: Optional[int] = None

    def to_dict(self) -> Dict:
        """Serializable representation, rationals as strings."""
        return {'lhs': _matrix_to_lists(self.lhs), 'rhs': _matrix_to_lists(self.rhs), 'row': self.row, 'col': self.col}


@dataclass(frozen=True)
class ReportEntry:
    """A single verified, failed or errored check."""

    suite: str
    check: str
    location: str
    status: str
    witness: Optional[Witness] = None
    message: str = ''

    def to_dict(self) -> Dict:
        """Serializable representation with stable field names."""
        data = {
            'suite': self.suite,
            'check': self.check,
            'location': self.location,
            'status': self.status,
            'witness': self.witness.to_dict() if self.witness is not None else None,
        }
        if self.message:
            data['message'] = self.message
        return data


def format_location(*parts) -> str:
    """Format a location as a parenthesized tuple, e.g. ``(1, 2, 3)``."""
    return '({parts})'.format(parts=', '.join(str(part) for part in parts))


@dataclass
class Report:
    """Ordered list of check entries.

    Examples:
        >>> report = Report()
        >>> report.compare('frobalg', 'associativity', '(R)', lhs, rhs)
        >>> report.exit_code
        0

    """

    entries: List[ReportEntry] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add_pass(self, suite: str, check: str, location: str) -> None:
        """Record a verified check."""
        self.entries.append(ReportEntry(suite, check, location, PASS))

    def add_fail(self, suite: str, check: str, location: str, witness: Witness, message: str = '') -> None:
        """Record a failed check with its witness."""
        logger.info('Check %s/%s failed at %s: %s', suite, check, location, message or witness)
        self.entries.append(ReportEntry(suite, check, location, FAIL, witness=witness, message=message))

    def add_error(self, suite: str, check: str, location: str, message: str) -> None:
        """Record a check that could not be carried out."""
        logger.info('Check %s/%s errored at %s: %s', suite, check, location, message)
        self.entries.append(ReportEntry(suite, check, location, ERROR, message=message))

    def add_note(self, note: str) -> None:
        """Record a note once."""
        if note not in self.notes:
            self.notes.append(note)

    def extend(self, other: 'Report') -> None:
        """Append all the entries and notes of another report."""
        self.entries.extend(other.entries)
        for note in other.notes:
            self.add_note(note)

    def compare(self, suite: str, check: str, location: str, lhs: RatMatrix, rhs: RatMatrix) -> bool:
        """Record whether the two sides of an equation are exactly equal.

        Returns:
            bool: :py:data:`True` if the check passed.

        """
        if lhs.shape != rhs.shape:
            self.add_error(suite, check, location, 'Sides of the equation have different shapes {lhs} and {rhs}'.format(
                lhs=format_shape(lhs), rhs=format_shape(rhs)))
            return False

        difference = lhs.first_difference(rhs)
        logger.trace('Compared %s/%s at %s on %s matrices: %s', suite, check, location, format_shape(lhs),
                     'equal' if difference is None else 'differ at {diff}'.format(diff=difference))
        if difference is None:
            self.add_pass(suite, check, location)
            return True

        self.add_fail(suite, check, location, Witness(lhs, rhs, row=difference[0], col=difference[1]))
        return False

    def check(self, suite: str, check: str, location: str, lhs: Callable[[], RatMatrix],
              rhs: Callable[[], RatMatrix]) -> bool:
        """Evaluate the two sides of an equation and compare them, turning library errors into error entries.

        Arguments:
            suite (str): the suite name.
            check (str): the check name.
            location (str): where the check is evaluated.
            lhs (callable): returns the left-hand side.
            rhs (callable): returns the right-hand side.

        Returns:
            bool: :py:data:`True` if the check passed.

        Raises:
            frobcheck.DimensionLimitError: if a side exceeds the dimension cap, it aborts the whole directive.

        """
        try:
            lhs_matrix = lhs()
            rhs_matrix = rhs()
        except DimensionLimitError:
            raise
        except FrobcheckError as e:
            self.add_error(suite, check, location, str(e))
            return False

        return self.compare(suite, check, location, lhs_matrix, rhs_matrix)

    def count(self, status: str) -> int:
        """Number of entries with the given status."""
        return sum(1 for entry in self.entries if entry.status == status)

    @property
    def passed(self) -> bool:
        """Whether every entry passed."""
        return all(entry.status == PASS for entry in self.entries)

    @property
    def exit_code(self) -> int:
        """``0`` when all entries passed, ``1`` on any failure, ``2`` on any error."""
        if self.count(ERROR):
            return 2
        if self.count(FAIL):
            return 1
        return 0

    def summary(self) -> str:
        """One line summary of the counters."""
        return '{total} checks: {passed} passed, {failed} failed, {errors} errors'.format(
            total=len(self.entries), passed=self.count(PASS), failed=self.count(FAIL), errors=self.count(ERROR))


def format_report(report: Report, mode: str = 'text') -> str:
    """Format a report.

    Arguments:
        report (frobcheck.report.Report): the report to format.
        mode (str, optional): ``text`` for an aligned table, ``json`` for a list of entries.

    Returns:
        str: the formatted report, deterministic for the same report.

    Raises:
        frobcheck.FrobcheckError: on an invalid mode.

    """
    if mode == 'json':
        return json.dumps([entry.to_dict() for entry in report.entries], indent=4, sort_keys=True)
    if mode != 'text':
        raise FrobcheckError("Got invalid report mode '{mode}', expected one of {modes}".format(
            mode=mode, modes=REPORT_MODES))

    rows = [('STATUS', 'SUITE', 'CHECK', 'LOCATION', 'DETAILS')]
    for entry in report.entries:
        details = entry.message
        if entry.witness is not None and entry.witness.row is not None:
            details = 'differ at row {row}, col {col}: {lhs} != {rhs}'.format(
                row=entry.witness.row, col=entry.witness.col,
                lhs=format_rational(entry.witness.lhs.entry(entry.witness.row, entry.witness.col)),
                rhs=format_rational(entry.witness.rhs.entry(entry.witness.row, entry.witness.col)))
            if entry.message:
                details = '{message}, {details}'.format(message=entry.message, details=details)
        rows.append((entry.status, entry.suite, entry.check, entry.location, details))

    widths = [max(len(row[column]) for row in rows) for column in range(4)]
    lines = []
    for position, row in enumerate(rows):
        cells = [cell.ljust(width) for cell, width in zip(row[:4], widths)]
        if position:
            cells[0] = Colored.for_status(row[0])(cells[0])
        lines.append('  '.join(cells + [row[4]]).rstrip())

    lines.extend(Colored.note('NOTE: {note}'.format(note=note)) for note in report.notes)
    lines.append(report.summary())

    return '\n'.join(lines)
