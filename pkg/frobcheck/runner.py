"""Execution of the directives of a spec."""
import logging

from typing import Dict, Optional

from tqdm import tqdm

from frobcheck import DimensionLimitError, FrobcheckError, linalg
from frobcheck.grammar import get_registered_directives
from frobcheck.report import format_location, Report
from frobcheck.spec import SpecModel


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""
FAIL_FAST_NOTE = 'Execution stopped at the first directive that did not pass, remaining directives were skipped.'
""":py:class:`str`: the note added when ``fail_fast`` stops the run."""


def run_checks(model: SpecModel, config: Optional[Dict] = None, max_dim: Optional[int] = None,
               fail_fast: bool = False, progress: bool = False, registry: Optional[Dict] = None) -> Report:
    """Execute the directives of a spec in order and collect their entries.

    A directive that raises becomes a single ``error`` entry and the run continues, a directive that would materialize
    a matrix larger than ``max_dim`` included.

    Arguments:
        model (frobcheck.spec.SpecModel): the parsed spec.
        config (dict, optional): a dictionary with the parsed configuration file.
        max_dim (int, optional): the cap on every matrix dimension, enforced per directive.
        fail_fast (bool, optional): stop at the first directive that does not pass.
        progress (bool, optional): whether to show a progress bar on stderr.
        registry (dict, optional): the registered directives, the built-in ones plus the ``plugins.directives`` of
            the configuration if not set.

    Returns:
        frobcheck.report.Report: the entries of all the directives, in directive order.

    """
    config = config or {}
    if registry is None:
        registry = get_registered_directives(external=config.get('plugins', {}).get('directives', ()))

    report = Report()
    directives = model.directives
    for directive in tqdm(directives, desc='Directives', unit='directive', disable=not progress, leave=False):
        suite = directive.verb.split()[-1]
        location = format_location('line {line}'.format(line=directive.line), *directive.args)
        try:
            with linalg.dimension_cap(max_dim):
                result = registry[directive.verb].cls(model, directive, config).execute()
        except DimensionLimitError as e:
            logger.info('Directive %s at line %d aborted: %s', directive.verb, directive.line, e)
            result = Report()
            result.add_error(suite, 'dimension limit', location, str(e))
        except FrobcheckError as e:
            logger.info('Directive %s at line %d failed: %s', directive.verb, directive.line, e)
            result = Report()
            result.add_error(suite, 'directive', location, str(e))

        report.extend(result)
        if fail_fast and not result.passed:
            report.add_note(FAIL_FAST_NOTE)
            break

    logger.info('Executed spec: %s', report.summary())
    return report
