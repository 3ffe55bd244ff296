"""Abstract directive."""
import logging

from abc import ABCMeta, abstractmethod
from typing import Dict, Tuple

from frobcheck import FrobcheckError
from frobcheck.convolution import BaseFunctor
from frobcheck.functor import FrobFunctorData, ObjectGrid
from frobcheck.monoidal import CategoryInstance
from frobcheck.report import Report


class DirectiveError(FrobcheckError):
    """Custom exception class for directives that cannot be executed."""


def as_functor_data(value) -> FrobFunctorData:
    """Functor data of a bound functor, representations of a group are viewed as functors on ``Σ G``."""
    if isinstance(value, BaseFunctor):
        return value.as_functor()
    return value


class BaseDirective(metaclass=ABCMeta):
    """Directive abstract class.

    All directive classes must inherit, directly or indirectly, from this one.
    """

    signatures: Dict[str, Tuple[str, ...]] = {}
    """:py:class:`dict`: the ``{verb: kinds}`` mapping with the kind of each positional argument, derived classes must
    define one entry for each verb they implement. Kinds are the declaration kinds plus ``representation``, a functor
    declared with ``regular``."""

    mirrorable: Tuple[str, ...] = ()
    """:py:class:`tuple`: the verbs that accept the ``mirrored`` option."""

    def __init__(self, model, directive, config=None):
        """Directive constructor.

        Arguments:
            model (frobcheck.spec.SpecModel): the parsed spec with its bindings.
            directive (frobcheck.spec.Directive): the directive to execute.
            config (dict, optional): a dictionary with the parsed configuration file.

        """
        self.model = model
        self.directive = directive
        self.config = config or {}
        self.logger = logging.getLogger('.'.join((self.__module__, self.__class__.__name__)))
        self.logger.trace('Directive %s created for line %d', directive.verb, directive.line)

    @property
    def verb(self) -> str:
        """The verb of the directive."""
        return self.directive.verb

    def arg(self, position: int):
        """The value bound to the positional argument."""
        name = self.directive.args[position]
        try:
            return self.model.bindings[name]
        except KeyError as e:
            raise DirectiveError("Name '{name}' is not bound".format(name=name)) from e

    def functor(self, position: int) -> FrobFunctorData:
        """The positional argument as functor data."""
        return as_functor_data(self.arg(position))

    def grid(self, category: CategoryInstance, objects=None) -> ObjectGrid:
        """The object grid of the directive.

        Arguments:
            category (frobcheck.monoidal.CategoryInstance): the source category.
            objects (list, optional): the objects to use when the directive has no ``grid`` option.

        """
        if self.directive.grid is None and objects is not None:
            return ObjectGrid(category, objects)
        return ObjectGrid.for_category(category, self.directive.grid)

    def execute(self) -> Report:
        """Execute the directive and return its report.

        Returns:
            frobcheck.report.Report: the report with the entries of the directive.

        """
        self.logger.debug('Executing %s %s at line %d', self.verb, ' '.join(self.directive.args), self.directive.line)
        report = self._execute()
        self.logger.debug('Directive %s at line %d: %s', self.verb, self.directive.line, report.summary())
        return report

    @abstractmethod
    def _execute(self) -> Report:
        """Execute the already validated directive.

        Returns:
            frobcheck.report.Report: the report with the entries of the directive.

        """
