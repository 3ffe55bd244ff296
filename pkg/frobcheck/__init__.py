"""Exact verification engine for Frobenius monoidal functors and their constructions."""
import logging
import os

from importlib.metadata import PackageNotFoundError, version

import yaml


DEFAULT_CONFIG = '/etc/frobcheck/config.yaml'
""":py:class:`str`: the default configuration file path."""
try:
    __version__ = version(__name__)
    """:py:class:`str`: the version of the current frobcheck module."""
except PackageNotFoundError:  # pragma: no cover - this happens only if the package is not installed
    # Support the use case of the Debian building system where tests are run without installation
    if 'SETUPTOOLS_SCM_PRETEND_VERSION' in os.environ:
        __version__ = os.environ['SETUPTOOLS_SCM_PRETEND_VERSION']


class FrobcheckError(Exception):
    """Base Exception class for all frobcheck's custom Exceptions."""


class ShapeError(FrobcheckError):
    """Raised when the shapes of morphisms or objects do not fit together."""


class CoverageError(FrobcheckError):
    """Raised when an object grid does not cover the objects required by an operation."""


class UnsupportedStructureError(FrobcheckError):
    """Raised when a category instance lacks the structure an operation needs (e.g. a braiding)."""


class FixtureError(FrobcheckError):
    """Raised when a generated fixture fails its own axiom checker."""


class DimensionLimitError(FrobcheckError):
    """Raised when a matrix larger than the configured dimension cap would be materialized."""


##############################################################################
# Add a custom log level TRACE to logging for development debugging

LOGGING_TRACE_LEVEL_NUMBER = 8
LOGGING_TRACE_LEVEL_NAME = 'TRACE'


# Fail if the custom logging slot is already in use with a different name or
# Access to a private property of logging was preferred over matching the default string returned by
# logging.getLevelName() for unused custom slots.
if (LOGGING_TRACE_LEVEL_NUMBER in logging._levelToName  # pylint: disable=protected-access
        and LOGGING_TRACE_LEVEL_NAME not in logging._nameToLevel):  # pylint: disable=protected-access
    raise FrobcheckError(
        "Unable to set custom logging for trace, logging level {level} is already set for '{name}'.".format(
            level=LOGGING_TRACE_LEVEL_NUMBER, name=logging.getLevelName(LOGGING_TRACE_LEVEL_NUMBER)))


def trace(self, msg, *args, **kwargs):
    """Additional logging level for development debugging, used to log every single compared equation.

    :Parameters:
        according to :py:class:`logging.Logger` interface for log levels.

    """
    if self.isEnabledFor(LOGGING_TRACE_LEVEL_NUMBER):
        self._log(LOGGING_TRACE_LEVEL_NUMBER, msg, args, **kwargs)  # pragma: no cover, pylint: disable=protected-access


# Install the trace method and it's logging level if not already present
if LOGGING_TRACE_LEVEL_NAME not in logging._nameToLevel:  # pylint: disable=protected-access
    logging.addLevelName(LOGGING_TRACE_LEVEL_NUMBER, LOGGING_TRACE_LEVEL_NAME)
if not hasattr(logging.Logger, 'trace'):
    logging.Logger.trace = trace  # type: ignore
##############################################################################


class Config(dict):
    """Singleton-like dictionary class to load the configuration from a given path only once."""

    _instances: dict = {}  # Keep track of different loaded configurations

    def __new__(cls, config=DEFAULT_CONFIG):
        """Load the given configuration if not already loaded and return it.

        Called by Python's data model for each new instantiation of the class. The default configuration file is
        optional: if it doesn't exist an empty configuration is returned. Any other path must exist.

        Arguments:
            config (str, optional): path to the configuration file to load.

        Returns:
            dict: the configuration dictionary.

        Examples:
            >>> import frobcheck
            >>> config = frobcheck.Config()

        """
        if config not in cls._instances:
            if config == DEFAULT_CONFIG and not os.path.isfile(config):
                cls._instances[config] = {}
            else:
                cls._instances[config] = parse_config(config)

        return cls._instances[config]


def parse_config(config_file):
    """Parse the YAML configuration file.

    Arguments:
        config_file (str): the path of the configuration file to load.

    Returns:
        dict: the configuration dictionary.

    Raises:
        FrobcheckError: if unable to read or parse the configuration.

    """
    try:
        with open(os.path.expanduser(config_file), 'r', encoding='utf8') as f:
            config = yaml.safe_load(f)
    except IOError as e:
        raise FrobcheckError('Unable to read configuration file: {message}'.format(message=e)) from e
    except yaml.YAMLError as e:
        raise FrobcheckError("Unable to parse configuration file '{config}':\n{message}".format(
            config=config_file, message=e)) from e

    if config is None:
        config = {}

    if not isinstance(config, dict):
        raise FrobcheckError("Unable to parse configuration file '{config}': expected a mapping, got {type}".format(
            config=config_file, type=type(config).__name__))

    return config


def get_max_dim(config, override=None):
    """Resolve the cap on the dimension of every materialized matrix.

    The precedence is: explicit override (the ``--max-dim`` CLI option), the ``FROBCHECK_MAX_DIM`` environment variable,
    the ``max_dim`` configuration key.

    Arguments:
        config (dict): the loaded configuration.
        override (int, optional): a value that takes precedence over everything else.

    Returns:
        int: the cap, or :py:data:`None` if unlimited.

    Raises:
        FrobcheckError: if the environment variable or the configuration holds an invalid value.

    """
    if override is not None:
        return override

    for source, value in (('FROBCHECK_MAX_DIM', os.getenv('FROBCHECK_MAX_DIM')), ('max_dim', config.get('max_dim'))):
        if value is None or value == '':
            continue
        try:
            max_dim = int(value)
        except (TypeError, ValueError) as e:
            raise FrobcheckError("Invalid value '{value}' for {source}, expected a positive integer".format(
                value=value, source=source)) from e
        if max_dim <= 0:
            raise FrobcheckError("Invalid value '{value}' for {source}, expected a positive integer".format(
                value=value, source=source))
        return max_dim

    return None
