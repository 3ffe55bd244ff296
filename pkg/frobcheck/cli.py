#!/usr/bin/python3
"""Frobcheck CLI entry point."""
import argparse
import logging
import os
import signal
import sys

from logging.handlers import RotatingFileHandler

from tqdm import tqdm

import frobcheck

from frobcheck.color import Colored
from frobcheck.grammar import get_registered_directives
from frobcheck.report import format_report, REPORT_MODES
from frobcheck.runner import run_checks
from frobcheck.spec import parse_spec_file, SpecSyntaxError


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""


class KeyboardInterruptError(frobcheck.FrobcheckError):
    """Custom KeyboardInterrupt exception class for the SIGINT signal handler."""


def positive_int(string):
    """Validator for the --max-dim command line argument to be used as type in ArgumentParser.

    Arguments:
        string: the input string to be validated and parsed.

    Returns:
        int: the parsed value.

    """
    try:
        value = int(string)
    except ValueError as e:
        raise argparse.ArgumentTypeError('{value} is not a valid integer'.format(value=string)) from e

    if value <= 0:
        raise argparse.ArgumentTypeError('{value} is not a valid value, expected positive integer'.format(value=string))

    return value


def get_parser():
    """Create and return the command line arguments parser.

    Returns:
        argparse.ArgumentParser: the parser object.

    """
    parser = argparse.ArgumentParser(
        prog='frobcheck',
        description='Frobcheck CLI - Exact verification of Frobenius monoidal functors and their constructions',
        epilog='Exit codes: 0 all checks passed, 1 some check failed, 2 some check errored or the spec is invalid.')
    parser.add_argument('-c', '--config', default=frobcheck.DEFAULT_CONFIG,
                        help='configuration file. [default: {config}]'.format(config=frobcheck.DEFAULT_CONFIG))
    parser.add_argument('-n', '--no-colors', action='store_true', help='Disable colored output. [default: False]')
    parser.add_argument('--no-progress', action='store_true', help='Do not show the progress bar during execution.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {version}'.format(version=getattr(frobcheck, '__version__', 'unknown')))
    parser.add_argument('-d', '--debug', action='store_true',
                        help='Set log level to DEBUG. See also log_file in the configuration. [default: False]')
    parser.add_argument('--trace', action='store_true',
                        help=('Set log level to TRACE, a custom logging level that logs every compared equation. See '
                              'also log_file in the configuration. [default: False]'))

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    run_parser = subparsers.add_parser('run', help='Parse a spec file and run its directives.')
    run_parser.add_argument('file', metavar='FILE', help='The spec file to run.')
    run_parser.add_argument('--report', choices=REPORT_MODES,
                            help='Report format, overrides the report key of the configuration. [default: text]')
    run_parser.add_argument('--max-dim', type=positive_int,
                            help=('Refuse to materialize matrices with more rows or columns than this, overrides the '
                                  'FROBCHECK_MAX_DIM environment variable and the max_dim key of the configuration. '
                                  '[default: None (unlimited)]'))
    run_parser.add_argument('--fail-fast', action='store_true',
                            help='Stop at the first directive that does not pass. [default: False]')

    return parser


def parse_args(argv):
    """Parse command line arguments, validate and return them.

    Arguments:
        argv: the list of command line arguments to use.

    Returns:
        argparse.Namespace: the parsed arguments.

    """
    parser = get_parser()
    parsed_args = parser.parse_args(argv)
    if parsed_args.no_colors:
        Colored.disabled = True

    return parsed_args


def setup_logging(filename=None, debug=False, trace=False):
    """Setup the logger instance.

    Arguments:
        filename: the filename of the log file, no file handler is added if not set [optional, default: None]
        debug: whether to set logging level to DEBUG [optional, default: False]
        trace: whether to set logging level to TRACE [optional, default: False]

    """
    root_logger = logging.getLogger()
    root_logger.raiseExceptions = False

    if filename:
        file_path = os.path.dirname(filename)
        if file_path and not os.path.exists(file_path):
            os.makedirs(file_path, 0o770)

        log_formatter = logging.Formatter(
            fmt='%(asctime)s [%(levelname)s %(process)s %(name)s.%(funcName)s] %(message)s')
        log_handler = RotatingFileHandler(filename, maxBytes=(5 * (1024**2)), backupCount=30)
        log_handler.setFormatter(log_formatter)
        root_logger.addHandler(log_handler)

    if trace:
        root_logger.setLevel(frobcheck.LOGGING_TRACE_LEVEL_NUMBER)
    elif debug:
        root_logger.setLevel(logging.DEBUG)
    else:
        root_logger.setLevel(logging.INFO)


def sigint_handler(*args):  # pylint: disable=unused-argument
    """Signal handler for Ctrl+c / SIGINT, raises KeyboardInterruptError.

    Arguments (as defined in https://docs.python.org/3/library/signal.html):
        signum: the signal number
        frame: the current stack frame
    """
    logger.warning('Execution interrupted by Ctrl+c/SIGINT')
    raise KeyboardInterruptError


def stderr(message, end='\n'):
    r"""Print a diagnostic message to stderr and flush.

    Arguments:
        message: the message to print to sys.stderr
        end: the character to use at the end of the message. [optional, default: \n]

    """
    tqdm.write(Colored.diagnostic(message), file=sys.stderr, end=end)


def run(args, config):
    """Parse the spec file, run its directives and print the report.

    Arguments:
        args: ArgumentParser instance with parsed command line arguments
        config: a dictionary with the parsed configuration file

    Returns:
        int: the exit code of the report, ``2`` if the spec is not valid.

    """
    registry = get_registered_directives(external=config.get('plugins', {}).get('directives', ()))
    try:
        model = parse_spec_file(args.file, registry=registry)
    except SpecSyntaxError as e:
        stderr('{file}:{line}:{col}: {message}'.format(file=args.file, line=e.line, col=e.col, message=e.message))
        return 2

    mode = args.report if args.report is not None else config.get('report', 'text')
    if mode not in REPORT_MODES:
        raise frobcheck.FrobcheckError("Got invalid report mode '{mode}', expected one of {modes}".format(
            mode=mode, modes=REPORT_MODES))

    max_dim = frobcheck.get_max_dim(config, args.max_dim)
    progress = not args.no_progress and config.get('progress', True)
    logger.debug('Running %d directives of %s with max_dim=%s', len(model.directives), args.file, max_dim)

    report = run_checks(model, config=config, max_dim=max_dim, fail_fast=args.fail_fast, progress=progress,
                        registry=registry)
    tqdm.write(format_report(report, mode))
    stderr(report.summary())

    return report.exit_code


def main(argv=None):
    """CLI entry point. Run the directives of a spec file according to arguments.

    Arguments:
        argv: the list of command line arguments to use. If not specified it will be automatically taken from sys.argv
            [optional, default: None]

    """
    if argv is None:
        argv = sys.argv[1:]

    signal.signal(signal.SIGINT, sigint_handler)

    # Setup
    try:
        args = parse_args(argv)
        config = frobcheck.Config(args.config)
        log_file = config.get('log_file')
        setup_logging(os.path.expanduser(log_file) if log_file else None, debug=args.debug, trace=args.trace)
    except frobcheck.FrobcheckError as e:
        stderr(e)
        return 2
    except Exception as e:  # pylint: disable=broad-except
        stderr('Caught {name} exception: {msg}'.format(name=e.__class__.__name__, msg=e))
        return 99

    logger.info('Frobcheck called with args: %s', args)

    # Execution
    try:
        exit_code = run(args, config)
    except KeyboardInterruptError:
        stderr('Execution interrupted by Ctrl+c/SIGINT/Aborted')
        exit_code = 98
    except frobcheck.FrobcheckError as e:
        stderr(e)
        logger.error('Failed to execute: %s', e)
        exit_code = 2
    except Exception as e:  # pylint: disable=broad-except
        stderr('Caught {name} exception: {msg}'.format(name=e.__class__.__name__, msg=e))
        logger.exception('Failed to execute')
        exit_code = 99

    return exit_code


if __name__ == '__main__':
    sys.exit(main())
