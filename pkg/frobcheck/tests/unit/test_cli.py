"""CLI tests."""
import argparse
import json
import os

from logging import DEBUG, INFO
from unittest import mock

import pytest

from frobcheck import cli, FrobcheckError, LOGGING_TRACE_LEVEL_NUMBER
from frobcheck.color import Colored
from frobcheck.tests import get_fixture_path


_SPEC = get_fixture_path(os.path.join('specs', 'tensor_left.spec'))
_EMPTY_CONFIG = get_fixture_path(os.path.join('config', 'empty', 'config.yaml'))
# Command line arguments
_ARGV = ['-c', 'doc/examples/config.yaml', '-d', 'run', '--max-dim', '64', '--fail-fast', _SPEC]


def test_get_parser():
    """Calling get_parser() should return a populated argparse.ArgumentParser object."""
    parser = cli.get_parser()
    assert isinstance(parser, argparse.ArgumentParser)
    assert parser.prog == 'frobcheck'


def test_parse_args_help(capsys):
    """Calling frobcheck with -h/--help should return its help message."""
    with pytest.raises(SystemExit) as e:
        cli.parse_args(['-h'])

    out, _ = capsys.readouterr()
    assert e.value.code == 0
    assert 'Frobcheck CLI - Exact verification of Frobenius monoidal functors' in out


def test_parse_args_ok():
    """A standard set of command line parameters should be properly parsed into their respective variables."""
    args = cli.parse_args(_ARGV)
    assert args.debug
    assert not args.trace
    assert args.config == 'doc/examples/config.yaml'
    assert args.command == 'run'
    assert args.file == _SPEC
    assert args.max_dim == 64
    assert args.fail_fast
    assert args.report is None


def test_parse_args_defaults():
    """Only the spec file should be required."""
    args = cli.parse_args(['run', _SPEC])
    assert args.config == cli.frobcheck.DEFAULT_CONFIG
    assert args.max_dim is None
    assert not args.fail_fast
    assert not args.no_progress


@pytest.mark.parametrize('argv', (
    [],
    ['run'],
    ['run', '--report', 'yaml', _SPEC],
    ['run', '--max-dim', '0', _SPEC],
))
def test_parse_args_invalid(argv):
    """Invalid command line arguments should make the parser exit."""
    with pytest.raises(SystemExit):
        cli.parse_args(argv)


def test_parse_args_no_colors():
    """If -n/--no-colors is specified, the colors should be globally disabled."""
    assert not Colored.disabled
    cli.parse_args(['-n'] + _ARGV)
    assert Colored.disabled
    Colored.disabled = False  # Reset it


def test_positive_int():
    """Calling positive_int() should properly parse positive integer values."""
    assert cli.positive_int('1') == 1
    assert cli.positive_int('256') == 256


@pytest.mark.parametrize('value, message', (
    ('0', 'is not a valid value'),
    ('-1', 'is not a valid value'),
    ('one', 'is not a valid integer'),
))
def test_positive_int_ko(value, message):
    """Calling positive_int() with invalid value should raise argparse.ArgumentTypeError."""
    with pytest.raises(argparse.ArgumentTypeError, match=message):
        cli.positive_int(value)


@mock.patch('frobcheck.cli.os.path.exists')
@mock.patch('frobcheck.cli.os.makedirs')
@mock.patch('frobcheck.cli.RotatingFileHandler')
@mock.patch('frobcheck.cli.logging.getLogger')
def test_setup_logging(mocked_get_logger, mocked_file_handler, mocked_os_makedirs, mocked_os_path_exists):
    """Calling setup_logging() should properly setup the logger."""
    mocked_os_path_exists.return_value = False
    cli.setup_logging('/path/to/frobcheck.log')
    assert mock.call().setLevel(INFO) in mocked_get_logger.mock_calls
    assert mocked_file_handler.called
    assert mocked_os_makedirs.called
    assert mocked_os_path_exists.called

    mocked_file_handler.reset_mock()
    mocked_os_makedirs.reset_mock()
    mocked_os_path_exists.reset_mock()

    mocked_os_path_exists.side_effect = FileNotFoundError
    cli.setup_logging('frobcheck.log')
    assert mocked_file_handler.called
    assert not mocked_os_makedirs.called
    assert not mocked_os_path_exists.called

    mocked_file_handler.reset_mock()
    cli.setup_logging(None, debug=True)
    assert mock.call().setLevel(DEBUG) in mocked_get_logger.mock_calls
    assert not mocked_file_handler.called

    cli.setup_logging(None, debug=True, trace=True)
    assert mock.call().setLevel(LOGGING_TRACE_LEVEL_NUMBER) in mocked_get_logger.mock_calls


@mock.patch('frobcheck.cli.logger')
def test_sigint_handler(logger):
    """Calling the SIGINT handler should raise KeyboardInterruptError."""
    with pytest.raises(cli.KeyboardInterruptError):
        cli.sigint_handler(1, None)
    assert logger.warning.called


@mock.patch('frobcheck.cli.tqdm')
def test_stderr(tqdm):
    """Calling stderr() should call tqdm.write()."""
    cli.stderr('message')
    assert tqdm.write.called


def test_run_ok(capsys):
    """Calling run() should print the report and return the exit code of the report."""
    args = cli.parse_args(['-n', 'run', _SPEC])
    assert cli.run(args, {'progress': False}) == 0
    Colored.disabled = False
    out, err = capsys.readouterr()
    assert out.splitlines()[0].split() == ['STATUS', 'SUITE', 'CHECK', 'LOCATION', 'DETAILS']
    assert '0 failed, 0 errors' in err


def test_run_json_from_config(capsys):
    """The report format should be taken from the configuration if not given on the command line."""
    args = cli.parse_args(['run', '--no-progress', get_fixture_path(os.path.join('negative', 'scaled_unit.spec'))])
    assert cli.run(args, {'report': 'json'}) == 1
    out, _ = capsys.readouterr()
    entries = json.loads(out)
    assert any(entry['check'] == 'left unit' and entry['status'] == 'fail' for entry in entries)


def test_run_report_overrides_config(capsys):
    """The report format of the command line should take precedence over the configuration."""
    args = cli.parse_args(['run', '--report', 'json', '--no-progress', _SPEC])
    assert cli.run(args, {'report': 'text'}) == 0
    out, _ = capsys.readouterr()
    assert isinstance(json.loads(out), list)


def test_run_invalid_report_mode():
    """An invalid report mode in the configuration should raise FrobcheckError."""
    args = cli.parse_args(['run', '--no-progress', _SPEC])
    with pytest.raises(FrobcheckError, match="Got invalid report mode 'yaml'"):
        cli.run(args, {'report': 'yaml'})


def test_run_max_dim(capsys):
    """The dimension cap from the command line should turn oversized directives into errors."""
    args = cli.parse_args(['run', '--no-progress', '--report', 'json', '--max-dim', '4', _SPEC])
    assert cli.run(args, {'max_dim': 1024}) == 2
    out, _ = capsys.readouterr()
    assert {entry['check'] for entry in json.loads(out)} == {'dimension limit'}


def test_run_syntax_error(tmp_path, capsys):
    """A malformed spec should be reported with its position and exit with 2."""
    spec_file = tmp_path / 'broken.spec'
    spec_file.write_text('frobalg R = zmod(x)\n', encoding='utf8')
    args = cli.parse_args(['run', str(spec_file)])
    assert cli.run(args, {}) == 2
    out, err = capsys.readouterr()
    assert not out
    assert "{file}:1:18: Expected a non-negative integer, got 'x'".format(file=spec_file) in err


@pytest.mark.parametrize('name, exit_code', (
    ('tensor_left.spec', 0),
    ('convolution.spec', 0),
))
def test_main_ok(name, exit_code):
    """Calling main() on a valid spec should return the exit code of its report."""
    spec_file = get_fixture_path(os.path.join('specs', name))
    assert cli.main(['-c', _EMPTY_CONFIG, 'run', '--no-progress', spec_file]) == exit_code


@pytest.mark.parametrize('name, exit_code', (
    ('zeroed_component.spec', 1),
    ('not_homomorphism.spec', 2),
))
def test_main_negative(name, exit_code):
    """Calling main() on a negative control should return the exit code of its failures."""
    spec_file = get_fixture_path(os.path.join('negative', name))
    assert cli.main(['-c', _EMPTY_CONFIG, 'run', '--no-progress', spec_file]) == exit_code


def test_main_missing_spec(capsys):
    """A missing spec file should be reported and exit with 2."""
    assert cli.main(['-c', _EMPTY_CONFIG, 'run', '/nonexistent/frobcheck.spec']) == 2
    _, err = capsys.readouterr()
    assert 'Unable to read spec file' in err


def test_main_invalid_config(capsys):
    """An invalid configuration should be reported and exit with 2."""
    config = get_fixture_path(os.path.join('config', 'invalid', 'config.yaml'))
    assert cli.main(['-c', config, 'run', _SPEC]) == 2
    _, err = capsys.readouterr()
    assert 'Unable to parse configuration file' in err


@mock.patch('frobcheck.cli.setup_logging')
def test_main_setup_unexpected(mocked_setup_logging):
    """An unexpected exception during the setup should exit with 99."""
    mocked_setup_logging.side_effect = RuntimeError('unexpected')
    assert cli.main(['-c', _EMPTY_CONFIG, 'run', _SPEC]) == 99


@pytest.mark.parametrize('exception, exit_code', (
    (cli.KeyboardInterruptError, 98),
    (FrobcheckError('error'), 2),
    (RuntimeError('unexpected'), 99),
))
@mock.patch('frobcheck.cli.run')
def test_main_execution_errors(mocked_run, exception, exit_code):
    """Exceptions raised during the execution should be mapped to their exit codes."""
    mocked_run.side_effect = exception
    assert cli.main(['-c', _EMPTY_CONFIG, 'run', _SPEC]) == exit_code
