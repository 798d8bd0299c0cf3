"""
Automata Workbench - Command Line Entry

Builds the argument parser, validates the parsed command, runs the
handler and maps failures to exit codes:

    0  success
    1  check or suite failure, Rejected witness, failed experiment premise
    2  usage error (arguments, validation, bad letters)
    3  unknown catalogue key or missing file
    4  automaton or expression parse failure
    5  budget overrun
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from pydantic import ValidationError

from common.config import Budgets
from common.exceptions import (
    AutomatonParseError,
    BudgetExceededError,
    ExpressionSyntaxError,
    InvalidAutomatonError,
    PremiseError,
    UnknownCatalogueKeyError,
)
from utils.event_logger import configure_event_log
from validators import Command

from . import automaton_commands, catalogue_commands, element_commands, graph_commands, lab_commands
from .context import (
    EXIT_BUDGET,
    EXIT_CHECK_FAILED,
    EXIT_NOT_FOUND,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    CommandContext,
    CommandError,
    render,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s | %(levelname)s | %(name)s | %(message)s'

COMMAND_MODULES = (
    automaton_commands,
    element_commands,
    lab_commands,
    graph_commands,
    catalogue_commands,
)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument('--catalogue', help='catalogue key, e.g. 861')
    source.add_argument('--file', type=Path, help='automaton file')
    common.add_argument('--format', default='text', choices=['text', 'structured', 'json', 'dot', 'csv'])
    common.add_argument('--out', type=Path, help='write output to this path instead of stdout')
    common.add_argument('--seed', type=int, help='seed for random property samples')
    common.add_argument('-v', '--verbose', action='count', default=0)
    common.add_argument('--event-log', type=Path, dest='event_log', help='append JSON events to this file')

    budgets = common.add_argument_group('budgets')
    budgets.add_argument('--max-depth', type=int, dest='max_depth')
    budgets.add_argument('--ord-threshold', type=int, dest='ord_threshold')
    budgets.add_argument('--nucleus-size', type=int, dest='nucleus_size')
    budgets.add_argument('--nucleus-depth', type=int, dest='nucleus_depth')
    budgets.add_argument('--nucleus-work', type=int, dest='nucleus_work')
    budgets.add_argument('--closure-cap', type=int, dest='closure_cap')
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='automata',
        description='Workbench for invertible Mealy automata and the groups they generate.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    common = _common_options()
    for module in COMMAND_MODULES:
        module.register(subparsers, common)
    return parser


def configure_logging(verbose: int) -> None:
    level = logging.DEBUG if verbose > 1 else logging.INFO if verbose == 1 else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def _exit_code_for(error: Exception) -> int:
    if isinstance(error, CommandError):
        return error.exit_code
    if isinstance(error, PremiseError):
        return EXIT_CHECK_FAILED
    if isinstance(error, (UnknownCatalogueKeyError, FileNotFoundError)):
        return EXIT_NOT_FOUND
    if isinstance(error, (AutomatonParseError, ExpressionSyntaxError, InvalidAutomatonError)):
        return EXIT_PARSE
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, (ValidationError, ValueError)):
        return EXIT_USAGE
    raise error


def _emit(text: str, out: Optional[Path], stdout: TextIO) -> None:
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text + "\n", encoding='utf-8')
    else:
        stdout.write(text + "\n")


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Parse argv, run the command and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        command = Command(**vars(args))
        configure_logging(command.verbose)
        if command.event_log is not None:
            configure_event_log(str(command.event_log))
        budgets = Budgets.from_env(**command.budget_overrides)
        ctx = CommandContext(command=command, budgets=budgets)
        result = args.handler(args, ctx)
        _emit(render(result, command.format, command.command), command.out, stdout)
        return result.exit_code
    except Exception as e:
        code = _exit_code_for(e)
        logger.debug(f"[CLI] {type(e).__name__}: {e}")
        stderr.write(f"error: {e}\n")
        return code


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
