"""Catalogue commands: list, verify."""

import argparse
import logging
from typing import List

from common.catalog import SuiteResult
from common.catalog.verification import property_checks
from common.config import DEFAULT_SEED

from .context import EXIT_CHECK_FAILED, EXIT_OK, CommandContext, CommandResult

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    catalogue = subparsers.add_parser('catalogue', help='catalogued automata')
    actions = catalogue.add_subparsers(dest='action', required=True)

    listing = actions.add_parser('list', parents=[common], help='keys, sizes and witnesses')
    listing.set_defaults(handler=list_command)

    verify = actions.add_parser('verify', parents=[common], help='run verification suites')
    verify.add_argument('key', nargs='?', default='all', help="catalogue key or 'all'")
    verify.add_argument(
        '--properties', type=int, default=0,
        help='also run N seeded random property samples per automaton',
    )
    verify.set_defaults(handler=verify_command)


def list_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    rows = []
    for entry in ctx.service.list_entries():
        automaton = entry.automaton
        rows.append({
            'key': entry.key,
            'states': automaton.size,
            'active_states': automaton.active_states(),
            'witness': f"{entry.witness.g}@{entry.witness.v}",
            'checks': len(entry.checks),
        })
    lines = [
        f"{r['key']:>5}  {r['states']} states  active: {','.join(r['active_states']) or '-':<6} "
        f"witness: {r['witness']:<14} checks: {r['checks']}"
        for r in rows
    ]
    payload = {'count': len(rows), 'keys': [r['key'] for r in rows], 'entries': {str(r['key']): r for r in rows}}
    return CommandResult(payload, "\n".join(lines))


def _suite_lines(suite: SuiteResult) -> List[str]:
    lines = [f"{suite.key}: {suite.passed}/{len(suite.results)} checks passed"]
    for failure in suite.failures():
        detail = failure.error or f"got {failure.actual}, expected {failure.expected}"
        lines.append(f"  FAILED {failure.label}: {detail}")
    return lines


def verify_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    keys = ctx.service.keys() if args.key == 'all' else [ctx.service.get(args.key).key]
    seed = ctx.seed if ctx.seed is not None else DEFAULT_SEED

    suites = []
    for key in keys:
        suite = ctx.service.run_suite(key, ctx.budgets)
        if args.properties > 0:
            automaton = ctx.service.get(key).automaton
            suite.results.extend(property_checks(automaton, args.properties, seed, ctx.budgets, key))
        suites.append(suite)

    passed_suites = sum(1 for s in suites if s.ok)
    lines = []
    for suite in suites:
        lines.extend(_suite_lines(suite))
    lines.append(f"{passed_suites}/{len(suites)} suites pass")
    payload = {
        'suites': len(suites),
        'passed_suites': passed_suites,
        'checks': sum(len(s.results) for s in suites),
        'failed_checks': sum(s.failed for s in suites),
        'results': {str(s.key): s.to_dict() for s in suites},
    }
    exit_code = EXIT_OK if passed_suites == len(suites) else EXIT_CHECK_FAILED
    return CommandResult(payload, "\n".join(lines), exit_code=exit_code)
