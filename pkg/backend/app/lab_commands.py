"""Contraction lab commands: witness check, witness search, nucleus."""

import argparse
import logging

from common.contraction_lab import Verdict, check_witness, nucleus, search_witness
from common.element_algebra import format_element, format_word, parse_word
from utils.event_logger import EventLogger

from .context import EXIT_CHECK_FAILED, EXIT_OK, CommandContext, CommandResult, CommandError

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    witness = subparsers.add_parser('witness', help='non-contraction witnesses')
    actions = witness.add_subparsers(dest='action', required=True)

    check = actions.add_parser('check', parents=[common], help='check one (g, v) pair')
    check.add_argument('--g', help='element expression (default: the catalogue witness)')
    check.add_argument('--v', help='fixed word (default: the catalogue witness)')
    check.set_defaults(handler=witness_check_command)

    search = actions.add_parser('search', parents=[common], help='enumerate (g, v) pairs')
    search.add_argument('-L', '--max-word-len', type=int, default=1, dest='max_word_len')
    search.add_argument('-M', '--max-v-len', type=int, default=3, dest='max_v_len')
    search.set_defaults(handler=witness_search_command)

    p = subparsers.add_parser('nucleus', parents=[common], help='nucleus semi-algorithm')
    p.set_defaults(handler=nucleus_command)


def _witness_operands(args: argparse.Namespace, ctx: CommandContext):
    g_text, v_text = args.g, args.v
    if g_text is None or v_text is None:
        if ctx.command.catalogue is None:
            raise CommandError("--g and --v are required outside the catalogue")
        witness = ctx.service.get(ctx.command.catalogue).witness
        g_text = g_text if g_text is not None else witness.g
        v_text = v_text if v_text is not None else witness.v
    return ctx.element(g_text), parse_word(v_text, ctx.automaton.alphabet_size)


def witness_check_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    g, v = _witness_operands(args, ctx)
    report = check_witness(ctx.automaton, g, v, ctx.budgets)
    EventLogger.log_witness_checked(
        report.automaton, format_element(g), format_word(v), report.verdict.value, str(report.order)
    )
    lines = [
        f"g = {format_element(g)}, v = {format_word(v)}",
        f"g(v) = v: {'yes' if report.fixes_v else 'no'}",
        f"g|v = g: {'yes' if report.section_is_self else 'no'}",
        f"order: {report.order}",
        f"verdict: {report.verdict.value}",
    ]
    lines.extend(f"note: {note}" for note in report.notes)
    exit_code = EXIT_CHECK_FAILED if report.verdict == Verdict.REJECTED else EXIT_OK
    return CommandResult(report.to_dict(), "\n".join(lines), exit_code=exit_code)


def witness_search_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    reports = search_witness(ctx.automaton, args.max_word_len, args.max_v_len, ctx.budgets)
    EventLogger.log_witness_search(ctx.automaton.name, args.max_word_len, args.max_v_len, len(reports))
    k = ctx.automaton.alphabet_size
    payload = {
        'automaton': ctx.automaton.name,
        'max_word_len': args.max_word_len,
        'max_v_len': args.max_v_len,
        'hits': [f"{format_element(r.g)}@{format_word(r.v, k)}" for r in reports],
        'verdicts': [r.verdict.value for r in reports],
        'count': len(reports),
    }
    lines = [f"{len(reports)} hits"]
    lines.extend(
        f"{format_element(r.g):<16} v={format_word(r.v, k):<8} {r.verdict.value:<15} {r.order}"
        for r in reports
    )
    return CommandResult(payload, "\n".join(lines))


def nucleus_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    report = nucleus(ctx.automaton, ctx.budgets)
    EventLogger.log_nucleus_run(report.automaton, report.status.value, report.size, report.rounds, report.note)
    payload = report.to_dict()
    lines = [f"{report.status.value}: {report.size} elements after {report.rounds} rounds"]
    if report.stabilized:
        lines.append(f"minimal nucleus ({len(payload['minimal_nucleus'])}): {', '.join(payload['minimal_nucleus'])}")
    if report.note:
        lines.append(f"note: {report.note}")
    return CommandResult(payload, "\n".join(lines))
