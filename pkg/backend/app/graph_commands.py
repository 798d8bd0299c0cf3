"""Self-similarity graph commands: ball, divergence."""

import argparse
import logging

from common.element_algebra import parse_word
from common.selfsim_graph import (
    build_ball,
    degree_bound,
    divergence_experiment,
    divergence_table,
    render_ball_dot,
)
from utils.event_logger import EventLogger

from .context import CommandContext, CommandResult

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    p = subparsers.add_parser('ball', parents=[common], help='ball of the self-similarity graph')
    p.add_argument('--depth', type=int, required=True)
    p.set_defaults(handler=ball_command)

    p = subparsers.add_parser('divergence', parents=[common], help='corridor vs outside-ball distance')
    p.add_argument('--g', required=True)
    p.add_argument('--v', required=True, help='word fixed by g with g|v = g')
    p.add_argument('--w', help='base word moved by g^n (default: shortest displaced word)')
    p.add_argument('--n', type=int, default=1)
    p.add_argument('--k-max', type=int, default=4, dest='k_max')
    p.add_argument('--depth', type=int, help='ball depth (default: k_max*|v| + |w|)')
    p.set_defaults(handler=divergence_command)


def ball_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    ball = build_ball(ctx.automaton, args.depth, ctx.budgets.ball_vertex_budget)
    payload = {
        'automaton': ctx.automaton.name,
        'depth': args.depth,
        'vertices': ball.vertex_count,
        'horizontal_edges': len(ball.horizontal_edges()),
        'vertical_edges': len(ball.vertical_edges()),
        'max_degree': ball.max_degree(),
        'degree_bound': degree_bound(ctx.automaton),
    }
    text = (
        f"ball of depth {args.depth}: {payload['vertices']} vertices, "
        f"{payload['horizontal_edges']} horizontal and {payload['vertical_edges']} vertical edges, "
        f"max degree {payload['max_degree']} (bound {payload['degree_bound']})"
    )
    return CommandResult(payload, text, dot=render_ball_dot(ball))


def divergence_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    k = ctx.automaton.alphabet_size
    g = ctx.element(args.g)
    v = parse_word(args.v, k)
    w = parse_word(args.w, k) if args.w is not None else None
    report = divergence_experiment(
        ctx.automaton, g, v, w=w, n=args.n, k_max=args.k_max, ball_depth=args.depth, budgets=ctx.budgets
    )
    EventLogger.log_divergence_run(report.automaton, report.g, report.n, report.corridor_length, report.bounded)
    table = divergence_table(report)
    text = (
        f"g={report.g} v={report.v} w={report.w} n={report.n} ball depth {report.ball_depth}\n"
        f"{table.to_string(index=False)}\n"
        f"bounded: {'yes' if report.bounded else 'no'}"
    )
    return CommandResult(report.to_dict(), text, table=table)
