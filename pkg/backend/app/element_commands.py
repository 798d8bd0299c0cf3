"""Element commands: act, section, equal, identity, order, ep-act, shift-eq, level, orbits."""

import argparse
import logging

from common.element_algebra import (
    GroupElement,
    act,
    act_ep,
    equal,
    format_element,
    format_ep,
    format_word,
    is_identity,
    level_permutation,
    orbit_sizes,
    order_status,
    parse_ep,
    parse_word,
    reduce_word,
    section,
    shift_equivalent,
)

from .context import CommandContext, CommandResult

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    p = subparsers.add_parser('act', parents=[common], help='image of a finite word')
    p.add_argument('--g', required=True, help='element expression')
    p.add_argument('--word', required=True, help='finite word, e.g. 010')
    p.set_defaults(handler=act_command)

    p = subparsers.add_parser('section', parents=[common], help='section g|v')
    p.add_argument('--g', required=True)
    p.add_argument('--word', required=True)
    p.set_defaults(handler=section_command)

    p = subparsers.add_parser('equal', parents=[common], help='decide g = h')
    p.add_argument('--lhs', required=True)
    p.add_argument('--rhs', required=True)
    p.set_defaults(handler=equal_command)

    p = subparsers.add_parser('identity', parents=[common], help='decide g = 1')
    p.add_argument('--g', required=True)
    p.set_defaults(handler=identity_command)

    p = subparsers.add_parser('order', parents=[common], help='order semi-decision')
    p.add_argument('--g', required=True)
    p.set_defaults(handler=order_command)

    p = subparsers.add_parser('ep-act', parents=[common], help='image of an eventually periodic word')
    p.add_argument('--g', required=True)
    p.add_argument('--word', required=True, help='u(w)^inf')
    p.set_defaults(handler=ep_act_command)

    p = subparsers.add_parser('shift-eq', parents=[common], help='shift equivalence of two EP words')
    p.add_argument('--x', required=True)
    p.add_argument('--y', required=True)
    p.add_argument('--g', help='compare g(x) with y instead of x with y')
    p.set_defaults(handler=shift_eq_command)

    p = subparsers.add_parser('level', parents=[common], help='level permutation order and cycle type')
    p.add_argument('--g', required=True)
    p.add_argument('--depth', type=int, required=True)
    p.set_defaults(handler=level_command)

    p = subparsers.add_parser('orbits', parents=[common], help='orbit sizes on one level')
    p.add_argument('--g', required=True)
    p.add_argument('--depth', type=int, required=True)
    p.set_defaults(handler=orbits_command)


def _reduced(g: GroupElement) -> str:
    return format_element(GroupElement(g.automaton, reduce_word(g.automaton, g.word)))


def act_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    g = ctx.element(args.g)
    k = g.automaton.alphabet_size
    u = parse_word(args.word, k)
    image = format_word(act(g, u), k)
    return CommandResult({'g': format_element(g), 'word': format_word(u, k), 'image': image}, image)


def section_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    g = ctx.element(args.g)
    k = g.automaton.alphabet_size
    v = parse_word(args.word, k)
    rest = section(g, v)
    payload = {
        'g': format_element(g),
        'word': format_word(v, k),
        'section': format_element(rest),
        'reduced': _reduced(rest),
    }
    return CommandResult(payload, payload['section'])


def equal_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    lhs = ctx.element(args.lhs)
    rhs = ctx.element(args.rhs)
    result = equal(lhs, rhs, ctx.budgets.closure_cap)
    payload = {'lhs': format_element(lhs), 'rhs': format_element(rhs), 'equal': result}
    return CommandResult(payload, str(result).lower())


def identity_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    g = ctx.element(args.g)
    result = is_identity(g, ctx.budgets.closure_cap)
    return CommandResult({'g': format_element(g), 'identity': result}, str(result).lower())


def order_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    g = ctx.element(args.g)
    status = order_status(g, ctx.budgets)
    payload = {'g': format_element(g), **status.to_dict()}
    text = f"{status}\nord_sequence: {', '.join(str(o) for o in status.ord_sequence)}"
    return CommandResult(payload, text)


def ep_act_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    g = ctx.element(args.g)
    k = g.automaton.alphabet_size
    x = parse_ep(args.word, k)
    image = format_ep(act_ep(g, x), k)
    return CommandResult({'g': format_element(g), 'word': format_ep(x, k), 'image': image}, image)


def shift_eq_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    k = ctx.automaton.alphabet_size
    x = parse_ep(args.x, k)
    y = parse_ep(args.y, k)
    payload = {'x': format_ep(x, k), 'y': format_ep(y, k)}
    if args.g:
        g = ctx.element(args.g)
        x = act_ep(g, x)
        payload.update({'g': format_element(g), 'image': format_ep(x, k)})
    result = shift_equivalent(x, y)
    payload['shift_equivalent'] = result
    return CommandResult(payload, str(result).lower())


def level_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    g = ctx.element(args.g)
    level = level_permutation(g, args.depth, ctx.budgets.level_word_budget)
    cycle_type = level.cycle_type()
    payload = {
        'g': format_element(g),
        'depth': args.depth,
        'order': level.order(),
        'cycle_type': {str(length): count for length, count in cycle_type.items()},
    }
    cycles = " ".join(f"{length}^{count}" for length, count in cycle_type.items())
    return CommandResult(payload, f"order {payload['order']}, cycle type {cycles}")


def orbits_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    g = ctx.element(args.g)
    sizes = orbit_sizes(g, args.depth)
    payload = {'g': format_element(g), 'depth': args.depth, 'orbit_sizes': sizes, 'largest': max(sizes)}
    return CommandResult(payload, " ".join(str(s) for s in sizes))
