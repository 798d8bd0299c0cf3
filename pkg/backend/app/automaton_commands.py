"""Automaton commands: info, dot, minimize, inverse, product."""

import argparse
import logging

from common.mealy_core import (
    MealyAutomaton,
    acts_trivially,
    inverse_automaton,
    minimize,
    product_automaton,
    render_dot,
    serialize_automaton,
    word_label,
)

from .context import CommandContext, CommandResult

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    info = subparsers.add_parser('info', parents=[common], help='states, activity and transitions')
    info.set_defaults(handler=info_command)

    dot = subparsers.add_parser('dot', parents=[common], help='Moore diagram as DOT')
    dot.set_defaults(handler=dot_command)

    minimized = subparsers.add_parser('minimize', parents=[common], help='quotient by equivalent states')
    minimized.set_defaults(handler=minimize_command)

    inverse = subparsers.add_parser('inverse', parents=[common], help='inverse automaton')
    inverse.set_defaults(handler=inverse_command)

    product = subparsers.add_parser('product', parents=[common], help='automaton of a state word')
    product.add_argument('--word', required=True, help='element expression, e.g. b*b')
    product.set_defaults(handler=product_command)


def _describe(automaton: MealyAutomaton) -> dict:
    return {
        'name': automaton.name,
        'alphabet_size': automaton.alphabet_size,
        'states': list(automaton.states),
        'active_states': automaton.active_states(),
        'invertible': True,
        'transitions': {
            f"{label},{x}": f"{y}@{target}"
            for (label, x), (y, target) in sorted(automaton.transitions.items())
        },
    }


def info_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    automaton = ctx.automaton
    payload = _describe(automaton)
    lines = [
        f"automaton {automaton.name}: {automaton.size} states, alphabet size {automaton.alphabet_size}",
        f"active states: {', '.join(payload['active_states']) or 'none'}",
        "invertible: yes",
        serialize_automaton(automaton).rstrip(),
    ]
    return CommandResult(payload, "\n".join(lines), dot=render_dot(automaton))


def dot_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    source = render_dot(ctx.automaton)
    return CommandResult({'name': ctx.automaton.name, 'dot': source}, source, dot=source)


def minimize_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    result = minimize(ctx.automaton)
    quotient = result.automaton
    classes = {ctx.automaton.states[i]: c for i, c in enumerate(result.class_of)}
    payload = _describe(quotient)
    payload.update({'class_of': classes, 'merged': result.merged})
    text = (
        f"{ctx.automaton.size} -> {quotient.size} states ({result.merged} merged)\n"
        f"classes: {', '.join(f'{s}->{c}' for s, c in classes.items())}\n"
        f"{serialize_automaton(quotient).rstrip()}"
    )
    return CommandResult(payload, text, dot=render_dot(quotient))


def inverse_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    inverse = inverse_automaton(ctx.automaton)
    return CommandResult(_describe(inverse), serialize_automaton(inverse).rstrip(), dot=render_dot(inverse))


def product_command(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    g = ctx.element(args.word)
    if not g.word:
        raise ValueError("product needs a nonempty reduced word")
    product = product_automaton(ctx.automaton, g.word, ctx.budgets.closure_cap)
    reduced = minimize(product).automaton
    trivial = acts_trivially(reduced, 0)
    payload = _describe(product)
    payload.update({
        'word': word_label(ctx.automaton, g.word),
        'reachable_states': product.size,
        'minimized_states': reduced.size,
        'acts_trivially': trivial,
    })
    text = (
        f"product {payload['word']}: {product.size} reachable states, "
        f"{reduced.size} after minimization, acts trivially: {'yes' if trivial else 'no'}"
    )
    return CommandResult(payload, text, dot=render_dot(product))
