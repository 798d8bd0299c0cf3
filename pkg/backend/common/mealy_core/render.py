"""
Mealy Core - Moore Diagram Export

One node per state, one edge per (state, letter) labelled "x|y".
Active states are shaded.
"""

from graphviz import Digraph

from .models import MealyAutomaton


def render_dot(automaton: MealyAutomaton) -> str:
    """DOT source of the automaton's Moore diagram."""
    dot = Digraph(name=f"automaton_{automaton.name}")
    dot.attr(rankdir="LR")
    dot.attr("node", shape="circle")

    for s, label in enumerate(automaton.states):
        if automaton.is_active(s):
            dot.node(label, style="filled", fillcolor="gray")
        else:
            dot.node(label)

    for s, label in enumerate(automaton.states):
        for x in automaton.letters:
            y, t = automaton.transition(s, x)
            dot.edge(label, automaton.states[t], label=f"{x}|{y}")

    return dot.source
