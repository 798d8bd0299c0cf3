"""
Mealy Core Module

Invertible Mealy automata: model, text format, transformations, DOT export.
"""

from .models import MealyAutomaton, SignedState, SignedWord, free_reduce
from .parser import parse_automaton, serialize_automaton
from .transforms import (
    MinimizationResult,
    compose_automata,
    inverse_automaton,
    product_automaton,
    minimize,
    reachable_states,
    acts_trivially,
    word_label,
)
from .render import render_dot

__all__ = [
    'MealyAutomaton',
    'SignedState',
    'SignedWord',
    'free_reduce',
    'parse_automaton',
    'serialize_automaton',
    'MinimizationResult',
    'compose_automata',
    'inverse_automaton',
    'product_automaton',
    'minimize',
    'reachable_states',
    'acts_trivially',
    'word_label',
    'render_dot',
]
