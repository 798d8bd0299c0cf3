"""
Element Algebra - Action and Sections

g(uv) = g(u) g|u(v)      g|uv = (g|u)|v      (gh)|v = g|h(v) h|v
"""

from typing import Dict, List, Sequence, Tuple

from ..mealy_core import MealyAutomaton, SignedWord, free_reduce
from .decision import reduce_word
from .element import GroupElement
from .stats import counted
from .words import EPWord, Word, canonical_ep


def check_letters(automaton: MealyAutomaton, word: Sequence[int]) -> None:
    k = automaton.alphabet_size
    for i, x in enumerate(word):
        if not 0 <= x < k:
            raise ValueError(f"letter {x} at position {i} outside alphabet 0..{k - 1}")


def run_word(automaton: MealyAutomaton, word: SignedWord, u: Sequence[int]) -> Tuple[Word, SignedWord]:
    """Image of u under `word` and the reduced section word, without validation."""
    out: List[int] = []
    current = word
    for x in u:
        y, current = automaton.thread(current, x)
        out.append(y)
    return tuple(out), free_reduce(current)


def act_and_section(g: GroupElement, u: Sequence[int]) -> Tuple[Word, GroupElement]:
    check_letters(g.automaton, u)
    image, rest = run_word(g.automaton, g.word, u)
    return image, GroupElement(g.automaton, rest)


@counted("act")
def act(g: GroupElement, u: Sequence[int]) -> Word:
    """g(u) for a finite word u; same length as u."""
    return act_and_section(g, u)[0]


@counted("section")
def section(g: GroupElement, v: Sequence[int]) -> GroupElement:
    """g|v, freely reduced."""
    return act_and_section(g, v)[1]


@counted("act_ep")
def act_ep(g: GroupElement, x: EPWord) -> EPWord:
    """
    g(u w^inf) in canonical form.

    After the preperiod, the sections h_i at successive period boundaries are
    reduced words no longer than g, so they eventually repeat; the letters
    emitted over one repetition form the image's period. Boundary sections are
    shortened by the certified-trivial relators.
    """
    automaton = g.automaton
    check_letters(automaton, x.preperiod)
    check_letters(automaton, x.period)

    head, h = run_word(automaton, g.word, x.preperiod)
    h = reduce_word(automaton, h)
    seen: Dict[SignedWord, int] = {}
    blocks: List[Word] = []
    while h not in seen:
        seen[h] = len(blocks)
        block, h = run_word(automaton, h, x.period)
        h = reduce_word(automaton, h)
        blocks.append(block)

    start = seen[h]
    preperiod = head + tuple(letter for block in blocks[:start] for letter in block)
    period = tuple(letter for block in blocks[start:] for letter in block)
    return canonical_ep(preperiod, period)
