"""
Element Algebra - Group Elements

A GroupElement is a freely reduced word of signed states over one automaton.

CONVENTION: the RIGHTMOST factor acts first. For g = s1 s2 ... sn,
g(v) = s1(s2(...sn(v))), so (gh)(v) = g(h(v)) and (gh)|v = g|h(v) * h|v.

`==` on elements compares words (syntactic). Group equality goes through
decision.equal; no relations are ever applied to the stored word.
"""

from dataclasses import dataclass
from typing import Iterable, List, Union

from ..exceptions import AutomatonMismatchError, InvalidAutomatonError
from ..mealy_core import MealyAutomaton, SignedState, SignedWord, free_reduce
from .stats import counted


@dataclass(frozen=True)
class GroupElement:
    automaton: MealyAutomaton
    word: SignedWord

    def __post_init__(self):
        n = self.automaton.size
        reduced = free_reduce(SignedState(*s) for s in self.word)
        for s in reduced:
            if not 0 <= s.state < n or s.sign not in (1, -1):
                raise InvalidAutomatonError(
                    f"signed state {tuple(s)} is not valid for automaton '{self.automaton.name}'"
                )
        object.__setattr__(self, "word", reduced)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_element(self)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)


def identity(automaton: MealyAutomaton) -> GroupElement:
    return GroupElement(automaton, ())


def generator(automaton: MealyAutomaton, state: Union[int, str], sign: int = 1) -> GroupElement:
    index = automaton.state_index(state) if isinstance(state, str) else state
    return GroupElement(automaton, (SignedState(index, sign),))


def element(automaton: MealyAutomaton, word: Iterable[SignedState]) -> GroupElement:
    return GroupElement(automaton, tuple(word))


def check_same_automaton(g: GroupElement, h: GroupElement) -> None:
    if g.automaton is not h.automaton and g.automaton != h.automaton:
        raise AutomatonMismatchError(
            f"elements belong to different automata: '{g.automaton.name}' and '{h.automaton.name}'"
        )


@counted("compose")
def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """g*h: h acts first."""
    check_same_automaton(g, h)
    return GroupElement(g.automaton, g.word + h.word)


@counted("invert")
def invert(g: GroupElement) -> GroupElement:
    return GroupElement(g.automaton, tuple(s.inverse() for s in reversed(g.word)))


def power(g: GroupElement, n: int) -> GroupElement:
    if n < 0:
        return power(invert(g), -n)
    return GroupElement(g.automaton, g.word * n)


def format_element(g: GroupElement) -> str:
    """Exponent-compressed text: a^2*b*c, c^-1*b^-1*a^-2, or 1 for the empty word."""
    if not g.word:
        return "1"
    parts: List[str] = []
    run_state = g.word[0]
    run = 0
    for s in g.word + (None,):
        if s == run_state:
            run += 1
            continue
        label = g.automaton.states[run_state.state]
        exponent = run * run_state.sign
        parts.append(label if exponent == 1 else f"{label}^{exponent}")
        run_state, run = s, 1
    return "*".join(parts)
