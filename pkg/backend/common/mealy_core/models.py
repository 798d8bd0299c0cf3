"""
Mealy Core - Data Models

Invertible Mealy automata (letter-to-letter transducers) and signed states.

Letters are the integers 0..k-1. A state's output map must be a bijection of the
alphabet; activity (non-identity output map) is derived, never stored.
Values are immutable after construction.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple

from ..exceptions import InvalidAutomatonError

logger = logging.getLogger(__name__)


class SignedState(NamedTuple):
    """A generator s (sign +1) or its inverse s^-1 (sign -1), by state index."""
    state: int
    sign: int = 1

    def inverse(self) -> "SignedState":
        return SignedState(self.state, -self.sign)


# (output letter, next signed state), indexed by input letter
StepRow = Tuple[Tuple[int, SignedState], ...]

SignedWord = Tuple[SignedState, ...]


def free_reduce(word: Sequence[SignedState]) -> SignedWord:
    """Cancel adjacent s*s^-1 pairs until none remain."""
    stack: List[SignedState] = []
    for s in word:
        if stack and stack[-1].state == s.state and stack[-1].sign == -s.sign:
            stack.pop()
        else:
            stack.append(s)
    return tuple(stack)


@dataclass(frozen=True)
class MealyAutomaton:
    """
    Finite invertible letter-transducer.

    outputs[s][x] is the letter written by state s on input x,
    targets[s][x] the state entered afterwards.
    """
    name: str
    alphabet_size: int
    states: Tuple[str, ...]
    outputs: Tuple[Tuple[int, ...], ...]
    targets: Tuple[Tuple[int, ...], ...]
    _step: Dict[SignedState, StepRow] = field(init=False, repr=False, compare=False)
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)
    _memo: Dict[str, Any] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._validate()
        index = {label: i for i, label in enumerate(self.states)}
        step: Dict[SignedState, StepRow] = {}
        for s in range(len(self.states)):
            forward = []
            backward: List[Any] = [None] * self.alphabet_size
            for x in range(self.alphabet_size):
                y = self.outputs[s][x]
                t = self.targets[s][x]
                forward.append((y, SignedState(t, 1)))
                backward[y] = (x, SignedState(t, -1))
            step[SignedState(s, 1)] = tuple(forward)
            step[SignedState(s, -1)] = tuple(backward)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_step", step)
        object.__setattr__(self, "_memo", {})

    def _validate(self) -> None:
        k = self.alphabet_size
        n = len(self.states)
        if k < 1:
            raise InvalidAutomatonError(f"alphabet size must be positive, got {k}")
        if n < 1:
            raise InvalidAutomatonError("automaton needs at least one state")
        seen = set()
        for label in self.states:
            if label in seen:
                raise InvalidAutomatonError(f"duplicate state '{label}'")
            seen.add(label)
        if len(self.outputs) != n or len(self.targets) != n:
            raise InvalidAutomatonError("transition table does not cover every state")
        for s, label in enumerate(self.states):
            row_out = self.outputs[s]
            row_next = self.targets[s]
            if len(row_out) != k or len(row_next) != k:
                raise InvalidAutomatonError(f"state '{label}' must define all {k} letters")
            if any(not 0 <= y < k for y in row_out):
                raise InvalidAutomatonError(f"state '{label}' writes a letter outside 0..{k - 1}")
            if sorted(row_out) != list(range(k)):
                raise InvalidAutomatonError(f"non-bijective output map for state '{label}'")
            if any(not 0 <= t < n for t in row_next):
                raise InvalidAutomatonError(f"state '{label}' has an undefined next state")

    @classmethod
    def from_rows(
        cls,
        name: str,
        alphabet_size: int,
        rows: Sequence[Tuple[str, Sequence[Tuple[int, str]]]],
    ) -> "MealyAutomaton":
        """
        Build from rows of (label, [(output, next_label) for each letter]).

        Example (binary odometer):
            MealyAutomaton.from_rows("odometer", 2, [
                ("a", [(1, "e"), (0, "a")]),
                ("e", [(0, "e"), (1, "e")]),
            ])
        """
        labels = [label for label, _ in rows]
        index = {label: i for i, label in enumerate(labels)}
        outputs = []
        targets = []
        for label, cells in rows:
            outputs.append(tuple(out for out, _ in cells))
            try:
                targets.append(tuple(index[nxt] for _, nxt in cells))
            except KeyError as e:
                raise InvalidAutomatonError(f"state '{label}' refers to undefined state {e}") from None
        return cls(name, alphabet_size, tuple(labels), tuple(outputs), tuple(targets))

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def letters(self) -> range:
        return range(self.alphabet_size)

    @property
    def transitions(self) -> Dict[Tuple[str, int], Tuple[int, str]]:
        """Total map (state label, letter) -> (output letter, next state label)."""
        return {
            (label, x): (self.outputs[s][x], self.states[self.targets[s][x]])
            for s, label in enumerate(self.states)
            for x in self.letters
        }

    def state_index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidAutomatonError(f"automaton '{self.name}' has no state '{label}'") from None

    def transition(self, state: int, letter: int) -> Tuple[int, int]:
        return self.outputs[state][letter], self.targets[state][letter]

    def is_active(self, state: int) -> bool:
        return self.outputs[state] != tuple(self.letters)

    def active_states(self) -> List[str]:
        return [label for s, label in enumerate(self.states) if self.is_active(s)]

    def step(self, signed: SignedState, letter: int) -> Tuple[int, SignedState]:
        """One transition of a signed state; inverse states run the inverted relation."""
        return self._step[signed][letter]

    def thread(self, word: Sequence[SignedState], letter: int) -> Tuple[int, SignedWord]:
        """
        Push one letter through a word of signed states, rightmost factor first.

        Returns the output letter and the (unreduced) word of next states,
        position for position.
        """
        step = self._step
        nxt: List[SignedState] = list(word)
        y = letter
        for i in range(len(nxt) - 1, -1, -1):
            y, nxt[i] = step[nxt[i]][y]
        return y, tuple(nxt)

    def signed_states(self) -> List[SignedState]:
        """All generators then all inverses, in state order."""
        return [SignedState(s, 1) for s in range(self.size)] + [SignedState(s, -1) for s in range(self.size)]

    def signed_label(self, signed: SignedState) -> str:
        label = self.states[signed.state]
        return label if signed.sign > 0 else f"{label}^-1"

    def memo(self) -> Dict[str, Any]:
        """Per-automaton cache shared by the algebra layers (derived data only)."""
        return self._memo
