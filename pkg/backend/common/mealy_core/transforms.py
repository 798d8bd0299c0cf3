"""
Mealy Core - Transformations

Inverse automaton, product (composition) automaton, and Moore-style
partition-refinement minimization. All functions are pure.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..config import CLOSURE_CAP
from ..exceptions import BudgetExceededError
from .models import MealyAutomaton, SignedState, SignedWord, free_reduce

logger = logging.getLogger(__name__)

INVERSE_SUFFIX = "^-1"
IDENTITY_LABEL = "1"


@dataclass(frozen=True)
class MinimizationResult:
    """Quotient automaton plus the class index of every original state."""
    automaton: MealyAutomaton
    class_of: Tuple[int, ...]

    @property
    def merged(self) -> int:
        return len(self.class_of) - self.automaton.size


def _inverse_label(label: str) -> str:
    if label.endswith(INVERSE_SUFFIX):
        return label[: -len(INVERSE_SUFFIX)]
    return f"{label}{INVERSE_SUFFIX}"


def inverse_automaton(automaton: MealyAutomaton) -> MealyAutomaton:
    """
    State s^-1 reads y, writes x and moves to t^-1 exactly when s reads x,
    writes y and moves to t. Labels toggle the '^-1' suffix, so inverting
    twice restores the original labels.
    """
    k = automaton.alphabet_size
    outputs = []
    targets = []
    for s in range(automaton.size):
        row_out = [0] * k
        row_next = [0] * k
        for x in automaton.letters:
            y = automaton.outputs[s][x]
            row_out[y] = x
            row_next[y] = automaton.targets[s][x]
        outputs.append(tuple(row_out))
        targets.append(tuple(row_next))
    return MealyAutomaton(
        name=_inverse_label(automaton.name),
        alphabet_size=k,
        states=tuple(_inverse_label(label) for label in automaton.states),
        outputs=tuple(outputs),
        targets=tuple(targets),
    )


def word_label(automaton: MealyAutomaton, word: Sequence[SignedState]) -> str:
    if not word:
        return IDENTITY_LABEL
    return "*".join(automaton.signed_label(s) for s in word)


def product_automaton(
    automaton: MealyAutomaton,
    word: Sequence[SignedState],
    max_states: int = CLOSURE_CAP,
) -> MealyAutomaton:
    """
    Composition transducer of a word of signed states.

    States are the freely reduced words reachable from the given word;
    state 0 is the initial state and its action equals the word's action
    (rightmost factor first).

    Raises:
        ValueError: empty word
        BudgetExceededError: more than max_states reachable words
    """
    if not word:
        raise ValueError("product automaton needs a nonempty word")

    start = free_reduce(word)
    index: Dict[SignedWord, int] = {start: 0}
    order: List[SignedWord] = [start]
    rows: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
    queue = deque([start])
    pending: Dict[SignedWord, List[Tuple[int, SignedWord]]] = {}

    while queue:
        current = queue.popleft()
        cells = []
        for x in automaton.letters:
            y, nxt = automaton.thread(current, x)
            nxt = free_reduce(nxt)
            if nxt not in index:
                if len(order) >= max_states:
                    raise BudgetExceededError("product_states", max_states, word_label(automaton, word))
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            cells.append((y, nxt))
        pending[current] = cells

    for w in order:
        cells = pending[w]
        rows.append((tuple(y for y, _ in cells), tuple(index[nxt] for _, nxt in cells)))

    product = MealyAutomaton(
        name=f"{automaton.name}[{word_label(automaton, start)}]",
        alphabet_size=automaton.alphabet_size,
        states=tuple(word_label(automaton, w) for w in order),
        outputs=tuple(r[0] for r in rows),
        targets=tuple(r[1] for r in rows),
    )
    logger.debug(f"[Product] {product.name}: {product.size} reachable states")
    return product


def compose_automata(
    outer: MealyAutomaton,
    inner: MealyAutomaton,
    max_states: int = CLOSURE_CAP,
) -> MealyAutomaton:
    """
    Transducer of outer-state-0 after inner-state-0 (inner reads first).

    States are the reachable pairs (p, q); state 0 is (0, 0).

    Raises:
        BudgetExceededError: more than max_states reachable pairs
    """
    if outer.alphabet_size != inner.alphabet_size:
        raise ValueError(
            f"alphabet sizes differ: {outer.alphabet_size} and {inner.alphabet_size}"
        )
    start = (0, 0)
    index: Dict[Tuple[int, int], int] = {start: 0}
    order: List[Tuple[int, int]] = [start]
    outputs: List[Tuple[int, ...]] = []
    targets: List[Tuple[int, ...]] = []
    i = 0
    while i < len(order):
        p, q = order[i]
        i += 1
        row_out = []
        row_next = []
        for x in inner.letters:
            y, q_next = inner.transition(q, x)
            z, p_next = outer.transition(p, y)
            pair = (p_next, q_next)
            if pair not in index:
                if len(order) >= max_states:
                    raise BudgetExceededError("product_states", max_states, f"{outer.name} o {inner.name}")
                index[pair] = len(order)
                order.append(pair)
            row_out.append(z)
            row_next.append(index[pair])
        outputs.append(tuple(row_out))
        targets.append(tuple(row_next))

    return MealyAutomaton(
        name=f"{outer.name}*{inner.name}",
        alphabet_size=inner.alphabet_size,
        states=tuple(f"{p}.{q}" for p, q in order),
        outputs=tuple(outputs),
        targets=tuple(targets),
    )


def _number_by_first_occurrence(keys: Sequence) -> Tuple[int, ...]:
    numbering: Dict = {}
    return tuple(numbering.setdefault(key, len(numbering)) for key in keys)


def minimize(automaton: MealyAutomaton) -> MinimizationResult:
    """
    Merge states with identical induced action on all words.

    Partition refinement seeded by output rows; classes are numbered by the
    first state (in state order) that belongs to them.
    """
    n = automaton.size
    classes = _number_by_first_occurrence([automaton.outputs[s] for s in range(n)])
    while True:
        signatures = [
            (classes[s],) + tuple(classes[automaton.targets[s][x]] for x in automaton.letters)
            for s in range(n)
        ]
        refined = _number_by_first_occurrence(signatures)
        if max(refined) == max(classes):
            break
        classes = refined
    classes = refined

    class_count = max(classes) + 1
    representatives = [classes.index(c) for c in range(class_count)]
    quotient = MealyAutomaton(
        name=automaton.name,
        alphabet_size=automaton.alphabet_size,
        states=tuple(automaton.states[r] for r in representatives),
        outputs=tuple(automaton.outputs[r] for r in representatives),
        targets=tuple(
            tuple(classes[automaton.targets[r][x]] for x in automaton.letters)
            for r in representatives
        ),
    )
    if class_count < n:
        logger.debug(f"[Minimize] {automaton.name}: {n} -> {class_count} states")
    return MinimizationResult(quotient, classes)


def reachable_states(automaton: MealyAutomaton, state: int = 0) -> List[int]:
    """States reachable from `state`, in breadth-first order."""
    seen = {state}
    order = [state]
    queue = deque([state])
    while queue:
        s = queue.popleft()
        for t in automaton.targets[s]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def acts_trivially(automaton: MealyAutomaton, state: int = 0) -> bool:
    """True iff every state reachable from `state` fixes every letter."""
    return not any(automaton.is_active(s) for s in reachable_states(automaton, state))
