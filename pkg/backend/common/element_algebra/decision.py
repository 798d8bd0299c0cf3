"""
Element Algebra - Identity and Equality Decision

An element is the identity iff every member of its section closure fixes every
letter. The closure is explored breadth-first over reduced words; it is finite
because a reduced section is never longer than the element.

Words are shortened while exploring by deleting subwords that this same
procedure has already certified trivial (trivial single states and trivial
length-2 words such as involution squares). Deletion preserves the element, so
the decision stays exact.
"""

import logging
from collections import deque
from typing import FrozenSet, Optional, Sequence, Set, Tuple

from ..config import CLOSURE_CAP, POWER_STATE_BUDGET
from ..exceptions import BudgetExceededError
from ..mealy_core import (
    MealyAutomaton,
    SignedState,
    SignedWord,
    acts_trivially,
    compose_automata,
    free_reduce,
    minimize,
    product_automaton,
)
from .element import GroupElement, check_same_automaton, compose, invert
from .stats import counted

logger = logging.getLogger(__name__)

# Pair relators are only searched for on small automata
RELATOR_SEARCH_MAX_STATES = 16

Relators = Tuple[FrozenSet[SignedState], FrozenSet[Tuple[SignedState, SignedState]]]


def _closure_is_trivial(
    automaton: MealyAutomaton,
    word: SignedWord,
    cap: int,
    relators: Optional[Relators] = None,
) -> bool:
    letters = automaton.letters
    start = shorten(word, relators) if relators else word
    seen: Set[SignedWord] = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if not current:
            continue
        nexts = []
        for x in letters:
            y, nxt = automaton.thread(current, x)
            if y != x:
                return False
            nexts.append(nxt)
        for nxt in nexts:
            reduced = shorten(nxt, relators) if relators else free_reduce(nxt)
            if reduced not in seen:
                if len(seen) >= cap:
                    raise BudgetExceededError("closure_cap", cap, f"section closure of a word of length {len(word)}")
                seen.add(reduced)
                queue.append(reduced)
    return True


def trivial_relators(automaton: MealyAutomaton) -> Relators:
    """Signed states and reduced pairs of signed states that act trivially (cached per automaton)."""
    memo = automaton.memo()
    cached = memo.get("trivial_relators")
    if cached is not None:
        return cached

    signed = automaton.signed_states()
    singles = frozenset(s for s in signed if _closure_is_trivial(automaton, (s,), CLOSURE_CAP))
    pairs: Set[Tuple[SignedState, SignedState]] = set()
    if automaton.size <= RELATOR_SEARCH_MAX_STATES:
        for s in signed:
            for t in signed:
                if s in singles or t in singles:
                    continue
                if s.state == t.state and s.sign == -t.sign:
                    continue
                if _closure_is_trivial(automaton, (s, t), CLOSURE_CAP):
                    pairs.add((s, t))
    relators = (singles, frozenset(pairs))
    memo["trivial_relators"] = relators
    if singles or pairs:
        logger.debug(
            f"[Decision] {automaton.name}: {len(singles)} trivial states, {len(pairs)} trivial pairs"
        )
    return relators


def shorten(word: Sequence[SignedState], relators: Optional[Relators]) -> SignedWord:
    """Free reduction plus deletion of certified-trivial states and pairs."""
    if not relators:
        return free_reduce(word)
    singles, pairs = relators
    stack = []
    for s in word:
        if s in singles:
            continue
        if stack:
            top = stack[-1]
            if (top.state == s.state and top.sign == -s.sign) or (top, s) in pairs:
                stack.pop()
                continue
        stack.append(s)
    return tuple(stack)


def reduce_word(automaton: MealyAutomaton, word: Sequence[SignedState]) -> SignedWord:
    return shorten(word, trivial_relators(automaton))


@counted("is_identity")
def is_identity(g: GroupElement, closure_cap: int = CLOSURE_CAP) -> bool:
    """
    True iff g acts trivially on every finite word.

    Raises:
        BudgetExceededError: section closure larger than closure_cap
    """
    if not g.word:
        return True
    relators = trivial_relators(g.automaton)
    return _closure_is_trivial(g.automaton, g.word, closure_cap, relators)


@counted("equal")
def equal(g: GroupElement, h: GroupElement, closure_cap: int = CLOSURE_CAP) -> bool:
    """True iff g and h act identically on all finite words."""
    check_same_automaton(g, h)
    if g.word == h.word or reduce_word(g.automaton, g.word) == reduce_word(h.automaton, h.word):
        return True
    return is_identity(compose(g, invert(h)), closure_cap)


def _compose_minimized(outer: MealyAutomaton, inner: MealyAutomaton, state_budget: int) -> MealyAutomaton:
    return minimize(compose_automata(outer, inner, state_budget)).automaton


@counted("power_is_identity")
def power_is_identity(g: GroupElement, n: int, state_budget: int = POWER_STATE_BUDGET) -> bool:
    """
    True iff g^n is the identity.

    Squares the minimized transducer of g instead of expanding the word g^n,
    so the cost follows the number of distinct sections of the powers, not n.

    Raises:
        BudgetExceededError: an intermediate transducer above state_budget states
    """
    n = abs(n)
    word = reduce_word(g.automaton, g.word)
    if n == 0 or not word:
        return True
    base = minimize(product_automaton(g.automaton, word, state_budget)).automaton
    result: Optional[MealyAutomaton] = None
    while True:
        if n & 1:
            result = base if result is None else _compose_minimized(result, base, state_budget)
        n >>= 1
        if not n:
            break
        base = _compose_minimized(base, base, state_budget)
    return acts_trivially(result, 0)
