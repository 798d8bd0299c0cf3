"""
Element Algebra - Level Permutations and Order

The action of g on X^n is a permutation of k^n words. Word index puts the
first letter in the most significant position, so that

    perm_n(g)[x*K + r] = g(x)*K + perm_{n-1}(g|x)[r],   K = k^(n-1)

which is computed recursively with a memo keyed by (reduced section, depth).

order_status is a semi-decision: finite orders are certified exactly by the
identity decision, infinite ones only supported by growing level orders.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_BUDGETS, Budgets
from ..exceptions import BudgetExceededError
from ..mealy_core import MealyAutomaton, SignedWord
from .decision import is_identity, power_is_identity, reduce_word
from .element import GroupElement
from .stats import counted
from .words import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LevelPermutation:
    """Bijection u -> g(u) on words of one length, as an index array."""
    depth: int
    alphabet_size: int
    perm: np.ndarray = field(repr=False, compare=False)

    def image_index(self, index: int) -> int:
        return int(self.perm[index])

    def word_index(self, word: Word) -> int:
        index = 0
        for x in word:
            index = index * self.alphabet_size + x
        return index

    def index_word(self, index: int) -> Word:
        letters = []
        for _ in range(self.depth):
            index, x = divmod(index, self.alphabet_size)
            letters.append(x)
        return tuple(reversed(letters))

    def image(self, word: Word) -> Word:
        return self.index_word(self.image_index(self.word_index(word)))

    def cycle_lengths(self) -> List[int]:
        perm = self.perm.tolist()
        visited = bytearray(len(perm))
        lengths = []
        for start in range(len(perm)):
            if visited[start]:
                continue
            length = 0
            i = start
            while not visited[i]:
                visited[i] = 1
                i = perm[i]
                length += 1
            lengths.append(length)
        return lengths

    def cycle_type(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for length in self.cycle_lengths():
            counts[length] = counts.get(length, 0) + 1
        return dict(sorted(counts.items()))

    def order(self) -> int:
        return math.lcm(*self.cycle_lengths())

    def fingerprint(self) -> bytes:
        return self.perm.tobytes()


def _level_array(
    automaton: MealyAutomaton,
    word: SignedWord,
    depth: int,
    memo: Dict[Tuple[SignedWord, int], np.ndarray],
) -> np.ndarray:
    key = (word, depth)
    cached = memo.get(key)
    if cached is not None:
        return cached
    k = automaton.alphabet_size
    if depth == 0:
        result = np.zeros(1, dtype=np.int64)
    elif not word:
        result = np.arange(k ** depth, dtype=np.int64)
    else:
        block = k ** (depth - 1)
        result = np.empty(k * block, dtype=np.int64)
        for x in automaton.letters:
            y, nxt = automaton.thread(word, x)
            sub = _level_array(automaton, reduce_word(automaton, nxt), depth - 1, memo)
            result[x * block:(x + 1) * block] = y * block + sub
    memo[key] = result
    return result


@counted("level_permutation")
def level_permutation(g: GroupElement, depth: int, word_budget: Optional[int] = None) -> LevelPermutation:
    """
    Permutation induced by g on the k^depth words of length depth.

    Raises:
        BudgetExceededError: k^depth above the level word budget
    """
    if depth < 0:
        raise ValueError(f"depth must be nonnegative, got {depth}")
    budget = word_budget if word_budget is not None else DEFAULT_BUDGETS.level_word_budget
    k = g.automaton.alphabet_size
    if k ** depth > budget:
        raise BudgetExceededError("level_word_budget", budget, f"{k}^{depth} words")
    word = reduce_word(g.automaton, g.word)
    perm = _level_array(g.automaton, word, depth, {})
    return LevelPermutation(depth, k, perm)


def orbit_sizes(g: GroupElement, depth: int) -> List[int]:
    """Sorted orbit sizes of g on words of length depth."""
    return sorted(level_permutation(g, depth).cycle_lengths())


def level_fingerprint(g: GroupElement, depth: int) -> bytes:
    """Exact negative filter: different fingerprints imply different elements."""
    return level_permutation(g, depth).fingerprint()


def strict_increases(sequence: Sequence[int]) -> int:
    """Depths n with ord_n > ord_{n-1} (ord_0 = 1)."""
    return sum(1 for before, after in zip([1] + list(sequence), sequence) if after > before)


def stall_lengths(sequence: Sequence[int]) -> List[int]:
    """Repeats in each run of equal values of 1, ord_1, ord_2, ..., in order."""
    stalls = [0]
    previous = 1
    for value in sequence:
        if value == previous:
            stalls[-1] += 1
        else:
            stalls.append(0)
        previous = value
    return stalls


def keeps_growing(sequence: Sequence[int]) -> bool:
    """The final stall is at most twice the longest earlier stall, plus one."""
    stalls = stall_lengths(sequence)
    return stalls[-1] <= 2 * max(stalls[:-1], default=0) + 1


class OrderKind(str, Enum):
    FINITE = "Finite"
    INFINITE_EVIDENCE = "InfiniteEvidence"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class OrderStatus:
    kind: OrderKind
    order: Optional[int] = None
    depth: int = 0
    ord_sequence: Tuple[int, ...] = ()
    note: str = ""

    @classmethod
    def finite(cls, order: int, depth: int, ord_sequence: List[int]) -> "OrderStatus":
        return cls(OrderKind.FINITE, order, depth, tuple(ord_sequence))

    @classmethod
    def infinite_evidence(cls, depth: int, ord_sequence: List[int], note: str = "") -> "OrderStatus":
        return cls(OrderKind.INFINITE_EVIDENCE, None, depth, tuple(ord_sequence), note)

    @classmethod
    def unknown(cls, depth: int, ord_sequence: List[int], note: str) -> "OrderStatus":
        return cls(OrderKind.UNKNOWN, None, depth, tuple(ord_sequence), note)

    @property
    def is_finite(self) -> bool:
        return self.kind == OrderKind.FINITE

    @property
    def is_infinite_evidence(self) -> bool:
        return self.kind == OrderKind.INFINITE_EVIDENCE

    def increases(self) -> int:
        return strict_increases(self.ord_sequence)

    def __str__(self) -> str:
        if self.is_finite:
            return f"Finite({self.order})"
        if self.is_infinite_evidence:
            return f"InfiniteEvidence(depth={self.depth})"
        return f"Unknown({self.note})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "order": self.order,
            "depth": self.depth,
            "ord_sequence": list(self.ord_sequence),
            "note": self.note,
        }


def _decide_power(g: GroupElement, n: int, budgets: Budgets) -> Optional[bool]:
    """power_is_identity, or None when the squared transducer outgrows its budget."""
    try:
        return power_is_identity(g, n, budgets.power_state_budget)
    except BudgetExceededError:
        logger.debug(f"[Order] {g}: g^{n} = 1 undecided within {budgets.power_state_budget} states")
        return None


def _finite(g: GroupElement, sequence: List[int]) -> OrderStatus:
    order = sequence[-1]
    first = sequence.index(order) + 1
    logger.debug(f"[Order] {g}: Finite({order}) at depth {first}")
    return OrderStatus.finite(order, first, sequence)


@counted("order_status")
def order_status(g: GroupElement, budgets: Budgets = DEFAULT_BUDGETS) -> OrderStatus:
    """
    Semi-decide the order of g.

    ord_n (order on level n) divides the true order and divides ord_{n+1}, so a
    later larger ord refutes g^ord_n = 1 for every earlier value. Once a stall
    outlasts keeps_growing, and once more for the last recorded value,
    g^ord_n = 1 is decided exactly with power_is_identity; a positive answer
    gives Finite(ord_n).
    Levels are computed until ord_n passes ord_threshold or the depth budget
    runs out.

    InfiniteEvidence needs min_increases strict increases and a final value
    whose power was refuted exactly or whose stall is no longer than twice the
    longest earlier stall plus one (see keeps_growing). Otherwise Unknown.
    """
    if is_identity(g, budgets.closure_cap):
        return OrderStatus.finite(1, 0, [])

    k = g.automaton.alphabet_size
    sequence: List[int] = []
    decided: Dict[int, Optional[bool]] = {1: False}
    depth = 0
    note = f"max_depth {budgets.max_depth} reached"

    for depth in range(1, budgets.max_depth + 1):
        if k ** depth > budgets.level_word_budget:
            depth -= 1
            note = f"level word budget reached at depth {depth + 1}"
            break
        ord_n = level_permutation(g, depth, budgets.level_word_budget).order()
        sequence.append(ord_n)
        if ord_n not in decided and not keeps_growing(sequence):
            decided[ord_n] = _decide_power(g, ord_n, budgets)
            if decided[ord_n]:
                return _finite(g, sequence)
        if ord_n > budgets.ord_threshold and strict_increases(sequence) >= budgets.min_increases:
            note = f"ord above {budgets.ord_threshold}"
            break

    if not sequence:
        return OrderStatus.unknown(depth, sequence, note)

    final = sequence[-1]
    if final not in decided:
        decided[final] = _decide_power(g, final, budgets)
        if decided[final]:
            return _finite(g, sequence)
    if decided[final] is None:
        note = f"{note}; g^{final} = 1 undecided within {budgets.power_state_budget} states"

    if strict_increases(sequence) < budgets.min_increases:
        return OrderStatus.unknown(depth, sequence, f"{note}; fewer than {budgets.min_increases} increases")
    if decided[final] is None and not keeps_growing(sequence):
        return OrderStatus.unknown(depth, sequence, f"{note}; ord_n settled at {final}")
    return OrderStatus.infinite_evidence(depth, sequence, note)
