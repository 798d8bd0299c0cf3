"""
Contraction Lab - Element Registry

Equality classes of group elements with a canonical representative per class
(the first word seen). Lookups go word memo -> fingerprint bucket -> exact
equality decision.
"""

import logging
from typing import Dict, List, Optional, Tuple

from ..config import DEFAULT_BUDGETS, Budgets
from ..element_algebra import GroupElement, equal, level_fingerprint, reduce_word
from ..mealy_core import MealyAutomaton, SignedWord

logger = logging.getLogger(__name__)


class ElementRegistry:
    """Append-only set of elements up to group equality."""

    def __init__(self, automaton: MealyAutomaton, budgets: Budgets = DEFAULT_BUDGETS):
        self.automaton = automaton
        self.budgets = budgets
        self.depth = min(budgets.fingerprint_depth, _max_fingerprint_depth(automaton, budgets))
        self.members: List[GroupElement] = []
        self._buckets: Dict[bytes, List[int]] = {}
        self._word_class: Dict[SignedWord, int] = {}
        self.equality_checks = 0

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, index: int) -> GroupElement:
        return self.members[index]

    def find(self, g: GroupElement) -> Optional[int]:
        """Index of the class containing g, or None."""
        return self._lookup(g)[0]

    def add(self, g: GroupElement) -> Tuple[int, bool]:
        """Register g; returns (class index, True if g opened a new class)."""
        existing, word, key = self._lookup(g)
        if existing is not None:
            return existing, False
        index = len(self.members)
        self.members.append(GroupElement(self.automaton, word))
        self._word_class[word] = index
        self._buckets.setdefault(key, []).append(index)
        return index, True

    def _lookup(self, g: GroupElement) -> Tuple[Optional[int], SignedWord, Optional[bytes]]:
        word = reduce_word(self.automaton, g.word)
        cached = self._word_class.get(word)
        if cached is not None:
            return cached, word, None
        key = level_fingerprint(GroupElement(self.automaton, word), self.depth)
        for index in self._buckets.get(key, ()):
            self.equality_checks += 1
            if equal(self.members[index], g, self.budgets.closure_cap):
                self._word_class[word] = index
                return index, word, key
        return None, word, key


def _max_fingerprint_depth(automaton: MealyAutomaton, budgets: Budgets) -> int:
    depth = 0
    while automaton.alphabet_size ** (depth + 1) <= budgets.level_word_budget and depth < budgets.fingerprint_depth:
        depth += 1
    return depth
