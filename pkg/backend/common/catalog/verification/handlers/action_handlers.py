"""
Action Handlers

Checks on images of finite and eventually periodic words.
"""

import logging

from ....config import Budgets
from ....element_algebra import act, act_ep, format_ep, format_word, shift_equivalent
from ....mealy_core import MealyAutomaton
from ...models import CatalogueEntry, VerificationCheck
from .base import BaseHandler

logger = logging.getLogger(__name__)


class ActEqualsHandler(BaseHandler):
    """element(word) == expected on finite words."""

    def verify(self, automaton: MealyAutomaton, entry: CatalogueEntry, check: VerificationCheck, budgets: Budgets):
        self.require(check, "element", "word", "expected")
        g = self.element(automaton, check.element)
        image = act(g, self.word(automaton, check.word))
        expected = self.word(automaton, check.expected)
        k = automaton.alphabet_size
        return image == expected, format_word(image, k), format_word(expected, k)


class EpActEqualsHandler(BaseHandler):
    """element(x) == expected, compared in canonical form."""

    def verify(self, automaton: MealyAutomaton, entry: CatalogueEntry, check: VerificationCheck, budgets: Budgets):
        self.require(check, "element", "word", "expected")
        g = self.element(automaton, check.element)
        image = act_ep(g, self.ep_word(automaton, check.word))
        expected = self.ep_word(automaton, check.expected)
        k = automaton.alphabet_size
        return image == expected, format_ep(image, k), format_ep(expected, k)


class ShiftClassHandler(BaseHandler):
    """element(x) compared with expected up to shift equivalence."""

    def __init__(self, equivalent: bool):
        self.equivalent = equivalent

    def verify(self, automaton: MealyAutomaton, entry: CatalogueEntry, check: VerificationCheck, budgets: Budgets):
        self.require(check, "word", "expected")
        g = self.element(automaton, check.element)
        image = act_ep(g, self.ep_word(automaton, check.word))
        other = self.ep_word(automaton, check.expected)
        same = shift_equivalent(image, other)
        k = automaton.alphabet_size
        relation = "~" if self.equivalent else "!~"
        return same == self.equivalent, format_ep(image, k), f"{relation} {format_ep(other, k)}"
