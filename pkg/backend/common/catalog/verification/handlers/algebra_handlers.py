"""
Algebra Handlers

Checks that go through the identity decision: section equalities,
trivial elements, finite orders and the witness conditions.
"""

import logging

from ....config import Budgets
from ....element_algebra import (
    act_and_section,
    equal,
    format_element,
    format_word,
    is_identity,
    order_status,
    section,
)
from ....mealy_core import MealyAutomaton
from ...models import CatalogueEntry, VerificationCheck
from .base import BaseHandler

logger = logging.getLogger(__name__)


class SectionEqualsHandler(BaseHandler):
    """element|word == expected as group elements."""

    def verify(self, automaton: MealyAutomaton, entry: CatalogueEntry, check: VerificationCheck, budgets: Budgets):
        self.require(check, "element", "word", "expected")
        g = self.element(automaton, check.element)
        rest = section(g, self.word(automaton, check.word))
        expected = self.element(automaton, check.expected)
        return equal(rest, expected, budgets.closure_cap), format_element(rest), format_element(expected)


class IsIdentityHandler(BaseHandler):

    def verify(self, automaton: MealyAutomaton, entry: CatalogueEntry, check: VerificationCheck, budgets: Budgets):
        self.require(check, "element")
        g = self.element(automaton, check.element)
        trivial = is_identity(g, budgets.closure_cap)
        want = (check.expected or "true").lower() == "true"
        return trivial == want, str(trivial).lower(), str(want).lower()


class OrderFiniteHandler(BaseHandler):

    def verify(self, automaton: MealyAutomaton, entry: CatalogueEntry, check: VerificationCheck, budgets: Budgets):
        self.require(check, "element", "expected")
        g = self.element(automaton, check.element)
        status = order_status(g, budgets)
        expected = int(check.expected)
        return status.is_finite and status.order == expected, str(status), f"Finite({expected})"


class WitnessHoldsHandler(BaseHandler):
    """The entry's (g, v) satisfies g(v) = v and g|v = g."""

    def verify(self, automaton: MealyAutomaton, entry: CatalogueEntry, check: VerificationCheck, budgets: Budgets):
        g = self.element(automaton, check.element or entry.witness.g)
        v = self.word(automaton, check.word or entry.witness.v)
        image, rest = act_and_section(g, v)
        fixes_v = image == v
        section_is_self = equal(rest, g, budgets.closure_cap)
        actual = f"g(v)={format_word(image)} g|v={format_element(rest)}"
        expected = f"g(v)={format_word(v)} g|v={format_element(g)}"
        return fixes_v and section_is_self, actual, expected
