"""
Base Handler

Abstract base class for verification handlers.
Each check kind (ActEquals, SectionEquals, ...) has one handler.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Optional

from ....config import Budgets
from ....element_algebra import EPWord, GroupElement, Word, parse_element, parse_ep, parse_word
from ....exceptions import WorkbenchError
from ....mealy_core import MealyAutomaton
from ...models import CatalogueEntry, VerificationCheck


@dataclass
class CheckResult:
    """Outcome of one verification check."""
    key: int
    kind: str
    label: str
    passed: bool
    actual: str = ""
    expected: str = ""
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'key': self.key,
            'kind': self.kind,
            'label': self.label,
            'passed': self.passed,
            'actual': self.actual,
            'expected': self.expected,
        }
        if self.error:
            result['error'] = self.error
        return result


class BaseHandler(ABC):
    """
    Abstract base class for check handlers.

    verify() returns (passed, actual, expected) as display strings;
    the engine wraps them into a CheckResult.
    """

    @abstractmethod
    def verify(
        self,
        automaton: MealyAutomaton,
        entry: CatalogueEntry,
        check: VerificationCheck,
        budgets: Budgets,
    ) -> tuple:
        pass

    def require(self, check: VerificationCheck, *fields: str) -> None:
        missing = [f for f in fields if getattr(check, f) is None]
        if missing:
            raise WorkbenchError(f"{check.kind.value} check is missing operand(s): {', '.join(missing)}")

    def element(self, automaton: MealyAutomaton, text: Optional[str]) -> GroupElement:
        return parse_element(automaton, text if text is not None else "1")

    def word(self, automaton: MealyAutomaton, text: str) -> Word:
        return parse_word(text, automaton.alphabet_size)

    def ep_word(self, automaton: MealyAutomaton, text: str) -> EPWord:
        return parse_ep(text, automaton.alphabet_size)
