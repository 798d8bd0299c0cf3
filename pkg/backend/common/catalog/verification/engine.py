"""
Verification Engine

Runs a catalogue entry's checks, dispatching each to the handler for its kind.

DETERMINISTIC: same entry + same budgets = same results, in check order.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ...config import DEFAULT_BUDGETS, Budgets
from ...exceptions import WorkbenchError
from ...mealy_core import MealyAutomaton, inverse_automaton
from ..models import CatalogueEntry, CheckKind, VerificationCheck
from .handlers import (
    ActEqualsHandler,
    BaseHandler,
    CheckResult,
    EpActEqualsHandler,
    IsIdentityHandler,
    OrderFiniteHandler,
    SectionEqualsHandler,
    ShiftClassHandler,
    WitnessHoldsHandler,
)

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    key: int
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'key': self.key,
            'passed': self.passed,
            'failed': self.failed,
            'ok': self.ok,
            'checks': [r.to_dict() for r in self.results],
        }


class VerificationEngine:
    """
    Usage:
        engine = VerificationEngine()
        suite = engine.run_suite(entry)
    """

    def __init__(self, budgets: Optional[Budgets] = None):
        self.budgets = budgets or DEFAULT_BUDGETS
        self.handlers: Dict[CheckKind, BaseHandler] = {
            CheckKind.ACT_EQUALS: ActEqualsHandler(),
            CheckKind.SECTION_EQUALS: SectionEqualsHandler(),
            CheckKind.IS_IDENTITY: IsIdentityHandler(),
            CheckKind.EP_ACT_EQUALS: EpActEqualsHandler(),
            CheckKind.SHIFT_CLASS_EQUALS: ShiftClassHandler(equivalent=True),
            CheckKind.SHIFT_CLASS_DIFFERS: ShiftClassHandler(equivalent=False),
            CheckKind.ORDER_FINITE: OrderFiniteHandler(),
            CheckKind.WITNESS_HOLDS: WitnessHoldsHandler(),
        }

    def run_check(
        self,
        entry: CatalogueEntry,
        check: VerificationCheck,
        inverse: Optional[MealyAutomaton] = None,
    ) -> CheckResult:
        """Apply one check; errors become failed results naming the check."""
        handler = self.handlers.get(check.kind)
        label = check.label()
        if handler is None:
            logger.warning(f"No handler for check kind: {check.kind}")
            return CheckResult(entry.key, check.kind.value, label, False, error="no handler")

        automaton = entry.automaton
        if check.on_inverse:
            automaton = inverse or inverse_automaton(entry.automaton)
        try:
            passed, actual, expected = handler.verify(automaton, entry, check, self.budgets)
        except (WorkbenchError, ValueError) as e:
            logger.error(f"[Verify] {entry.key}: {label} raised {e}")
            return CheckResult(entry.key, check.kind.value, label, False, error=str(e))

        if not passed:
            logger.warning(f"[Verify] {entry.key}: FAILED {label}: got {actual}, expected {expected}")
        return CheckResult(entry.key, check.kind.value, label, passed, actual, expected)

    def run_suite(self, entry: CatalogueEntry) -> SuiteResult:
        suite = SuiteResult(entry.key)
        inverse = inverse_automaton(entry.automaton) if any(c.on_inverse for c in entry.checks) else None
        for check in entry.checks:
            suite.results.append(self.run_check(entry, check, inverse))
        logger.info(f"[Verify] {entry.key}: {suite.passed}/{len(suite.results)} checks passed")
        return suite
