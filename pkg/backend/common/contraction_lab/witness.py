"""
Contraction Lab - Non-Contraction Witnesses

A pair (g, v) with g(v) = v, g|v = g and g of infinite order shows the group
is not contracting: the sections g^n = g^n|v^k occur at every depth.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from ..config import DEFAULT_BUDGETS, Budgets
from ..element_algebra import (
    GroupElement,
    OrderStatus,
    Word,
    act_and_section,
    equal,
    format_element,
    format_word,
    level_fingerprint,
    order_status,
    reduce_word,
)
from ..exceptions import BudgetExceededError
from ..mealy_core import MealyAutomaton, SignedState

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    NON_CONTRACTING = "NonContracting"
    CANDIDATE_ONLY = "CandidateOnly"
    REJECTED = "Rejected"


@dataclass
class WitnessReport:
    automaton: str
    g: GroupElement
    v: Word
    fixes_v: bool
    section_is_self: bool
    order: OrderStatus
    verdict: Verdict
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        k = self.g.automaton.alphabet_size
        return {
            "automaton": self.automaton,
            "g": format_element(self.g),
            "v": format_word(self.v, k),
            "fixes_v": self.fixes_v,
            "section_is_self": self.section_is_self,
            "order": self.order.to_dict(),
            "verdict": self.verdict.value,
            "notes": list(self.notes),
        }


def decide_verdict(fixes_v: bool, section_is_self: bool, order: OrderStatus) -> Verdict:
    if not (fixes_v and section_is_self) or order.is_finite:
        return Verdict.REJECTED
    if order.is_infinite_evidence:
        return Verdict.NON_CONTRACTING
    return Verdict.CANDIDATE_ONLY


def _safe_order(g: GroupElement, budgets: Budgets, notes: List[str]) -> OrderStatus:
    try:
        return order_status(g, budgets)
    except BudgetExceededError as e:
        notes.append(str(e))
        return OrderStatus.unknown(0, [], str(e))


def check_witness(
    automaton: MealyAutomaton,
    g: GroupElement,
    v: Sequence[int],
    budgets: Budgets = DEFAULT_BUDGETS,
    order: Optional[OrderStatus] = None,
) -> WitnessReport:
    """
    Evaluate the three witness conditions for (g, v).

    Mathematical failures become a Rejected verdict; a precomputed `order`
    skips the order semi-decision.
    """
    if not v:
        raise ValueError("witness word v must be nonempty")
    notes: List[str] = []
    image, rest = act_and_section(g, v)
    fixes_v = image == tuple(v)
    try:
        section_is_self = equal(rest, g, budgets.closure_cap)
    except BudgetExceededError as e:
        notes.append(f"section equality undecided: {e}")
        section_is_self = False
    if order is None:
        order = _safe_order(g, budgets, notes)
    verdict = decide_verdict(fixes_v, section_is_self, order)
    logger.debug(f"[Witness] {automaton.name}: ({format_element(g)}, {format_word(v)}) -> {verdict.value}")
    return WitnessReport(automaton.name, g, tuple(v), fixes_v, section_is_self, order, verdict, notes)


def reduced_words(automaton: MealyAutomaton, max_length: int) -> Iterator[GroupElement]:
    """Freely reduced words of length 1..max_length, lexicographic over signed states."""
    signed = automaton.signed_states()

    def extend(prefix: List[SignedState], remaining: int) -> Iterator[List[SignedState]]:
        if remaining == 0:
            yield prefix
            return
        for s in signed:
            if prefix and prefix[-1].state == s.state and prefix[-1].sign == -s.sign:
                continue
            yield from extend(prefix + [s], remaining - 1)

    for length in range(1, max_length + 1):
        for word in extend([], length):
            yield GroupElement(automaton, tuple(word))


def search_witness(
    automaton: MealyAutomaton,
    max_word_len: int,
    max_v_len: int,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> List[WitnessReport]:
    """
    All (g, v) with g(v) = v and g|v = g, |g| <= max_word_len, |v| <= max_v_len,
    ordered by (|g|, |v|, lex). Later g equal to an earlier hit for the same v
    are dropped. Budget overruns skip the candidate.
    """
    if max_word_len < 1 or max_v_len < 1:
        raise ValueError("max_word_len and max_v_len must be at least 1")

    k = automaton.alphabet_size
    candidates_v = [
        tuple(v) for length in range(1, max_v_len + 1) for v in itertools.product(range(k), repeat=length)
    ]
    fingerprint_depth = budgets.fingerprint_depth
    while fingerprint_depth and k ** fingerprint_depth > budgets.level_word_budget:
        fingerprint_depth -= 1

    hits: List[WitnessReport] = []
    hits_by_v: Dict[Word, List[Tuple[bytes, GroupElement]]] = {}
    orders: Dict[tuple, OrderStatus] = {}
    skipped = 0
    examined = 0

    for g in reduced_words(automaton, max_word_len):
        g_fingerprint: Optional[bytes] = None
        for v in candidates_v:
            examined += 1
            image, rest = act_and_section(g, v)
            if image != v:
                continue
            if g_fingerprint is None:
                g_fingerprint = level_fingerprint(g, fingerprint_depth)
            if rest.word != g.word and level_fingerprint(rest, fingerprint_depth) != g_fingerprint:
                continue
            try:
                if rest.word != g.word and not equal(rest, g, budgets.closure_cap):
                    continue
                if any(
                    fingerprint == g_fingerprint and equal(g, earlier, budgets.closure_cap)
                    for fingerprint, earlier in hits_by_v.get(v, ())
                ):
                    continue
            except BudgetExceededError as e:
                skipped += 1
                logger.warning(f"[Search] {automaton.name}: skipped ({format_element(g)}, {format_word(v)}): {e}")
                continue

            key = reduce_word(automaton, g.word)
            notes: List[str] = []
            if key not in orders:
                orders[key] = _safe_order(g, budgets, notes)
            report = WitnessReport(
                automaton.name, g, v, True, True, orders[key],
                decide_verdict(True, True, orders[key]), notes,
            )
            hits.append(report)
            hits_by_v.setdefault(v, []).append((g_fingerprint, g))

    hits.sort(key=lambda r: (len(r.g), len(r.v), _signed_order(automaton, r.g), r.v))
    logger.info(
        f"[Search] {automaton.name}: L={max_word_len} M={max_v_len}, {examined} pairs, "
        f"{len(hits)} hits, {skipped} skipped"
    )
    return hits


def _signed_order(automaton: MealyAutomaton, g: GroupElement) -> tuple:
    n = automaton.size
    return tuple(s.state if s.sign > 0 else n + s.state for s in g.word)
