"""
Property Checks

Seeded random samples of the action identities every self-similar action obeys:

    g(uv)      = g(u) g|u(v)
    g|uv       = (g|u)|v
    (gh)|v     = g|h(v) h|v
    g^-1(g(u)) = u
    g^-1|v     = (g|g^-1(v))^-1

plus the propagation of a fixed-point witness to powers: if g(v) = v and
g|v = g then g^n(v^k) = v^k and g^n|v^k = g^n.

DETERMINISTIC: same automaton + same seed = same samples.
"""

import logging
import random
from typing import List, Sequence, Tuple

from ...config import DEFAULT_BUDGETS, DEFAULT_SEED, Budgets
from ...element_algebra import (
    GroupElement,
    Word,
    act,
    compose,
    equal,
    format_element,
    format_word,
    invert,
    power,
    section,
)
from ...mealy_core import MealyAutomaton, SignedState
from .handlers import CheckResult

logger = logging.getLogger(__name__)

PROPERTY_KIND = "Property"
PROPAGATION_KIND = "Propagation"

MAX_SAMPLE_ELEMENT_LENGTH = 4
MAX_SAMPLE_WORD_LENGTH = 6


def random_element(automaton: MealyAutomaton, rng: random.Random, max_length: int) -> GroupElement:
    length = rng.randint(0, max_length)
    word = [
        SignedState(rng.randrange(automaton.size), rng.choice((1, -1)))
        for _ in range(length)
    ]
    return GroupElement(automaton, tuple(word))


def random_word(automaton: MealyAutomaton, rng: random.Random, max_length: int) -> Word:
    return tuple(rng.randrange(automaton.alphabet_size) for _ in range(rng.randint(0, max_length)))


def _failed_identities(
    g: GroupElement,
    h: GroupElement,
    u: Word,
    v: Word,
    closure_cap: int,
) -> List[str]:
    failed = []
    if act(g, u + v) != act(g, u) + act(section(g, u), v):
        failed.append("act(g,uv)")
    if not equal(section(g, u + v), section(section(g, u), v), closure_cap):
        failed.append("g|uv")
    lhs = section(compose(g, h), v)
    rhs = compose(section(g, act(h, v)), section(h, v))
    if not equal(lhs, rhs, closure_cap):
        failed.append("(gh)|v")
    g_inv = invert(g)
    if act(g_inv, act(g, u)) != u:
        failed.append("g^-1(g(u))")
    if not equal(section(g_inv, v), invert(section(g, act(g_inv, v))), closure_cap):
        failed.append("g^-1|v")
    return failed


def property_checks(
    automaton: MealyAutomaton,
    samples: int = 100,
    seed: int = DEFAULT_SEED,
    budgets: Budgets = DEFAULT_BUDGETS,
    key: int = 0,
) -> List[CheckResult]:
    """One CheckResult per random sample (g, h, u, v)."""
    rng = random.Random(seed)
    k = automaton.alphabet_size
    results = []
    for i in range(samples):
        g = random_element(automaton, rng, MAX_SAMPLE_ELEMENT_LENGTH)
        h = random_element(automaton, rng, MAX_SAMPLE_ELEMENT_LENGTH)
        u = random_word(automaton, rng, MAX_SAMPLE_WORD_LENGTH)
        v = random_word(automaton, rng, MAX_SAMPLE_WORD_LENGTH)
        label = f"sample {i}: g={format_element(g)} h={format_element(h)} u={format_word(u, k)} v={format_word(v, k)}"
        failed = _failed_identities(g, h, u, v, budgets.closure_cap)
        if failed:
            logger.warning(f"[Properties] {automaton.name}: {label} broke {', '.join(failed)}")
        results.append(CheckResult(
            key, PROPERTY_KIND, label, not failed,
            actual=", ".join(failed) or "all hold", expected="all hold",
        ))
    return results


def propagation_checks(
    g: GroupElement,
    v: Sequence[int],
    pairs: Sequence[Tuple[int, int]],
    budgets: Budgets = DEFAULT_BUDGETS,
    key: int = 0,
) -> List[CheckResult]:
    """g^n(v^k) = v^k and g^n|v^k = g^n for each (n, k) in pairs."""
    v = tuple(v)
    k_letters = g.automaton.alphabet_size
    results = []
    for n, k in pairs:
        g_n = power(g, n)
        v_k = v * k
        fixes = act(g_n, v_k) == v_k
        self_section = equal(section(g_n, v_k), g_n, budgets.closure_cap)
        label = f"g^{n} at v^{k} (g={format_element(g)}, v={format_word(v, k_letters)})"
        results.append(CheckResult(
            key, PROPAGATION_KIND, label, fixes and self_section,
            actual=f"fixes={fixes} self_section={self_section}",
            expected="fixes=True self_section=True",
        ))
    return results
