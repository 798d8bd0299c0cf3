"""
Self-Similarity Graph - Divergence Experiment

With g(v) = v and g|v = g, the vertices v^k w and g^n(v^k w) = v^k g^n(w)
sit at distance |v^k w| from the root for every k, yet a horizontal path of
length n*|g| joins them. The experiment measures the shortest connection
that avoids the ball of radius |v^k w| and compares it with that corridor.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from ..config import DEFAULT_BUDGETS, Budgets
from ..element_algebra import (
    GroupElement,
    Word,
    act,
    act_and_section,
    equal,
    format_element,
    format_word,
    orbit_sizes,
    power,
)
from ..exceptions import BudgetExceededError, PremiseError
from ..mealy_core import MealyAutomaton
from .ball import ball_size, build_ball, outside_ball_distance

logger = logging.getLogger(__name__)

# Longest base word tried when none is given
MAX_AUTO_BASE_LENGTH = 8


@dataclass
class DivergenceRow:
    k: int
    radius: int
    corridor_length: int
    measured: Optional[int]
    base: str
    image: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "radius": self.radius,
            "corridor": self.corridor_length,
            "measured": self.measured,
            "base": self.base,
            "image": self.image,
        }


@dataclass
class DivergenceReport:
    automaton: str
    g: str
    v: str
    w: str
    n: int
    ball_depth: int
    rows: List[DivergenceRow] = field(default_factory=list)

    @property
    def corridor_length(self) -> int:
        return self.rows[0].corridor_length if self.rows else 0

    @property
    def bounded(self) -> bool:
        """Measured distances stay within the corridor while the radius grows."""
        if not self.rows:
            return False
        radii = [r.radius for r in self.rows]
        growing = all(b > a for a, b in zip(radii, radii[1:]))
        return growing and all(r.measured is not None and r.measured <= r.corridor_length for r in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "automaton": self.automaton,
            "g": self.g,
            "v": self.v,
            "w": self.w,
            "n": self.n,
            "ball_depth": self.ball_depth,
            "corridor_length": self.corridor_length,
            "bounded": self.bounded,
            "rows": [r.to_dict() for r in self.rows],
        }


def _check_premises(g: GroupElement, v: Word, budgets: Budgets) -> None:
    if not v:
        raise PremiseError("fixed word v must be nonempty")
    image, rest = act_and_section(g, v)
    if image != v:
        raise PremiseError(f"g does not fix v: g({format_word(v)}) = {format_word(image)}")
    if not equal(rest, g, budgets.closure_cap):
        raise PremiseError(f"g|{format_word(v)} is not equal to g")


def displaced_word(g: GroupElement, max_length: int = MAX_AUTO_BASE_LENGTH) -> Optional[Word]:
    """Shortest, then lexicographically first, word moved by g."""
    letters = g.automaton.letters
    for length in range(1, max_length + 1):
        for w in itertools.product(letters, repeat=length):
            if act(g, w) != w:
                return tuple(w)
    return None


def divergence_experiment(
    automaton: MealyAutomaton,
    g: GroupElement,
    v: Sequence[int],
    w: Optional[Sequence[int]] = None,
    n: int = 1,
    k_max: int = 4,
    ball_depth: Optional[int] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> DivergenceReport:
    """
    Measure outside-ball distances between v^k w and g^n(v^k w) for k = 1..k_max.

    Raises:
        PremiseError: g does not fix v, g|v != g, or g^n moves no base word
        BudgetExceededError: the ball needs more than ball_vertex_budget vertices
    """
    if n < 1 or k_max < 1:
        raise ValueError("n and k_max must be at least 1")
    v = tuple(v)
    _check_premises(g, v, budgets)
    gn = power(g, n)

    if w is None:
        w = displaced_word(gn)
        if w is None:
            raise PremiseError(f"{format_element(gn)} moves no word of length <= {MAX_AUTO_BASE_LENGTH}")
    w = tuple(w)
    if act(gn, w) == w:
        raise PremiseError(f"{format_element(gn)} fixes the base word {format_word(w)}")

    depth = ball_depth if ball_depth is not None else k_max * len(v) + len(w)
    if depth < k_max * len(v) + len(w):
        raise ValueError(f"ball depth {depth} is smaller than |v^{k_max} w|")
    k = automaton.alphabet_size
    if ball_size(k, depth) > budgets.ball_vertex_budget:
        raise BudgetExceededError("ball_vertex_budget", budgets.ball_vertex_budget, f"depth {depth}")

    ball = build_ball(automaton, depth, budgets.ball_vertex_budget)
    report = DivergenceReport(
        automaton=automaton.name,
        g=format_element(g),
        v=format_word(v, k),
        w=format_word(w, k),
        n=n,
        ball_depth=depth,
    )
    corridor = n * len(g)
    for step in range(1, k_max + 1):
        base = v * step + w
        image = act(gn, base)
        measured = outside_ball_distance(ball, base, image, len(base))
        report.rows.append(
            DivergenceRow(step, len(base), corridor, measured, format_word(base, k), format_word(image, k))
        )
        logger.debug(f"[Divergence] k={step}: radius {len(base)}, corridor {corridor}, measured {measured}")

    logger.info(
        f"[Divergence] {automaton.name}: g={report.g} v={report.v} w={report.w} n={n}, "
        f"bounded={report.bounded}"
    )
    return report


def divergence_table(report: DivergenceReport) -> pd.DataFrame:
    """One row per k: radius, corridor, measured."""
    return pd.DataFrame(
        [
            {"k": r.k, "radius": r.radius, "corridor": r.corridor_length, "measured": r.measured}
            for r in report.rows
        ],
        columns=["k", "radius", "corridor", "measured"],
    )


def orbit_profile(g: GroupElement, max_depth: int) -> List[int]:
    """Largest orbit of g on each level 1..max_depth."""
    return [max(orbit_sizes(g, depth)) for depth in range(1, max_depth + 1)]
