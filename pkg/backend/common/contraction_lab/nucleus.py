"""
Contraction Lab - Nucleus Semi-Algorithm

N starts as {1} u S u S^-1 (up to equality). Each round multiplies every new
member with every member (both orders), explores the section closure of each
product by reduced words and adds the closure elements that recur at
arbitrarily large depth, i.e. those reachable from a directed cycle. The run
stabilizes when a round adds nothing; it gives up past the size, round or
work budget. A stabilized N is closed under sections and its cycle-reachable part
is the nucleus.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Set

import networkx as nx

from ..config import DEFAULT_BUDGETS, Budgets
from ..element_algebra import GroupElement, format_element, generator, identity, reduce_word
from ..exceptions import BudgetExceededError
from ..mealy_core import MealyAutomaton, SignedWord
from .registry import ElementRegistry

logger = logging.getLogger(__name__)


class NucleusStatus(str, Enum):
    STABILIZED = "Stabilized"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass
class NucleusReport:
    automaton: str
    status: NucleusStatus
    elements: List[GroupElement] = field(default_factory=list)
    minimal_nucleus: List[GroupElement] = field(default_factory=list)
    rounds: int = 0
    size: int = 0
    products_examined: int = 0
    max_closure_size: int = 0
    work_spent: int = 0
    size_budget: int = 0
    depth_budget: int = 0
    note: str = ""

    @property
    def stabilized(self) -> bool:
        return self.status == NucleusStatus.STABILIZED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "automaton": self.automaton,
            "status": self.status.value,
            "size": self.size,
            "rounds": self.rounds,
            "elements": [format_element(g) for g in self.elements],
            "minimal_nucleus": [format_element(g) for g in self.minimal_nucleus],
            "minimal_nucleus_size": len(self.minimal_nucleus),
            "products_examined": self.products_examined,
            "max_closure_size": self.max_closure_size,
            "work_spent": self.work_spent,
            "size_budget": self.size_budget,
            "depth_budget": self.depth_budget,
            "note": self.note,
        }


def cycle_reachable(graph: nx.DiGraph) -> Set:
    """Nodes lying on a directed cycle or reachable from one."""
    on_cycle: Set = set()
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            on_cycle |= component
        else:
            node = next(iter(component))
            if graph.has_edge(node, node):
                on_cycle.add(node)
    reachable = set(on_cycle)
    for node in on_cycle:
        reachable |= nx.descendants(graph, node)
    return reachable


def section_closure_graph(automaton: MealyAutomaton, word: SignedWord, cap: int) -> nx.DiGraph:
    """Directed graph of reduced words: w -> w|x for every letter x."""
    graph = nx.DiGraph()
    start = reduce_word(automaton, word)
    graph.add_node(start)
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for x in automaton.letters:
            _, nxt = automaton.thread(current, x)
            target = reduce_word(automaton, nxt)
            if target not in graph:
                if graph.number_of_nodes() >= cap:
                    raise BudgetExceededError("closure_cap", cap, f"product of length {len(word)}")
                queue.append(target)
            graph.add_edge(current, target)
    return graph


def section_digraph(registry: ElementRegistry) -> nx.DiGraph:
    """
    Digraph on registry classes: i -> j when a letter section of member i equals member j.

    Reads a snapshot of the registry; sections outside it are left out and logged.
    """
    automaton = registry.automaton
    members = list(registry)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(members)))
    for i, g in enumerate(members):
        for x in automaton.letters:
            _, nxt = automaton.thread(g.word, x)
            j = registry.find(GroupElement(automaton, nxt))
            if j is None or j >= len(members):
                logger.warning(f"[Nucleus] section {x} of {format_element(g)} is not a registered class")
                continue
            graph.add_edge(i, j)
    return graph


class _WorkMeter:
    """Closure vertices explored plus registry lookups, against nucleus_work."""

    def __init__(self, budget: int):
        self.budget = budget
        self.spent = 0

    @property
    def remaining(self) -> int:
        return self.budget - self.spent

    def charge(self, units: int) -> None:
        self.spent += units
        if self.spent > self.budget:
            raise BudgetExceededError("nucleus_work", self.budget, f"{self.spent} units spent")


def nucleus(automaton: MealyAutomaton, budgets: Budgets = DEFAULT_BUDGETS) -> NucleusReport:
    """
    Run the nucleus semi-algorithm under budgets.nucleus_size, nucleus_depth
    (rounds) and nucleus_work (closure vertices plus registry lookups).

    Never raises for budget outcomes; they are reported as BudgetExceeded.
    """
    size_budget = budgets.nucleus_size
    depth_budget = budgets.nucleus_depth
    closure_cap = min(budgets.closure_cap, budgets.nucleus_work)
    registry = ElementRegistry(automaton, budgets.model_copy(update={"closure_cap": closure_cap}))
    meter = _WorkMeter(budgets.nucleus_work)
    report = NucleusReport(
        automaton=automaton.name,
        status=NucleusStatus.BUDGET_EXCEEDED,
        size_budget=size_budget,
        depth_budget=depth_budget,
    )

    examined_words: Set[SignedWord] = set()
    try:
        registry.add(identity(automaton))
        for signed in automaton.signed_states():
            registry.add(generator(automaton, signed.state, signed.sign))
        new = list(range(len(registry)))
        logger.info(f"[Nucleus] {automaton.name}: starting with {len(registry)} classes")

        while new:
            report.rounds += 1
            if report.rounds > depth_budget:
                report.rounds = depth_budget
                report.note = f"round budget {depth_budget} exhausted"
                return _finish(report, registry, meter)

            current = len(registry)
            added: List[int] = []
            for i in new:
                for j in range(current):
                    for left, right in ((i, j), (j, i)):
                        product = reduce_word(automaton, registry[left].word + registry[right].word)
                        if product in examined_words:
                            continue
                        examined_words.add(product)
                        report.products_examined += 1
                        cap = min(closure_cap, max(meter.remaining, 1))
                        try:
                            graph = section_closure_graph(automaton, product, cap)
                        except BudgetExceededError:
                            if cap < closure_cap:
                                meter.charge(cap + 1)
                            raise
                        meter.charge(graph.number_of_nodes())
                        report.max_closure_size = max(report.max_closure_size, graph.number_of_nodes())
                        for word in sorted(cycle_reachable(graph), key=lambda w: (len(w), w)):
                            meter.charge(1)
                            index, opened = registry.add(GroupElement(automaton, word))
                            if opened:
                                added.append(index)
                                if len(registry) > size_budget:
                                    report.note = f"size budget {size_budget} exceeded in round {report.rounds}"
                                    return _finish(report, registry, meter)
            logger.info(f"[Nucleus] round {report.rounds}: {len(registry)} classes (+{len(added)})")
            new = added
    except BudgetExceededError as e:
        report.note = str(e)
        return _finish(report, registry, meter)

    report.status = NucleusStatus.STABILIZED
    graph = section_digraph(registry)
    report.elements = list(registry)
    report.minimal_nucleus = [registry[i] for i in sorted(cycle_reachable(graph))]
    report.note = "no new elements in last round"
    return _finish(report, registry, meter)


def _finish(report: NucleusReport, registry: ElementRegistry, meter: _WorkMeter) -> NucleusReport:
    report.size = len(registry)
    report.work_spent = meter.spent
    logger.info(
        f"[Nucleus] {report.automaton}: {report.status.value} after {report.rounds} rounds, "
        f"{report.size} classes, {meter.spent} work units"
    )
    return report
