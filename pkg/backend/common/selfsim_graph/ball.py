"""
Self-Similarity Graph - Finite Balls

Vertices are the words of length <= N. Horizontal edges join u and s(u) for
every state s (positive generators only, self-loops dropped); vertical edges
join v and xv for every letter x. The empty word sits at distance |u| from u.

Distances are measured inside the ball. A geodesic of the full graph may
leave any finite ball, so in-ball values are upper bounds for the true
distance between two vertices; outside-ball distances only ever use paths
that stay in the ball as well.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import networkx as nx
from graphviz import Graph

from ..config import DEFAULT_BUDGETS
from ..element_algebra import Word, format_word, generator, level_permutation
from ..exceptions import BudgetExceededError
from ..mealy_core import MealyAutomaton

logger = logging.getLogger(__name__)

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


@dataclass
class GraphBall:
    automaton: MealyAutomaton
    depth: int
    graph: nx.Graph

    @property
    def vertex_count(self) -> int:
        return self.graph.number_of_nodes()

    def edges_of_kind(self, kind: str) -> List[tuple]:
        return [(u, v) for u, v, data in self.graph.edges(data=True) if data["kind"] == kind]

    def horizontal_edges(self) -> List[tuple]:
        return self.edges_of_kind(HORIZONTAL)

    def vertical_edges(self) -> List[tuple]:
        return self.edges_of_kind(VERTICAL)

    def max_degree(self) -> int:
        return max((d for _, d in self.graph.degree()), default=0)


def ball_size(alphabet_size: int, depth: int) -> int:
    return sum(alphabet_size ** n for n in range(depth + 1))


def build_ball(automaton: MealyAutomaton, depth: int, vertex_budget: Optional[int] = None) -> GraphBall:
    """
    Ball of radius depth around the empty word.

    Raises:
        BudgetExceededError: more than vertex_budget words
    """
    if depth < 0:
        raise ValueError(f"ball depth must be nonnegative, got {depth}")
    budget = vertex_budget if vertex_budget is not None else DEFAULT_BUDGETS.ball_vertex_budget
    k = automaton.alphabet_size
    if ball_size(k, depth) > budget:
        raise BudgetExceededError("ball_vertex_budget", budget, f"depth {depth} needs {ball_size(k, depth)} vertices")

    graph = nx.Graph()
    graph.add_node(())
    previous: List[Word] = [()]
    generators = [generator(automaton, s) for s in range(automaton.size)]

    for n in range(1, depth + 1):
        level = [tuple(w) for w in itertools.product(automaton.letters, repeat=n)]
        graph.add_nodes_from(level)
        for v in previous:
            for x in automaton.letters:
                graph.add_edge(v, (x,) + v, kind=VERTICAL)
        for s, g in zip(automaton.states, generators):
            perm = level_permutation(g, n, budget).perm.tolist()
            for i, j in enumerate(perm):
                if i == j:
                    continue
                u, w = level[i], level[j]
                if graph.has_edge(u, w):
                    graph[u][w]["states"].add(s)
                else:
                    graph.add_edge(u, w, kind=HORIZONTAL, states={s})
        previous = level

    logger.debug(
        f"[Ball] {automaton.name} depth {depth}: {graph.number_of_nodes()} vertices, "
        f"{graph.number_of_edges()} edges"
    )
    return GraphBall(automaton, depth, graph)


def _require(ball: GraphBall, word: Word) -> None:
    if word not in ball.graph:
        raise ValueError(f"vertex {format_word(word, ball.automaton.alphabet_size)} is not in the ball")


def distance(ball: GraphBall, u: Sequence[int], v: Sequence[int]) -> Optional[int]:
    """In-ball graph distance, None when unreachable."""
    u, v = tuple(u), tuple(v)
    _require(ball, u)
    _require(ball, v)
    try:
        return nx.shortest_path_length(ball.graph, u, v)
    except nx.NetworkXNoPath:
        return None


def outside_ball_distance(ball: GraphBall, u: Sequence[int], v: Sequence[int], radius: int) -> Optional[int]:
    """Distance using only vertices of length >= radius; None when unreachable."""
    u, v = tuple(u), tuple(v)
    _require(ball, u)
    _require(ball, v)
    if len(u) < radius or len(v) < radius:
        raise ValueError(f"both endpoints must have length >= {radius}")
    outside = ball.graph.subgraph(w for w in ball.graph if len(w) >= radius)
    try:
        return nx.shortest_path_length(outside, u, v)
    except nx.NetworkXNoPath:
        return None


def degree_bound(automaton: MealyAutomaton) -> int:
    """Uniform degree bound: s(w) and s^-1(w) per state, one edge per letter below, one above."""
    return 2 * automaton.size + automaton.alphabet_size + 1


def render_ball_dot(ball: GraphBall) -> str:
    """DOT source: vertical edges dashed, horizontal edges solid and labelled by states."""
    k = ball.automaton.alphabet_size
    dot = Graph(name=f"ball_{ball.automaton.name}_{ball.depth}")
    dot.attr("node", shape="plaintext")
    names: Dict[Word, str] = {}
    for word in sorted(ball.graph, key=lambda w: (len(w), w)):
        names[word] = f"w{len(names)}"
        dot.node(names[word], label=format_word(word, k) if word else "ε")
    for u, v, data in sorted(ball.graph.edges(data=True), key=lambda e: (len(e[0]), e[0], len(e[1]), e[1])):
        if data["kind"] == VERTICAL:
            dot.edge(names[u], names[v], style="dashed")
        else:
            dot.edge(names[u], names[v], label=",".join(sorted(data["states"])))
    return dot.source
