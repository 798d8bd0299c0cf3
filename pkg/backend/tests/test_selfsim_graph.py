"""
Self-similarity graph balls and the divergence experiment.
"""

import itertools
from collections import deque

import pytest

from common.config import Budgets
from common.element_algebra import generator, parse_element
from common.exceptions import BudgetExceededError, PremiseError
from common.mealy_core import MealyAutomaton
from common.selfsim_graph import (
    build_ball,
    degree_bound,
    displaced_word,
    distance,
    divergence_experiment,
    divergence_table,
    orbit_profile,
    outside_ball_distance,
    render_ball_dot,
)


def test_ball_861_depth_2(catalogue_automaton):
    ball = build_ball(catalogue_automaton(861), 2)
    assert ball.vertex_count == 7
    assert len(ball.vertical_edges()) == 6
    # a swaps 0/1 and 00/10, 01/11; c swaps 10/11; b fixes both levels
    assert len(ball.horizontal_edges()) == 4
    assert ball.max_degree() <= degree_bound(catalogue_automaton(861)) == 9


def test_degree_bound_counts_both_directions_of_a_state():
    # s adds 1 mod 3 to every letter, so s(w) and s^-1(w) are different neighbours
    automaton = MealyAutomaton.from_rows("cycle3", 3, [("s", [(1, "s"), (2, "s"), (0, "s")])])
    ball = build_ball(automaton, 2)
    assert ball.vertex_count == 13
    assert len(ball.horizontal_edges()) == 12
    assert ball.max_degree() == 6
    assert ball.max_degree() > automaton.size + automaton.alphabet_size + 1
    assert ball.max_degree() <= degree_bound(automaton) == 6


def test_ball_distances(catalogue_automaton):
    ball = build_ball(catalogue_automaton(861), 2)
    assert distance(ball, (), (1, 0)) == 2
    assert distance(ball, (1, 0), (1, 1)) == 1
    assert outside_ball_distance(ball, (0, 0), (1, 0), 2) == 1
    assert outside_ball_distance(ball, (1, 0), (0, 1), 2) == 2


def test_ball_of_trivial_automaton_has_no_horizontal_edges(trivial):
    ball = build_ball(trivial, 3)
    assert ball.vertex_count == 15
    assert ball.horizontal_edges() == []
    assert outside_ball_distance(ball, (0, 0), (1, 0), 2) is None


def test_ball_budget(catalogue_automaton):
    with pytest.raises(BudgetExceededError):
        build_ball(catalogue_automaton(861), 10, vertex_budget=100)


def test_vertex_outside_ball(catalogue_automaton):
    ball = build_ball(catalogue_automaton(861), 1)
    with pytest.raises(ValueError):
        distance(ball, (), (0, 0))


def test_ball_dot(catalogue_automaton):
    source = render_ball_dot(build_ball(catalogue_automaton(861), 1))
    assert source.startswith("graph ball_861_1")
    assert "style=dashed" in source
    assert "label=a" in source


def test_displaced_word(catalogue_automaton):
    c = generator(catalogue_automaton(861), "c")
    assert displaced_word(c) == (1, 0)


def _brute_force_distance(automaton, depth, source, target, min_length=0):
    """BFS over words of length min_length..depth, stepping by one letter in front or one state."""

    def run(state, word):
        image = []
        for x in word:
            image.append(automaton.outputs[state][x])
            state = automaton.targets[state][x]
        return tuple(image)

    neighbours = {}

    def link(u, w):
        neighbours.setdefault(u, set()).add(w)
        neighbours.setdefault(w, set()).add(u)

    for length in range(min_length, depth + 1):
        for u in itertools.product(automaton.letters, repeat=length):
            neighbours.setdefault(u, set())
            if length < depth:
                for x in automaton.letters:
                    link(u, (x,) + u)
            for s in range(automaton.size):
                image = run(s, u)
                if image != u:
                    link(u, image)

    seen = {tuple(source): 0}
    queue = deque([tuple(source)])
    while queue:
        u = queue.popleft()
        if u == tuple(target):
            return seen[u]
        for w in neighbours[u]:
            if w not in seen:
                seen[w] = seen[u] + 1
                queue.append(w)
    return None


def test_divergence_861_short_base_word(catalogue_automaton):
    automaton = catalogue_automaton(861)
    report = divergence_experiment(automaton, generator(automaton, "c"), (0, 1, 0), n=3)
    assert report.w == "10"
    assert report.ball_depth == 14
    assert report.corridor_length == 3
    assert [row.radius for row in report.rows] == [5, 8, 11, 14]
    # c^3(10) = 11 is one horizontal step away on every level
    assert [row.measured for row in report.rows] == [1, 1, 1, 1]
    assert report.bounded

    table = divergence_table(report)
    assert list(table.columns) == ["k", "radius", "corridor", "measured"]
    assert table["radius"].tolist() == [5, 8, 11, 14]


def test_divergence_861_matches_brute_force(catalogue_automaton):
    automaton = catalogue_automaton(861)
    w = (1, 0, 1, 0, 1, 1, 1, 0)
    report = divergence_experiment(automaton, generator(automaton, "c"), (0, 1, 0), w=w, n=3, k_max=2)
    assert report.ball_depth == 14
    assert report.corridor_length == 3
    assert [row.radius for row in report.rows] == [11, 14]

    # c^3(w) = 11101010 lies three steps from w even inside the ball
    assert _brute_force_distance(automaton, 14, w, (1, 1, 1, 0, 1, 0, 1, 0)) == 3

    for row in report.rows:
        base = tuple(int(x) for x in row.base)
        image = tuple(int(x) for x in row.image)
        assert row.measured == _brute_force_distance(automaton, 14, base, image, min_length=row.radius)
    assert [row.measured for row in report.rows] == [3, 3]
    assert report.bounded


def test_divergence_premises(catalogue_automaton):
    automaton = catalogue_automaton(861)
    c = generator(automaton, "c")
    with pytest.raises(PremiseError):
        divergence_experiment(automaton, c, (1,))
    with pytest.raises(PremiseError):
        divergence_experiment(automaton, c, (0, 1, 0), w=(0, 0))


def test_divergence_budget(catalogue_automaton):
    automaton = catalogue_automaton(887)
    g = parse_element(automaton, "b*c")
    with pytest.raises(BudgetExceededError):
        divergence_experiment(automaton, g, (0, 0), k_max=4, budgets=Budgets(ball_vertex_budget=1000))


def test_orbit_profile(odometer):
    assert orbit_profile(generator(odometer, "a"), 4) == [2, 4, 8, 16]
