"""
Mealy core: text format, validation, inverse, product, minimization, DOT export.
"""

import pytest

from common.element_algebra import act, generator
from common.exceptions import AutomatonParseError, BudgetExceededError, InvalidAutomatonError
from common.mealy_core import (
    MealyAutomaton,
    SignedState,
    acts_trivially,
    compose_automata,
    inverse_automaton,
    minimize,
    parse_automaton,
    product_automaton,
    render_dot,
    serialize_automaton,
)

AUT_861 = """
# odd states out
name: 861
alphabet: 2
state a: 0->1@c ; 1->0@b
state b: 0->0@c ; 1->1@b
state c: 0->0@b ; 1->1@a
"""


def test_parse_861():
    automaton = parse_automaton(AUT_861)
    assert automaton.name == "861"
    assert automaton.states == ("a", "b", "c")
    assert automaton.alphabet_size == 2
    assert automaton.active_states() == ["a"]
    assert automaton.transitions[("a", 0)] == (1, "c")
    assert automaton.transitions[("c", 1)] == (1, "a")


def test_parse_uses_fallback_name():
    text = "alphabet: 2\nstate x: 0->1@x ; 1->0@x\n"
    assert parse_automaton(text, name="flip").name == "flip"


@pytest.mark.parametrize("text, line", [
    ("alphabet: 2\nstate a: 0->0@a ; 1->0@a\n", 2),
    ("alphabet: 2\nstate a: 0->1@z ; 1->0@a\n", 2),
    ("alphabet: 2\nstate a: 0->1@a ; 1->0@a\nstate a: 0->0@a ; 1->1@a\n", 3),
    ("alphabet: 2\nstate a: 0=>1@a ; 1->0@a\n", 2),
    ("alphabet: 2\n\nstate a: 0->1@a\n", 3),
    ("state a: 0->1@a ; 1->0@a\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(AutomatonParseError) as excinfo:
        parse_automaton(text)
    assert excinfo.value.line == line
    assert f"line {line}" in str(excinfo.value)


def test_parse_error_names_the_problem():
    with pytest.raises(AutomatonParseError, match="non-bijective"):
        parse_automaton("alphabet: 2\nstate a: 0->0@a ; 1->0@a\n")
    with pytest.raises(AutomatonParseError, match="undefined next state 'z'"):
        parse_automaton("alphabet: 2\nstate a: 0->1@z ; 1->0@a\n")


def test_from_rows_rejects_non_bijective_state():
    with pytest.raises(InvalidAutomatonError):
        MealyAutomaton.from_rows("bad", 2, [("a", [(0, "a"), (0, "a")])])


def test_serialize_round_trip(catalogue_automaton):
    for key in (749, 861, 2427):
        automaton = catalogue_automaton(key)
        assert parse_automaton(serialize_automaton(automaton)) == automaton


def test_inverse_transitions_920(catalogue_automaton):
    inverse = inverse_automaton(catalogue_automaton(920))
    assert inverse.states == ("a^-1", "b^-1", "c^-1")
    # a writes 1 on 0 and moves to b, so a^-1 reads 1, writes 0, moves to b^-1
    assert inverse.transitions[("a^-1", 1)] == (0, "b^-1")
    assert inverse.transitions[("b^-1", 1)] == (1, "b^-1")


def test_inverse_twice_restores(catalogue_automaton):
    automaton = catalogue_automaton(861)
    assert inverse_automaton(inverse_automaton(automaton)) == automaton


def test_inverse_acts_as_inverse(catalogue_automaton):
    automaton = catalogue_automaton(861)
    inverse = inverse_automaton(automaton)
    assert act(generator(inverse, "c^-1"), (1, 1, 1, 1)) == (1, 0, 1, 0)
    assert act(generator(automaton, "c", -1), (1, 1, 1, 1)) == (1, 0, 1, 0)
    assert act(generator(automaton, "c"), (1, 0, 1, 0)) == (1, 1, 1, 1)


@pytest.mark.parametrize("key, label", [(882, "b"), (887, "a")])
def test_square_of_involution_minimizes_to_one_trivial_state(catalogue_automaton, key, label):
    automaton = catalogue_automaton(key)
    s = automaton.state_index(label)
    product = product_automaton(automaton, (SignedState(s), SignedState(s)))
    assert product.size == 3
    assert acts_trivially(product, 0)
    result = minimize(product)
    assert result.automaton.size == 1
    assert result.merged == 2


def test_product_of_generator_reaches_its_states(catalogue_automaton):
    automaton = catalogue_automaton(861)
    product = product_automaton(automaton, (SignedState(automaton.state_index("c")),))
    assert sorted(product.states) == ["a", "b", "c"]
    assert not acts_trivially(product, 0)


def test_product_budget(catalogue_automaton):
    automaton = catalogue_automaton(861)
    with pytest.raises(BudgetExceededError):
        product_automaton(automaton, (SignedState(2), SignedState(0)), max_states=1)


def test_product_rejects_empty_word(catalogue_automaton):
    with pytest.raises(ValueError):
        product_automaton(catalogue_automaton(861), ())


def _run(automaton, state, word):
    out = []
    for x in word:
        y, state = automaton.transition(state, x)
        out.append(y)
    return tuple(out)


def test_compose_runs_inner_first(odometer):
    square = compose_automata(odometer, odometer)
    # a(110) = 001 and a(001) = 101
    assert _run(square, 0, (1, 1, 0)) == (1, 0, 1)
    assert square.name == "odometer*odometer"


def test_compose_with_inverse_acts_trivially(odometer):
    result = minimize(compose_automata(odometer, inverse_automaton(odometer)))
    assert acts_trivially(result.automaton, 0)
    assert result.automaton.size == 1


def test_compose_budget_and_alphabet(odometer):
    with pytest.raises(BudgetExceededError):
        compose_automata(odometer, odometer, max_states=1)
    ternary = MealyAutomaton.from_rows("cycle3", 3, [("s", [(1, "s"), (2, "s"), (0, "s")])])
    with pytest.raises(ValueError):
        compose_automata(odometer, ternary)


def test_minimize_merges_equivalent_states():
    automaton = MealyAutomaton.from_rows("dup", 2, [
        ("a", [(1, "x"), (0, "a")]),
        ("x", [(0, "y"), (1, "y")]),
        ("y", [(0, "x"), (1, "x")]),
    ])
    result = minimize(automaton)
    assert result.automaton.size == 2
    assert result.class_of == (0, 1, 1)
    assert result.merged == 1


def test_minimize_keeps_reduced_automaton(catalogue_automaton):
    result = minimize(catalogue_automaton(861))
    assert result.automaton.size == 3
    assert result.merged == 0


def test_render_dot_edges(catalogue_automaton):
    source = render_dot(catalogue_automaton(861))
    assert source.startswith("digraph automaton_861")
    assert 'a -> c [label="0|1"]' in source
    assert 'c -> a [label="1|1"]' in source
    assert source.count("->") == 6
