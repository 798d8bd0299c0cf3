"""
Element algebra: action, sections, identity decision, EP words, levels, order.
"""

import pytest

from common.config import Budgets
from common.element_algebra import (
    EPWord,
    OrderKind,
    act,
    act_and_section,
    act_ep,
    canonical_ep,
    compose,
    equal,
    format_element,
    format_ep,
    generator,
    identity,
    invert,
    is_identity,
    level_permutation,
    orbit_sizes,
    order_status,
    parse_element,
    parse_ep,
    parse_word,
    power,
    power_is_identity,
    primitive_root,
    reduce_word,
    section,
    shift_equivalent,
    stats,
)
from common.contraction_lab import Verdict, check_witness
from common.element_algebra.levels import keeps_growing, stall_lengths
from common.exceptions import AutomatonMismatchError, BudgetExceededError, ExpressionSyntaxError
from common.mealy_core import MealyAutomaton


# Composition and sections

def test_rightmost_factor_acts_first(catalogue_automaton):
    automaton = catalogue_automaton(887)
    bc = parse_element(automaton, "b*c")
    assert act(bc, (1,)) == (1,)
    assert format_element(section(bc, (1,))) == "c*a"


def test_witness_861_fixes_and_reproduces(catalogue_automaton):
    automaton = catalogue_automaton(861)
    c = generator(automaton, "c")
    image, rest = act_and_section(c, (0, 1, 0))
    assert image == (0, 1, 0)
    assert rest.word == c.word


def test_section_cocycle_on_composition(catalogue_automaton):
    automaton = catalogue_automaton(749)
    g = parse_element(automaton, "a^2*b*c")
    h = parse_element(automaton, "c*b^-1")
    v = (0, 1, 1)
    lhs = section(compose(g, h), v)
    rhs = compose(section(g, act(h, v)), section(h, v))
    assert equal(lhs, rhs)


def test_act_rejects_foreign_letters(catalogue_automaton):
    with pytest.raises(ValueError):
        act(generator(catalogue_automaton(861), "a"), (0, 2))


def test_elements_of_different_automata_do_not_mix(catalogue_automaton):
    with pytest.raises(AutomatonMismatchError):
        compose(generator(catalogue_automaton(861), "a"), generator(catalogue_automaton(887), "a"))


def test_free_reduction_on_construction(catalogue_automaton):
    automaton = catalogue_automaton(861)
    a = generator(automaton, "a")
    assert compose(a, invert(a)).word == ()
    assert format_element(power(a, -2)) == "a^-2"


# Identity and equality

@pytest.mark.parametrize("key, text", [
    (887, "a^2"), (887, "b^2"), (887, "c^2"), (882, "b^2"), (861, "c*c^-1"),
])
def test_trivial_elements(catalogue_automaton, key, text):
    assert is_identity(parse_element(catalogue_automaton(key), text))


@pytest.mark.parametrize("key, text", [(861, "c"), (861, "a^2"), (887, "b*c"), (882, "acacbc")])
def test_nontrivial_elements(catalogue_automaton, key, text):
    assert not is_identity(parse_element(catalogue_automaton(key), text))


def test_equal_section_identity_887(catalogue_automaton):
    automaton = catalogue_automaton(887)
    assert equal(parse_element(automaton, "section(b*c,1)"), parse_element(automaton, "c*a"))
    assert not equal(parse_element(automaton, "c*a"), parse_element(automaton, "a*c"))


def test_equal_modulo_involutions(catalogue_automaton):
    automaton = catalogue_automaton(882)
    assert equal(parse_element(automaton, "c*a*c*b^3"), parse_element(automaton, "cacb"))
    assert reduce_word(automaton, parse_element(automaton, "a*b*b*a").word) == ()


def test_identity_budget(catalogue_automaton):
    automaton = catalogue_automaton(882)
    g = parse_element(automaton, "acacbc")
    with pytest.raises(BudgetExceededError):
        is_identity(g, closure_cap=1)


# Eventually periodic words

def test_canonical_form_moves_matching_letters():
    assert canonical_ep((0, 1, 0), (1, 0)) == EPWord((), (0, 1))
    assert canonical_ep((1, 1, 0), (0, 0)) == EPWord((1, 1), (0,))
    assert canonical_ep((), (1, 0, 1, 0)) == EPWord((), (1, 0))


def test_canonical_form_rejects_empty_period():
    with pytest.raises(ValueError):
        canonical_ep((0,), ())


def test_primitive_root():
    assert primitive_root((1, 0, 1, 0, 1, 0)) == (1, 0)
    assert primitive_root((1, 0, 0)) == (1, 0, 0)


@pytest.mark.parametrize("text, expected", [
    ("10^inf", EPWord((1,), (0,))),
    ("(10)^inf", EPWord((), (1, 0))),
    ("1(01)^inf", EPWord((), (1, 0))),
    ("001(101)^inf", EPWord((0,), (0, 1, 1))),
    ("0^∞", EPWord((), (0,))),
])
def test_parse_ep(text, expected):
    assert parse_ep(text, 2) == expected


def test_parse_ep_errors():
    with pytest.raises(ExpressionSyntaxError):
        parse_ep("(10)", 2)
    with pytest.raises(ExpressionSyntaxError):
        parse_ep("(12)^inf", 2)


def test_format_ep():
    assert format_ep(parse_ep("11(100)^inf", 2)) == "11(100)^inf"
    assert format_ep(parse_ep("1^inf", 2)) == "(1)^inf"


def test_shift_equivalence():
    assert shift_equivalent(parse_ep("(10)^inf", 2), parse_ep("0(01)^inf", 2))
    assert shift_equivalent(parse_ep("1^inf", 2), parse_ep("0(11)^inf", 2))
    assert not shift_equivalent(parse_ep("(100)^inf", 2), parse_ep("(101)^inf", 2))


def test_parse_word():
    assert parse_word("010", 2) == (0, 1, 0)
    assert parse_word("e", 2) == ()
    assert parse_word("10,3,7", 12) == (10, 3, 7)
    with pytest.raises(ExpressionSyntaxError):
        parse_word("012", 2)


def test_act_ep_969(catalogue_automaton):
    automaton = catalogue_automaton(969)
    c = generator(automaton, "c")
    assert act_ep(c, parse_ep("(101)^inf", 2)) == parse_ep("11(100)^inf", 2)
    assert act_ep(invert(c), parse_ep("(101)^inf", 2)) == parse_ep("1^inf", 2)


def test_act_ep_agrees_with_finite_prefixes(catalogue_automaton):
    automaton = catalogue_automaton(749)
    g = parse_element(automaton, "a^2*b*c")
    x = parse_ep("0^inf", 2)
    image = act_ep(g, x)
    assert image == parse_ep("001(101)^inf", 2)
    assert act(g, x.prefix(20)) == image.prefix(20)


# Levels and order

def test_level_permutation_887(catalogue_automaton):
    a = generator(catalogue_automaton(887), "a")
    first = level_permutation(a, 1)
    assert first.order() == 2
    assert first.cycle_type() == {2: 1}
    second = level_permutation(a, 2)
    assert second.order() == 2
    assert second.cycle_type() == {2: 2}
    assert second.image((0, 0)) == (1, 0)


def test_level_permutation_budget(catalogue_automaton):
    a = generator(catalogue_automaton(887), "a")
    with pytest.raises(BudgetExceededError):
        level_permutation(a, 10, word_budget=512)


def test_orbits_of_odometer(odometer):
    a = generator(odometer, "a")
    assert orbit_sizes(a, 3) == [8]
    assert orbit_sizes(generator(odometer, "e"), 2) == [1, 1, 1, 1]


def test_order_finite(catalogue_automaton):
    status = order_status(generator(catalogue_automaton(887), "a"))
    assert status.kind == OrderKind.FINITE
    assert status.order == 2
    assert str(status) == "Finite(2)"


def test_order_of_identity(catalogue_automaton):
    status = order_status(identity(catalogue_automaton(861)))
    assert status.is_finite and status.order == 1


def test_order_of_odometer_passes_threshold(odometer):
    status = order_status(generator(odometer, "a"))
    assert status.kind == OrderKind.INFINITE_EVIDENCE
    assert status.depth == 13
    assert status.ord_sequence == tuple(2 ** n for n in range(1, 14))
    assert status.increases() == 13


def test_order_unknown_without_enough_depth(odometer):
    status = order_status(generator(odometer, "a"), Budgets(max_depth=3))
    assert status.kind == OrderKind.UNKNOWN
    assert status.ord_sequence == (2, 4, 8)


def test_order_witness_861(catalogue_automaton):
    status = order_status(generator(catalogue_automaton(861), "c"))
    assert status.is_infinite_evidence
    assert status.increases() >= 4


def _truncated_odometer() -> MealyAutomaton:
    """a0 adds 1 with carry through the first ten letters only; g = (g, a0)."""
    rows = [("g", [(0, "g"), (1, "a0")])]
    for i in range(9):
        rows.append((f"a{i}", [(1, "e"), (0, f"a{i + 1}")]))
    rows.append(("a9", [(1, "e"), (0, "e")]))
    rows.append(("e", [(0, "e"), (1, "e")]))
    return MealyAutomaton.from_rows("truncated", 2, rows)


def test_power_is_identity(catalogue_automaton, odometer):
    a = generator(catalogue_automaton(887), "a")
    assert power_is_identity(a, 2)
    assert not power_is_identity(a, 1)
    assert not power_is_identity(generator(odometer, "a"), 8)
    assert power_is_identity(identity(odometer), 5)
    a0 = generator(_truncated_odometer(), "a0")
    assert power_is_identity(a0, 1024)
    assert power_is_identity(a0, -2048)
    assert not power_is_identity(a0, 512)


def test_power_is_identity_budget():
    with pytest.raises(BudgetExceededError):
        power_is_identity(generator(_truncated_odometer(), "a0"), 1024, state_budget=1)


def test_order_of_truncated_odometer_is_finite():
    status = order_status(generator(_truncated_odometer(), "a0"))
    assert status.kind == OrderKind.FINITE
    assert status.order == 1024
    assert status.depth == 10
    assert status.ord_sequence == tuple(2 ** n for n in range(1, 11)) + (1024, 1024)


def test_settled_order_without_decision_is_unknown():
    status = order_status(generator(_truncated_odometer(), "a0"), Budgets(power_state_budget=1))
    assert status.kind == OrderKind.UNKNOWN
    assert status.ord_sequence[-7:] == (1024,) * 7
    assert status.increases() == 10
    assert "settled at 1024" in status.note


def test_finite_group_witness_is_rejected():
    automaton = _truncated_odometer()
    report = check_witness(automaton, generator(automaton, "g"), (0,))
    assert report.fixes_v and report.section_is_self
    assert report.order.is_finite
    assert report.order.order == 1024
    assert report.verdict == Verdict.REJECTED


def test_witness_861_order_sequence(catalogue_automaton):
    status = order_status(generator(catalogue_automaton(861), "c"))
    assert status.ord_sequence == (1, 2, 2, 4, 4, 4, 4) + (8,) * 8 + (16,)
    assert status.depth == 16
    assert status.increases() == 4


def test_long_final_stall_after_doubling_stalls_is_evidence(catalogue_automaton):
    # stalls of 1, 3 and 7 repeats; b^16 is too large to decide within the default budget
    status = order_status(generator(catalogue_automaton(920), "b"))
    assert status.ord_sequence == (1, 2, 4, 4, 8, 8, 8, 8) + (16,) * 8
    assert status.is_infinite_evidence
    assert "undecided" in status.note


def test_stall_lengths():
    assert stall_lengths([1, 2, 2, 4, 4, 4, 4]) == [1, 1, 3]
    assert stall_lengths([2, 4, 8]) == [0, 0, 0, 0]
    assert keeps_growing([1, 2, 4, 4, 8, 8, 8, 8] + [16] * 8)
    assert not keeps_growing([1, 2, 4, 4, 8, 8, 8, 8] + [16] * 9)
    assert not keeps_growing([2, 4, 8, 8, 8])
    assert keeps_growing([2, 4, 8, 8])


# Counters

def test_operations_are_counted(catalogue_automaton):
    automaton = catalogue_automaton(861)
    stats.reset()
    c = generator(automaton, "c")
    act(c, (0, 1))
    section(c, (0,))
    assert stats.snapshot()["act"] == 1
    assert stats.snapshot()["section"] == 1
    stats.reset()
    assert stats.snapshot() == {}
