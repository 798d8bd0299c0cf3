"""
Element expression grammar.
"""

import pytest

from common.element_algebra import format_element, invert, parse_element
from common.exceptions import ExpressionSyntaxError
from common.mealy_core import inverse_automaton


@pytest.mark.parametrize("key, text, formatted", [
    (749, "a^2*b*c", "a^2*b*c"),
    (749, "a^2bc", "a^2*b*c"),
    (882, "acacbc", "a*c*a*c*b*c"),
    (887, "(c*a)^2", "c*a*c*a"),
    (887, "c^-1*b^-1*a^-2", "c^-1*b^-1*a^-2"),
    (861, "1", "1"),
    (861, "a * 1 * b", "a*b"),
    (887, "section(b*c,1)", "c*a"),
])
def test_parse_and_format(catalogue_automaton, key, text, formatted):
    assert format_element(parse_element(catalogue_automaton(key), text)) == formatted


def test_inv_matches_manual_inverse(catalogue_automaton):
    automaton = catalogue_automaton(749)
    g = parse_element(automaton, "a^2*b*c")
    assert parse_element(automaton, "inv(a^2*b*c)").word == invert(g).word
    assert parse_element(automaton, "inv(a^2*b*c)").word == parse_element(automaton, "c^-1*b^-1*a^-2").word


def test_inverse_labels_parse_as_single_states(catalogue_automaton):
    inverse = inverse_automaton(catalogue_automaton(920))
    g = parse_element(inverse, "a^-1*b^-1")
    assert len(g) == 2
    assert format_element(g) == "a^-1*b^-1"


@pytest.mark.parametrize("text", ["", "a*(b", "z", "a^", "a^-", "section(a,2)", "section(a,0", "a)", "inv a"])
def test_syntax_errors(catalogue_automaton, text):
    with pytest.raises(ExpressionSyntaxError):
        parse_element(catalogue_automaton(861), text)


def test_error_points_at_position(catalogue_automaton):
    with pytest.raises(ExpressionSyntaxError) as excinfo:
        parse_element(catalogue_automaton(861), "a*z")
    assert excinfo.value.position == 2
    assert "^" in str(excinfo.value)
