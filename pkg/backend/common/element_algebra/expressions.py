"""
Element Algebra - Expression Parser

Recursive-descent parser for the element grammar (docs/GRAMMAR.md):

    expr := term (['*'] term)*
    term := atom ['^' ['-'] INT]
    atom := LABEL | '1' | '(' expr ')' | 'section(' expr ',' word ')' | 'inv(' expr ')'

Juxtaposed labels multiply (acacbc = a*c*a*c*b*c); an exponent binds to the
atom right before it (a^2bc = a*a*b*c). Labels are matched longest first.
"""

import logging
from typing import List

from ..exceptions import ExpressionSyntaxError
from ..mealy_core import MealyAutomaton
from .action import section
from .element import GroupElement, compose, generator, identity, invert, power
from .words import parse_word

logger = logging.getLogger(__name__)

KEYWORDS = ("section", "inv")


class _ExpressionParser:
    def __init__(self, automaton: MealyAutomaton, text: str):
        self.automaton = automaton
        self.text = text
        self.pos = 0
        self.labels = sorted(automaton.states, key=len, reverse=True)

    def error(self, message: str, expected: str = None) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, self.text, self.pos, expected)

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        self.skip_space()
        if not self.text.startswith(token, self.pos):
            raise self.error(f"unexpected {self._found()}", f"'{token}'")
        self.pos += len(token)

    def _found(self) -> str:
        if self.pos >= len(self.text):
            return "end of input"
        return f"'{self.text[self.pos]}'"

    def parse(self) -> GroupElement:
        result = self.parse_expr()
        self.skip_space()
        if self.pos < len(self.text):
            raise self.error(f"unexpected {self._found()}", "'*', a state label or end of input")
        return result

    def starts_atom(self) -> bool:
        c = self.peek()
        if not c or c in "*),^":
            return False
        return True

    def parse_expr(self) -> GroupElement:
        factors: List[GroupElement] = [self.parse_term()]
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                factors.append(self.parse_term())
            elif self.starts_atom():
                factors.append(self.parse_term())
            else:
                break
        result = factors[0]
        for factor in factors[1:]:
            result = compose(result, factor)
        return result

    def parse_term(self) -> GroupElement:
        base = self.parse_atom()
        if self.peek() != "^":
            return base
        self.pos += 1
        self.skip_space()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        exponent_text = self.text[start:self.pos]
        if exponent_text in ("", "-"):
            self.pos = start
            raise self.error(f"unexpected {self._found()}", "an integer exponent")
        return power(base, int(exponent_text))

    def parse_atom(self) -> GroupElement:
        c = self.peek()
        if not c:
            raise self.error("unexpected end of input", "a state label, '1' or '('")
        if c == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.expect(")")
            return inner
        for keyword in KEYWORDS:
            if self.text.startswith(keyword, self.pos):
                after = self.pos + len(keyword)
                rest = self.text[after:].lstrip()
                if rest.startswith("("):
                    self.pos = after
                    return self.parse_call(keyword)
        for label in self.labels:
            if self.text.startswith(label, self.pos):
                self.pos += len(label)
                return generator(self.automaton, label)
        if c == "1":
            self.pos += 1
            return identity(self.automaton)
        raise self.error(f"unknown state {self._found()}", f"one of {', '.join(self.automaton.states)}")

    def parse_call(self, keyword: str) -> GroupElement:
        self.expect("(")
        inner = self.parse_expr()
        if keyword == "inv":
            self.expect(")")
            return invert(inner)
        self.expect(",")
        self.skip_space()
        start = self.pos
        end = self.text.find(")", start)
        if end < 0:
            self.pos = len(self.text)
            raise self.error("unterminated section(...)", "')'")
        word = parse_word(self.text[start:end], self.automaton.alphabet_size, self.text, start)
        self.pos = end + 1
        return section(inner, word)


def parse_element(automaton: MealyAutomaton, text: str) -> GroupElement:
    """
    Parse an element expression over the automaton's states.

    Raises:
        ExpressionSyntaxError: with position and expectation
    """
    if not text.strip():
        raise ExpressionSyntaxError("empty expression", text, 0, "an element")
    return _ExpressionParser(automaton, text).parse()
