"""
Element Algebra - Finite and Eventually Periodic Words

Finite words are tuples of letters. EPWord u(w)^inf is kept in canonical form:
the period is primitive and the preperiod never ends with the period's last
letter (otherwise the period could be rotated one step left into it). Two
canonical EPWords are equal exactly when they denote the same infinite word.

Text forms (letters are decimal digits; comma-separated when k > 10):
    010          finite word          e, -, (empty)  empty word
    001(101)^inf u(w)^inf             10^inf         shorthand for 1(0)^inf
"""

import re
from dataclasses import dataclass
from typing import Sequence, Tuple

from ..exceptions import ExpressionSyntaxError
from .stats import counted

Word = Tuple[int, ...]

EMPTY_WORD_TOKENS = {"", "e", "-", "ε"}
INF_SUFFIXES = ("^inf", "^∞")

EP_RE = re.compile(r"^\s*([0-9,]*)\((\s*[0-9,]+\s*)\)\s*$")


def primitive_root(w: Sequence[int]) -> Word:
    w = tuple(w)
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True)
class EPWord:
    """Infinite word preperiod . period^inf (canonical when built by canonical_ep)."""
    preperiod: Word
    period: Word

    def prefix(self, n: int) -> Word:
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        rest = n - len(self.preperiod)
        reps = -(-rest // len(self.period))
        return self.preperiod + (self.period * reps)[:rest]

    def __str__(self) -> str:
        return format_ep(self)


@counted("canonical_ep")
def canonical_ep(u: Sequence[int], w: Sequence[int]) -> EPWord:
    """Canonical EPWord for u.w^inf. Raises ValueError on an empty period."""
    if not w:
        raise ValueError("eventually periodic word needs a nonempty period")
    preperiod = list(u)
    period = primitive_root(w)
    while preperiod and preperiod[-1] == period[-1]:
        preperiod.pop()
        period = period[-1:] + period[:-1]
    return EPWord(tuple(preperiod), period)


@counted("shift_equivalent")
def shift_equivalent(x: EPWord, y: EPWord) -> bool:
    """True iff x and y share a common suffix: primitive periods agree up to rotation."""
    px = primitive_root(x.period)
    py = primitive_root(y.period)
    if len(px) != len(py):
        return False
    return any(px[i:] + px[:i] == py for i in range(len(px)))


def _letter_separator(alphabet_size: int) -> str:
    return "," if alphabet_size > 10 else ""


def format_word(word: Sequence[int], alphabet_size: int = 2) -> str:
    if not word:
        return "e"
    return _letter_separator(alphabet_size).join(str(x) for x in word)


def format_ep(x: EPWord, alphabet_size: int = 2) -> str:
    pre = format_word(x.preperiod, alphabet_size) if x.preperiod else ""
    return f"{pre}({format_word(x.period, alphabet_size)})^inf"


def parse_word(text: str, alphabet_size: int, source: str = "", offset: int = 0) -> Word:
    """
    Parse a finite word. `source`/`offset` locate the word inside a larger
    expression for error reporting.
    """
    source = source or text
    stripped = text.strip()
    if stripped in EMPTY_WORD_TOKENS:
        return ()
    base = offset + text.find(stripped)
    if "," in stripped or alphabet_size > 10:
        pieces = stripped.split(",")
    else:
        pieces = list(stripped)
    letters = []
    position = base
    for piece in pieces:
        token = piece.strip()
        if not token.isdigit():
            raise ExpressionSyntaxError(f"invalid letter '{token}'", source, position, "a letter")
        letter = int(token)
        if letter >= alphabet_size:
            raise ExpressionSyntaxError(
                f"letter {letter} outside alphabet 0..{alphabet_size - 1}", source, position
            )
        letters.append(letter)
        position += len(piece) + (1 if "," in stripped else 0)
    return tuple(letters)


def parse_ep(text: str, alphabet_size: int) -> EPWord:
    """Parse u(w)^inf, or the shorthand u x^inf, into canonical form."""
    body = text.strip()
    for suffix in INF_SUFFIXES:
        if body.endswith(suffix):
            body = body[: -len(suffix)]
            break
    else:
        raise ExpressionSyntaxError("missing '^inf' suffix", text, len(text.rstrip()), "'^inf'")

    match = EP_RE.match(body)
    if match:
        u = parse_word(match.group(1), alphabet_size, text, match.start(1))
        w = parse_word(match.group(2), alphabet_size, text, match.start(2))
        return canonical_ep(u, w)

    if "(" in body or ")" in body:
        raise ExpressionSyntaxError("malformed period", text, max(body.find("("), 0), "'u(w)^inf'")
    letters = parse_word(body, alphabet_size, text, 0)
    if not letters:
        raise ExpressionSyntaxError("empty period", text, 0, "at least one letter")
    return canonical_ep(letters[:-1], letters[-1:])
