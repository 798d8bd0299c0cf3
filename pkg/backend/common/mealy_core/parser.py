"""
Mealy Core - Text Format

Line-oriented UTF-8 format (grammar in docs/GRAMMAR.md):

    # comment
    name: 861
    alphabet: 2
    state a: 0->1@c ; 1->0@b
    state b: 0->0@c ; 1->1@b

Each state line lists `<in>-><out>@<next>` for every letter, separated by ';'.
`name` is optional; `alphabet` must precede the first state line.
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..exceptions import AutomatonParseError
from .models import MealyAutomaton

logger = logging.getLogger(__name__)

LABEL = r"[^\s:;@#,]+"

HEADER_RE = re.compile(r"^\s*(name|alphabet)\s*:\s*(.*?)\s*$")
STATE_RE = re.compile(rf"^(\s*state\s+)({LABEL})\s*:(.*)$")
CELL_RE = re.compile(rf"^\s*(\d+)\s*->\s*(\d+)\s*@\s*({LABEL})\s*$")


@dataclass
class _StateLine:
    label: str
    line: int
    cells: Dict[int, Tuple[int, str, int]]  # letter -> (output, next label, column)


def _strip_comment(raw: str) -> str:
    pos = raw.find("#")
    return raw if pos < 0 else raw[:pos]


def parse_automaton(text: str, name: Optional[str] = None) -> MealyAutomaton:
    """
    Parse automaton text into a validated MealyAutomaton.

    Args:
        text: automaton source in the line format above
        name: fallback name when the text has no `name:` header

    Raises:
        AutomatonParseError: syntax error, non-bijective output map,
            undefined next state, duplicate state (with line/column)
    """
    alphabet: Optional[int] = None
    parsed_name: Optional[str] = None
    state_lines: List[_StateLine] = []
    seen_labels: Dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue

        header = HEADER_RE.match(line)
        if header:
            key, value = header.group(1), header.group(2)
            column = header.start(2) + 1
            if key == "name":
                if not value:
                    raise AutomatonParseError("empty name", lineno, column, "a label")
                parsed_name = value
            else:
                if state_lines:
                    raise AutomatonParseError("alphabet declared after state lines", lineno, 1)
                if not value.isdigit() or int(value) < 1:
                    raise AutomatonParseError(f"invalid alphabet size '{value}'", lineno, column, "a positive integer")
                alphabet = int(value)
            continue

        match = STATE_RE.match(line)
        if not match:
            raise AutomatonParseError(
                "unrecognised line", lineno, len(line) - len(line.lstrip()) + 1,
                "'name:', 'alphabet:' or 'state <label>:'"
            )
        if alphabet is None:
            raise AutomatonParseError("state line before 'alphabet:' header", lineno, 1)

        label = match.group(2)
        if label in seen_labels:
            raise AutomatonParseError(
                f"duplicate state '{label}' (first defined on line {seen_labels[label]})",
                lineno, match.start(2) + 1
            )
        seen_labels[label] = lineno

        body_offset = match.start(3)
        cells: Dict[int, Tuple[int, str, int]] = {}
        offset = body_offset
        for piece in match.group(3).split(";"):
            piece_start = offset + 1
            column = piece_start + len(piece) - len(piece.lstrip())
            offset += len(piece) + 1
            if not piece.strip():
                raise AutomatonParseError("empty transition", lineno, column, "'<in>-><out>@<next>'")
            cell = CELL_RE.match(piece)
            if not cell:
                raise AutomatonParseError(
                    f"malformed transition '{piece.strip()}'", lineno, column, "'<in>-><out>@<next>'"
                )
            x, y = int(cell.group(1)), int(cell.group(2))
            for letter in (x, y):
                if letter >= alphabet:
                    raise AutomatonParseError(
                        f"letter {letter} outside alphabet 0..{alphabet - 1}", lineno, column
                    )
            if x in cells:
                raise AutomatonParseError(f"letter {x} defined twice for state '{label}'", lineno, column)
            cells[x] = (y, cell.group(3), piece_start + cell.start(3))
        missing = [x for x in range(alphabet) if x not in cells]
        if missing:
            raise AutomatonParseError(
                f"state '{label}' does not define letter(s) {missing}", lineno, len(line.rstrip()) + 1
            )
        outputs = sorted(cells[x][0] for x in cells)
        if outputs != list(range(alphabet)):
            raise AutomatonParseError(f"non-bijective output map for state '{label}'", lineno, body_offset + 1)
        state_lines.append(_StateLine(label, lineno, cells))

    if alphabet is None:
        raise AutomatonParseError("missing 'alphabet:' header", 1, 1)
    if not state_lines:
        raise AutomatonParseError("automaton has no states", 1, 1)

    index = {s.label: i for i, s in enumerate(state_lines)}
    outputs_table = []
    targets_table = []
    for s in state_lines:
        row_out = []
        row_next = []
        for x in range(alphabet):
            y, nxt, column = s.cells[x]
            if nxt not in index:
                raise AutomatonParseError(f"undefined next state '{nxt}'", s.line, column)
            row_out.append(y)
            row_next.append(index[nxt])
        outputs_table.append(tuple(row_out))
        targets_table.append(tuple(row_next))

    automaton = MealyAutomaton(
        name=parsed_name or name or "automaton",
        alphabet_size=alphabet,
        states=tuple(s.label for s in state_lines),
        outputs=tuple(outputs_table),
        targets=tuple(targets_table),
    )
    logger.debug(f"[Parser] parsed '{automaton.name}': {automaton.size} states, alphabet {alphabet}")
    return automaton


def serialize_automaton(automaton: MealyAutomaton) -> str:
    """Render an automaton in the text format; parse_automaton inverts it."""
    lines = [f"name: {automaton.name}", f"alphabet: {automaton.alphabet_size}"]
    for s, label in enumerate(automaton.states):
        cells = " ; ".join(
            f"{x}->{automaton.outputs[s][x]}@{automaton.states[automaton.targets[s][x]]}"
            for x in automaton.letters
        )
        lines.append(f"state {label}: {cells}")
    return "\n".join(lines) + "\n"
