"""
Command plumbing shared by every command module: the run context,
command results, exit codes and output rendering.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

import pandas as pd

from common.catalog import CatalogueService, get_catalogue_service
from common.config import Budgets
from common.element_algebra import GroupElement, parse_element
from common.mealy_core import MealyAutomaton, parse_automaton
from validators import Command, clean_expression

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_FOUND = 3
EXIT_PARSE = 4
EXIT_BUDGET = 5


class CommandError(Exception):
    """A command-level failure carrying its exit code."""

    def __init__(self, message: str, exit_code: int = EXIT_USAGE):
        self.exit_code = exit_code
        super().__init__(message)


@dataclass
class CommandResult:
    """
    What a command produced.

    payload feeds the structured and json formats, text the text format;
    dot and table are only present for commands that can export them.
    """
    payload: Dict[str, Any]
    text: str
    exit_code: int = EXIT_OK
    dot: Optional[str] = None
    table: Optional[pd.DataFrame] = None


@dataclass
class CommandContext:
    command: Command
    budgets: Budgets
    service: CatalogueService = field(default_factory=get_catalogue_service)
    _automaton: Optional[MealyAutomaton] = None

    @property
    def automaton(self) -> MealyAutomaton:
        """The automaton named by --catalogue or --file, loaded once."""
        if self._automaton is None:
            self._automaton = self._load_automaton()
        return self._automaton

    def _load_automaton(self) -> MealyAutomaton:
        if self.command.catalogue is not None:
            return self.service.get(self.command.catalogue).automaton
        path = Path(self.command.file)
        if not path.is_file():
            raise FileNotFoundError(f"automaton file not found: {path}")
        return parse_automaton(path.read_text(encoding='utf-8'), name=path.stem)

    def element(self, text: str) -> GroupElement:
        return parse_element(self.automaton, clean_expression(text))

    @property
    def seed(self) -> Optional[int]:
        return self.command.seed


def _flatten(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return ",".join(_flatten(v) for v in value)
    if isinstance(value, dict):
        return ",".join(f"{k}:{_flatten(v)}" for k, v in sorted(value.items()))
    return str(value)


def structured_lines(payload: Dict[str, Any], prefix: str = "") -> str:
    """Stable key=value lines, sorted by key; nested dicts become dotted keys."""
    lines = []
    for key in sorted(payload):
        value = payload[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            nested = structured_lines(value, f"{name}.")
            if nested:
                lines.append(nested)
        else:
            lines.append(f"{name}={_flatten(value)}")
    return "\n".join(lines)


def render(result: CommandResult, output_format: str, command_name: str) -> str:
    if output_format == 'text':
        return result.text
    if output_format == 'structured':
        return structured_lines(result.payload)
    if output_format == 'json':
        return json.dumps(result.payload, indent=2, sort_keys=True, default=str)
    if output_format == 'dot':
        if result.dot is None:
            raise CommandError(f"'{command_name}' has no DOT output")
        return result.dot
    if output_format == 'csv':
        if result.table is None:
            raise CommandError(f"'{command_name}' has no CSV output")
        return result.table.to_csv(index=False)
    raise CommandError(f"unknown format: {output_format}")
