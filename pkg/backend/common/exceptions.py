"""
Workbench Exceptions

Every error raised by the workbench derives from WorkbenchError.
Most also derive from the matching builtin (ValueError, KeyError, RuntimeError)
so callers that only know the builtins still catch them.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class AutomatonParseError(WorkbenchError, ValueError):
    """Syntax or semantic error in automaton text."""

    def __init__(self, message: str, line: int = 0, column: int = 0, expected: Optional[str] = None):
        self.line = line
        self.column = column
        self.expected = expected
        location = f"line {line}, column {column}: " if line else ""
        hint = f" (expected {expected})" if expected else ""
        super().__init__(f"{location}{message}{hint}")


class InvalidAutomatonError(WorkbenchError, ValueError):
    """Automaton violates totality, invertibility or label uniqueness."""


class ExpressionSyntaxError(WorkbenchError, ValueError):
    """Error in the element / word / EP-word surface grammar."""

    def __init__(self, message: str, text: str = "", position: int = 0, expected: Optional[str] = None):
        self.text = text
        self.position = position
        self.expected = expected
        hint = f", expected {expected}" if expected else ""
        pointer = f"\n  {text}\n  {' ' * position}^" if text else ""
        super().__init__(f"{message} at position {position}{hint}{pointer}")


class AutomatonMismatchError(WorkbenchError, ValueError):
    """Two elements over different automata were combined."""


class BudgetExceededError(WorkbenchError, RuntimeError):
    """A configured computation budget was exhausted."""

    def __init__(self, budget: str, limit: int, detail: str = ""):
        self.budget = budget
        self.limit = limit
        extra = f": {detail}" if detail else ""
        super().__init__(f"budget '{budget}' exceeded (limit {limit}){extra}")


class UnknownCatalogueKeyError(WorkbenchError, KeyError):
    """Requested catalogue key does not exist."""

    def __init__(self, key):
        self.key = key
        super().__init__(key)

    def __str__(self) -> str:
        return f"unknown catalogue key: {self.key}"


class PremiseError(WorkbenchError, ValueError):
    """Experiment premises (fixed word, self-section, displaced base word) do not hold."""
