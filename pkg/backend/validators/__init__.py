"""Input validation models for CLI commands."""
from .input_models import (
    Command,
    OutputFormat,
    SOURCELESS_COMMANDS,
    clean_expression,
)

__all__ = [
    'Command',
    'OutputFormat',
    'SOURCELESS_COMMANDS',
    'clean_expression',
]
