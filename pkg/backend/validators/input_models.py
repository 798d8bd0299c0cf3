"""Pydantic input validation models for CLI commands."""
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

OutputFormat = Literal['text', 'structured', 'json', 'dot', 'csv']

# Subcommands that work without an automaton source
SOURCELESS_COMMANDS = {'catalogue'}


def clean_expression(value: Optional[str]) -> Optional[str]:
    """Strip surrounding whitespace and shell quotes from an expression argument."""
    if value is None:
        return value
    cleaned = value.strip()
    if len(cleaned) >= 2 and cleaned[0] == cleaned[-1] and cleaned[0] in "'\"":
        cleaned = cleaned[1:-1].strip()
    return cleaned


class Command(BaseModel):
    """Validated command: one subcommand, at most one automaton source, budget overrides."""
    model_config = ConfigDict(extra='ignore')

    command: str = Field(..., min_length=1)
    action: Optional[str] = None
    catalogue: Optional[str] = None
    file: Optional[Path] = None
    format: OutputFormat = 'text'
    out: Optional[Path] = None
    seed: Optional[int] = None
    verbose: int = Field(default=0, ge=0)
    event_log: Optional[Path] = None

    max_depth: Optional[int] = Field(default=None, ge=1, le=30)
    ord_threshold: Optional[int] = Field(default=None, ge=2)
    nucleus_size: Optional[int] = Field(default=None, ge=1)
    nucleus_depth: Optional[int] = Field(default=None, ge=1)
    nucleus_work: Optional[int] = Field(default=None, ge=1)
    closure_cap: Optional[int] = Field(default=None, ge=1)

    @field_validator('catalogue')
    @classmethod
    def strip_key(cls, v: Optional[str]) -> Optional[str]:
        if v is None:
            return v
        key = v.strip()
        if not key:
            raise ValueError('catalogue key is empty')
        return key

    @model_validator(mode='after')
    def one_source(self) -> 'Command':
        if self.catalogue is not None and self.file is not None:
            raise ValueError('give either --catalogue or --file, not both')
        if self.command not in SOURCELESS_COMMANDS and self.catalogue is None and self.file is None:
            raise ValueError(f"'{self.command}' needs an automaton: pass --catalogue KEY or --file PATH")
        return self

    @property
    def budget_overrides(self) -> dict:
        return {
            'max_depth': self.max_depth,
            'ord_threshold': self.ord_threshold,
            'nucleus_size': self.nucleus_size,
            'nucleus_depth': self.nucleus_depth,
            'nucleus_work': self.nucleus_work,
            'closure_cap': self.closure_cap,
        }
