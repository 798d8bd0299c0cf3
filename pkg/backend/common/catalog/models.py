"""
Automaton Catalogue - Data Models

Pydantic models for catalogue entries and their verification checks.
Entries are loaded from the data directory (see repository.py).
"""

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..mealy_core import MealyAutomaton


class CheckKind(str, Enum):
    """Machine-checkable identity types"""
    ACT_EQUALS = "ActEquals"
    SECTION_EQUALS = "SectionEquals"
    IS_IDENTITY = "IsIdentity"
    EP_ACT_EQUALS = "EpActEquals"
    SHIFT_CLASS_DIFFERS = "ShiftClassDiffers"
    SHIFT_CLASS_EQUALS = "ShiftClassEquals"
    ORDER_FINITE = "OrderFinite"
    WITNESS_HOLDS = "WitnessHolds"


class VerificationCheck(BaseModel):
    """
    One identity to verify.

    Operand meaning per kind:
        ActEquals          element(word) == expected            (finite words)
        SectionEquals      element|word  == expected            (group equality)
        IsIdentity         element is trivial
        EpActEquals        element(word) == expected            (EP words, canonical)
        ShiftClassEquals   element(word) ~ expected             (shift equivalence)
        ShiftClassDiffers  element(word) !~ expected
        OrderFinite        order_status(element) == Finite(expected)
        WitnessHolds       entry witness fixes v and g|v == g
    """
    model_config = ConfigDict(frozen=True)

    kind: CheckKind
    element: Optional[str] = None
    word: Optional[str] = None
    expected: Optional[str] = None
    on_inverse: bool = False
    description: str = ""

    @field_validator("element", "word", "expected", mode="before")
    @classmethod
    def coerce_text(cls, v: Any) -> Optional[str]:
        return None if v is None else str(v)

    def label(self) -> str:
        if self.description:
            return self.description
        parts = [p for p in (self.element, self.word, self.expected) if p is not None]
        return f"{self.kind.value}({', '.join(parts)})"


class Witness(BaseModel):
    model_config = ConfigDict(frozen=True)

    g: str
    v: str


class CatalogueRecord(BaseModel):
    """Raw catalogue.json record, before the automaton file is attached."""
    key: int
    automaton_file: str
    witness: Witness
    checks: List[VerificationCheck] = Field(default_factory=list)


@dataclass(frozen=True)
class CatalogueEntry:
    """A catalogued automaton with its witness pair and verification suite (built from a CatalogueRecord)."""
    key: int
    automaton: MealyAutomaton
    witness: Witness
    checks: List[VerificationCheck] = field(default_factory=list)

    @property
    def name(self) -> str:
        return str(self.key)


class CatalogueSummary(BaseModel):
    """Summary statistics for the catalogue"""
    total_entries: int
    total_checks: int
    checks_by_kind: Dict[str, int]
    last_loaded: Optional[datetime] = None
