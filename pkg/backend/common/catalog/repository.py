"""
Automaton Catalogue - Repository Layer

Reads the data directory: catalogue.json lists the entries (witness and
checks), and each entry's automaton lives in its own text file in the
mealy_core format.
"""

import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from ..config import CATALOGUE_DIR
from ..mealy_core import MealyAutomaton, parse_automaton
from .models import CatalogueEntry, CatalogueRecord

logger = logging.getLogger(__name__)

INDEX_FILE = "catalogue.json"


class CatalogueRepository:
    """
    File access layer for the catalogue.

    The cache layer calls these methods to load data.
    """

    def __init__(self, data_dir: Optional[Union[str, Path]] = None):
        self.data_dir = Path(data_dir) if data_dir else CATALOGUE_DIR

    def fetch_records(self) -> List[CatalogueRecord]:
        """Parse catalogue.json into records, ordered by key."""
        path = self.data_dir / INDEX_FILE
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
            records = [CatalogueRecord(**row) for row in raw["entries"]]
        except (OSError, json.JSONDecodeError, KeyError, ValidationError) as e:
            logger.error(f"Error reading catalogue index {path}: {e}")
            raise
        return sorted(records, key=lambda r: r.key)

    def fetch_automaton(self, filename: str, name: Optional[str] = None) -> MealyAutomaton:
        path = self.data_dir / filename
        try:
            return parse_automaton(path.read_text(encoding="utf-8"), name=name)
        except Exception as e:
            logger.error(f"Error loading automaton file {path}: {e}")
            raise

    def fetch_all_entries(self) -> List[CatalogueEntry]:
        entries = []
        for record in self.fetch_records():
            automaton = self.fetch_automaton(record.automaton_file, name=str(record.key))
            entries.append(
                CatalogueEntry(
                    key=record.key,
                    automaton=automaton,
                    witness=record.witness,
                    checks=record.checks,
                )
            )
        return entries
