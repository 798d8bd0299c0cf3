"""
Automaton Catalogue - Service Layer

Main interface for the catalogue.
CLI commands and tests go through this; all lookups are served from the cache.
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

from utils.event_logger import EventLogger
from ..config import Budgets
from ..element_algebra import GroupElement, Word, parse_element, parse_word
from .cache import CatalogueCache
from .models import CatalogueEntry, CatalogueSummary
from .repository import CatalogueRepository
from .verification import SuiteResult, VerificationEngine

logger = logging.getLogger(__name__)


class CatalogueService:
    """Lookup and verification of catalogued automata."""

    def __init__(self, data_dir: Optional[Union[str, Path]] = None):
        self.repository = CatalogueRepository(data_dir)
        self.cache = CatalogueCache()

    def initialize(self) -> None:
        self.cache.load(self.repository)
        logger.info("CatalogueService initialized")

    def _ensure_ready(self) -> None:
        if not self.cache.is_loaded:
            self.initialize()

    def keys(self) -> List[int]:
        self._ensure_ready()
        return self.cache.get_keys()

    def get(self, key: Union[int, str]) -> CatalogueEntry:
        """Entry for key. Raises UnknownCatalogueKeyError."""
        self._ensure_ready()
        return self.cache.get_entry(_normalize_key(key))

    def list_entries(self) -> List[CatalogueEntry]:
        self._ensure_ready()
        return self.cache.get_entries()

    def witness(self, key: Union[int, str]) -> tuple:
        """The entry's witness as (GroupElement, word)."""
        entry = self.get(key)
        g: GroupElement = parse_element(entry.automaton, entry.witness.g)
        v: Word = parse_word(entry.witness.v, entry.automaton.alphabet_size)
        return g, v

    def run_suite(self, key: Union[int, str], budgets: Optional[Budgets] = None) -> SuiteResult:
        entry = self.get(key)
        suite = VerificationEngine(budgets).run_suite(entry)
        EventLogger.log_suite_run(entry.key, suite.passed, suite.failed)
        return suite

    def run_all(self, budgets: Optional[Budgets] = None) -> List[SuiteResult]:
        return [self.run_suite(key, budgets) for key in self.keys()]

    def get_summary(self) -> CatalogueSummary:
        self._ensure_ready()
        return self.cache.get_summary()


def _normalize_key(key: Union[int, str]) -> Union[int, str]:
    if isinstance(key, str) and key.strip().isdigit():
        return int(key.strip())
    return key


_catalogue_service: Optional[CatalogueService] = None


def get_catalogue_service() -> CatalogueService:
    """Get the global CatalogueService instance"""
    global _catalogue_service
    if _catalogue_service is None:
        _catalogue_service = CatalogueService()
    return _catalogue_service

