"""
Automaton Catalogue - Cache Layer

In-memory cache for the catalogue.
Loads every entry once and serves lookups from memory.
"""

import logging
from collections import Counter
from datetime import datetime
from typing import Dict, List, Optional

from ..exceptions import UnknownCatalogueKeyError
from .models import CatalogueEntry, CatalogueSummary
from .repository import CatalogueRepository

logger = logging.getLogger(__name__)


class CatalogueCache:
    """In-memory indexes over catalogue entries."""

    def __init__(self):
        self._entries: List[CatalogueEntry] = []
        self._by_key: Dict[int, CatalogueEntry] = {}
        self._loaded_at: Optional[datetime] = None
        self._is_loaded: bool = False

    @property
    def is_loaded(self) -> bool:
        return self._is_loaded

    def load(self, repository: CatalogueRepository) -> None:
        """Load the whole catalogue into memory once."""
        if self._is_loaded:
            logger.debug("Catalogue already loaded, skipping")
            return

        logger.info(f"Loading automaton catalogue from {repository.data_dir}...")
        start_time = datetime.now()
        try:
            self._entries = repository.fetch_all_entries()
            self._build_indexes()
            self._loaded_at = datetime.now()
            self._is_loaded = True
        except Exception as e:
            logger.error(f"Failed to load catalogue: {e}")
            raise

        load_time = (datetime.now() - start_time).total_seconds() * 1000
        logger.info(
            f"Catalogue loaded: {len(self._entries)} automata, "
            f"{sum(len(e.checks) for e in self._entries)} checks. Time: {load_time:.2f}ms"
        )

    def _build_indexes(self) -> None:
        self._by_key = {entry.key: entry for entry in self._entries}

    def _ensure_loaded(self) -> None:
        if not self._is_loaded:
            raise RuntimeError("Catalogue cache not loaded. Initialize the service first.")

    def get_entries(self) -> List[CatalogueEntry]:
        self._ensure_loaded()
        return self._entries.copy()

    def get_keys(self) -> List[int]:
        self._ensure_loaded()
        return [entry.key for entry in self._entries]

    def get_entry(self, key: int) -> CatalogueEntry:
        self._ensure_loaded()
        try:
            return self._by_key[key]
        except KeyError:
            raise UnknownCatalogueKeyError(key) from None

    def get_summary(self) -> CatalogueSummary:
        self._ensure_loaded()
        kinds = Counter(check.kind.value for entry in self._entries for check in entry.checks)
        return CatalogueSummary(
            total_entries=len(self._entries),
            total_checks=sum(kinds.values()),
            checks_by_kind=dict(sorted(kinds.items())),
            last_loaded=self._loaded_at,
        )
