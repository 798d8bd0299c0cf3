"""
Automaton Catalogue Module
"""

from .models import (
    CheckKind,
    VerificationCheck,
    Witness,
    CatalogueRecord,
    CatalogueEntry,
    CatalogueSummary,
)
from .repository import CatalogueRepository
from .cache import CatalogueCache
from .verification import VerificationEngine, SuiteResult, CheckResult
from .service import (
    CatalogueService,
    get_catalogue_service,
)

__all__ = [
    'CheckKind',
    'VerificationCheck',
    'Witness',
    'CatalogueRecord',
    'CatalogueEntry',
    'CatalogueSummary',
    'CatalogueRepository',
    'CatalogueCache',
    'VerificationEngine',
    'SuiteResult',
    'CheckResult',
    'CatalogueService',
    'get_catalogue_service',
]
