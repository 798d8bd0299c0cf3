"""
Catalogue Verification

Executable identity suites for catalogue entries, plus seeded property checks.
"""

from .engine import VerificationEngine, SuiteResult
from .handlers import CheckResult
from .properties import property_checks, propagation_checks, random_element, random_word

__all__ = [
    'VerificationEngine',
    'SuiteResult',
    'CheckResult',
    'property_checks',
    'propagation_checks',
    'random_element',
    'random_word',
]
