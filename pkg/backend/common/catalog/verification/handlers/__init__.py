"""
Verification Handlers
"""

from .base import BaseHandler, CheckResult
from .action_handlers import ActEqualsHandler, EpActEqualsHandler, ShiftClassHandler
from .algebra_handlers import (
    SectionEqualsHandler,
    IsIdentityHandler,
    OrderFiniteHandler,
    WitnessHoldsHandler,
)

__all__ = [
    'BaseHandler', 'CheckResult',
    'ActEqualsHandler', 'EpActEqualsHandler', 'ShiftClassHandler',
    'SectionEqualsHandler', 'IsIdentityHandler', 'OrderFiniteHandler',
    'WitnessHoldsHandler',
]
