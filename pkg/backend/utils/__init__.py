"""Utility modules."""
from .event_logger import EventLogger, configure_event_log

__all__ = [
    'EventLogger',
    'configure_event_log',
]
