"""
Operation counters for the element algebra.

Each public operation is wrapped with @counted; snapshot() exposes the totals
so batch runs can assert which operations they exercised.
"""

import threading
from collections import Counter
from functools import wraps
from typing import Callable, Dict, TypeVar

F = TypeVar("F", bound=Callable)

_counters: Counter = Counter()
_lock = threading.Lock()


def counted(name: str) -> Callable[[F], F]:
    def decorator(func: F) -> F:
        @wraps(func)
        def wrapper(*args, **kwargs):
            with _lock:
                _counters[name] += 1
            return func(*args, **kwargs)
        return wrapper  # type: ignore[return-value]
    return decorator


def snapshot() -> Dict[str, int]:
    with _lock:
        return dict(_counters)


def reset() -> None:
    with _lock:
        _counters.clear()
