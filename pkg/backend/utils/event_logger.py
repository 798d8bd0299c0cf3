"""Structured event log - one JSON object per experiment outcome."""
import json
import logging
from typing import Any, Dict, Optional

event_logger = logging.getLogger('automata.events')
event_logger.setLevel(logging.INFO)


def configure_event_log(path: str) -> logging.Handler:
    """Attach a file handler writing events to `path`."""
    file_handler = logging.FileHandler(path, encoding='utf-8')
    file_handler.setLevel(logging.INFO)
    formatter = logging.Formatter(
        '%(asctime)s | %(levelname)s | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    file_handler.setFormatter(formatter)
    event_logger.addHandler(file_handler)
    return file_handler


class EventLogger:
    """Emits WITNESS_*, NUCLEUS_RUN, SUITE_RUN and DIVERGENCE_RUN events."""

    @staticmethod
    def _emit(event: Dict[str, Any], level: int = logging.INFO) -> None:
        event_logger.log(level, json.dumps(event, sort_keys=True))

    @staticmethod
    def log_witness_checked(automaton: str, g: str, v: str, verdict: str, order: str):
        event = {
            "event": "WITNESS_CHECKED",
            "automaton": automaton,
            "g": g,
            "v": v,
            "verdict": verdict,
            "order": order,
        }
        level = logging.INFO if verdict == "NonContracting" else logging.WARNING
        EventLogger._emit(event, level)

    @staticmethod
    def log_witness_search(automaton: str, max_word_len: int, max_v_len: int, hits: int):
        EventLogger._emit({
            "event": "WITNESS_SEARCH",
            "automaton": automaton,
            "max_word_len": max_word_len,
            "max_v_len": max_v_len,
            "hits": hits,
        })

    @staticmethod
    def log_nucleus_run(automaton: str, status: str, size: int, rounds: int, note: Optional[str] = None):
        EventLogger._emit({
            "event": "NUCLEUS_RUN",
            "automaton": automaton,
            "status": status,
            "size": size,
            "rounds": rounds,
            "note": note,
        })

    @staticmethod
    def log_suite_run(key: int, passed: int, failed: int):
        event = {
            "event": "SUITE_RUN",
            "key": key,
            "passed": passed,
            "failed": failed,
        }
        EventLogger._emit(event, logging.INFO if failed == 0 else logging.WARNING)

    @staticmethod
    def log_divergence_run(automaton: str, g: str, n: int, corridor: int, bounded: bool):
        EventLogger._emit({
            "event": "DIVERGENCE_RUN",
            "automaton": automaton,
            "g": g,
            "n": n,
            "corridor": corridor,
            "bounded": bounded,
        })
