"""
Workbench Configuration - Budgets and Defaults

CRITICAL: These values are the SINGLE SOURCE OF TRUTH for every budget.
Modules read them through Budgets; the CLI overrides them per run.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)

# Order semi-decision
DEFAULT_MAX_DEPTH = 16
DEFAULT_ORD_THRESHOLD = 2 ** 12
MIN_ORDER_INCREASES = 4     # depths at which ord_n must strictly grow
POWER_STATE_BUDGET = 2 ** 12  # states of a squared transducer while deciding g^ord_n = 1

# Level permutations hold k^n entries
LEVEL_WORD_BUDGET = 2 ** 22

# Section closure of a single element
CLOSURE_CAP = 10 ** 6

# Nucleus semi-algorithm
NUCLEUS_SIZE_BUDGET = 5000
NUCLEUS_DEPTH_BUDGET = 20
NUCLEUS_WORK_BUDGET = 10_000  # closure vertices plus registry lookups over a whole run

# Fingerprints: level used as an exact negative filter before equality
FINGERPRINT_DEPTH = 6

# Self-similarity graph balls
BALL_VERTEX_BUDGET = 2 ** 18

# Randomized property checks
DEFAULT_SEED = 20131113

ENV_PREFIX = "AUTOMATA_"

CATALOGUE_DIR = Path(
    os.environ.get(f"{ENV_PREFIX}CATALOGUE_DIR")
    or Path(__file__).resolve().parent / "catalog" / "data"
)


class Budgets(BaseModel):
    """Validated bundle of computation budgets."""

    model_config = ConfigDict(frozen=True)

    max_depth: int = Field(default=DEFAULT_MAX_DEPTH, ge=1, le=30)
    ord_threshold: int = Field(default=DEFAULT_ORD_THRESHOLD, ge=2)
    min_increases: int = Field(default=MIN_ORDER_INCREASES, ge=1)
    power_state_budget: int = Field(default=POWER_STATE_BUDGET, ge=1)
    level_word_budget: int = Field(default=LEVEL_WORD_BUDGET, ge=1)
    closure_cap: int = Field(default=CLOSURE_CAP, ge=1)
    nucleus_size: int = Field(default=NUCLEUS_SIZE_BUDGET, ge=1)
    nucleus_depth: int = Field(default=NUCLEUS_DEPTH_BUDGET, ge=1)
    nucleus_work: int = Field(default=NUCLEUS_WORK_BUDGET, ge=1)
    fingerprint_depth: int = Field(default=FINGERPRINT_DEPTH, ge=0, le=12)
    ball_vertex_budget: int = Field(default=BALL_VERTEX_BUDGET, ge=1)

    @classmethod
    def from_env(cls, **overrides: Any) -> "Budgets":
        """
        Build budgets from defaults, AUTOMATA_<FIELD> environment variables,
        then explicit overrides (None values are ignored).
        """
        values: Dict[str, Any] = {}
        for name in cls.model_fields:
            raw = os.environ.get(f"{ENV_PREFIX}{name.upper()}")
            if raw is not None:
                logger.debug(f"[Config] {name} from environment: {raw}")
                values[name] = int(raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


DEFAULT_BUDGETS = Budgets()
