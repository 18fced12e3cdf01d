# config.py

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

# Hard limits; desk-scale exhaustive searches only
MAX_ENUMERATION_N = 14
MAX_BALANCE_N = 12
GRID_MAX = 100
PROBE_RANGE = 10
STEP_GUARD_FACTOR = 4


@dataclass(frozen=True)
class Settings:
    log_level: str = "DEBUG"
    log_file: Optional[str] = None
    workers: int = 1


def load_settings() -> Settings:
    """Read diagnostic knobs from the environment (and .env if present)"""
    load_dotenv()
    workers = os.getenv("POSRAY_WORKERS", "1")
    try:
        workers_count = max(1, int(workers))
    except ValueError:
        raise ValueError(f"POSRAY_WORKERS must be an integer, got {workers!r}")

    return Settings(
        log_level=os.getenv("POSRAY_LOG_LEVEL", "DEBUG").upper(),
        log_file=os.getenv("POSRAY_LOG_FILE") or None,
        workers=workers_count,
    )
