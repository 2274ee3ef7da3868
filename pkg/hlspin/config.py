from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path

logger = logging.getLogger(__name__)


def _env_int(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: expected an integer")
        return default
    if value < minimum:
        logger.warning(f"Ignoring {name}={value}: must be >= {minimum}")
        return default
    return value


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: expected a number")
        return default
    if value <= 0:
        logger.warning(f"Ignoring {name}={value}: must be > 0")
        return default
    return value


@dataclass(frozen=True)
class Settings:
    """Runtime defaults resolved from environment variables."""

    threads: int
    tolerance: float
    seed: int
    bound: int
    report_dir: Path

    @staticmethod
    def load() -> Settings:
        report_dir = os.getenv("HLSPIN_REPORT_DIR") or ".hlspin/reports"
        return Settings(
            threads=_env_int("HLSPIN_THREADS", 1),
            tolerance=_env_float("HLSPIN_TOLERANCE", 1e-10),
            seed=_env_int("HLSPIN_SEED", 1, minimum=0),
            bound=_env_int("HLSPIN_BOUND", 64, minimum=2),
            report_dir=Path(report_dir).expanduser(),
        )


settings = Settings.load()
