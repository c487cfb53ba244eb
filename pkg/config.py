# config.py
"""Central configuration for StarBessel series evaluation, solvers and output."""
import os
from typing import Optional

from dotenv import load_dotenv

from models import SeriesConfig

# Load environment variables from a .env file (optional)
load_dotenv()


class ConfigurationError(Exception):
    """Raised when an environment setting cannot be parsed or is out of range."""


# --- Series truncation ---
# Defaults; GBESSEL_TOL and GBESSEL_MAX_TERMS override them through series_config().
SERIES_MAX_TERMS = 200
SERIES_REL_TOL = 1e-16

# Largest argument the plain series serves during zero finding; scipy takes over beyond.
SERIES_RADIUS = 10.0

# --- Root finding ---
ZERO_SCAN_STEP = 0.25
DINI_SCAN_STEPS = 64
ROOT_WIDTH = 1e-13
NEWTON_POLISH_STEPS = 3
MAX_BISECTIONS = 200

# --- Threshold scans in the order ν ---
THRESHOLD_OFFSET = 1e-6
THRESHOLD_INITIAL_STEP = 0.05
THRESHOLD_STEP_GROWTH = 1.5
THRESHOLD_MAX_NU = 100.0

# --- Disk verification grid ---
DISK_CIRCLES = 32
DISK_ANGLES = 720
DISK_INNER_FRACTION = 1e-3

# --- Tables and output ---
# Default; GBESSEL_TABLE_WORKERS overrides it through table_workers().
TABLE_WORKERS = 4
OUTPUT_DIGITS = 6
MAX_OUTPUT_DIGITS = 12
TABLE_TOLERANCE = 5e-6

# --- Logging ---
LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _env_float(name: str) -> Optional[float]:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        value = float(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{name} must be a real number, got {raw!r}") from exc
    if not 0.0 < value < 1.0:
        raise ConfigurationError(f"{name} must lie in (0, 1), got {raw!r}")
    return value


def _env_int(name: str, minimum: int = 8) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise ConfigurationError(f"{name} must be at least {minimum}, got {raw!r}")
    return value


def series_config(tol: Optional[float] = None, max_terms: Optional[int] = None) -> SeriesConfig:
    """Resolve the truncation policy: explicit values, then environment, then defaults.

    The environment is read at call time so a changed GBESSEL_TOL is honoured
    without re-importing this module.
    """
    if tol is None:
        tol = _env_float('GBESSEL_TOL')
    if max_terms is None:
        max_terms = _env_int('GBESSEL_MAX_TERMS')
    return SeriesConfig(
        max_terms=SERIES_MAX_TERMS if max_terms is None else max_terms,
        rel_tol=SERIES_REL_TOL if tol is None else tol,
    )


def table_workers() -> int:
    """Thread count for table sweeps, read from GBESSEL_TABLE_WORKERS at call time."""
    workers = _env_int('GBESSEL_TABLE_WORKERS', minimum=1)
    return TABLE_WORKERS if workers is None else workers
