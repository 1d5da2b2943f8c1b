"""
Verifier configuration

This module loads settings from the environment (and a .env file when present).
Every value has a default, so a clean checkout runs without any configuration.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

from project_structure import get_data_path
from core.errors import InvalidArgumentError

# Load environment variables
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError as e:
        raise InvalidArgumentError(f"{name} must be an integer, got {raw!r}") from e


# Enumeration caps
CLOSURE_CAP = _int_env("VERIFIER_CLOSURE_CAP", 2_000_000)
TUPLE_ORBIT_CAP = _int_env("VERIFIER_TUPLE_ORBIT_CAP", 10_000_000)
SCHREIER_CAP = _int_env("VERIFIER_SCHREIER_CAP", 5000)
SUBGROUP_QUOTIENT_CAP = _int_env("VERIFIER_SUBGROUP_QUOTIENT_CAP", 10_000)

# Runner
JOBS = _int_env("VERIFIER_JOBS", 1)
LOG_LEVEL = os.getenv("VERIFIER_LOG_LEVEL", "WARNING").upper()

# Data locations
DATASTORE_PATH = Path(os.environ["VERIFIER_DATASTORE"]) if os.getenv("VERIFIER_DATASTORE") else get_data_path()
GOLDEN_DIR = get_data_path("goldens", DATASTORE_PATH)
MATHIEU_DIR = get_data_path("mathieu", DATASTORE_PATH)
