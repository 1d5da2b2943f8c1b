"""
Project layout for the Transitivity Verifier

This module pins the project root, puts it on the import path and names every
location the verifier reads from or writes to:

    dataStore/goldens     expected observations, one JSON file per scenario
    dataStore/mathieu     Mathieu group generator files
    outputs/reports       reports written by `run_verifier report`

Import it before the `core` and `utils` packages when running a script from
outside the project root.
"""

import sys
from pathlib import Path
from typing import List, Optional

PROJECT_ROOT = Path(__file__).resolve().parent

if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

DATA_KINDS = ("goldens", "mathieu")
OUTPUT_KINDS = ("reports",)

PACKAGES = ["core", "core/models", "core/tools", "utils", "tests"]
REQUIRED_DIRS = PACKAGES + [f"dataStore/{k}" for k in DATA_KINDS] + [f"outputs/{k}" for k in OUTPUT_KINDS]


def ensure_project_structure() -> List[str]:
    """
    Create missing directories and package markers.

    Returns:
        The directories that had to be created, relative to the project root
    """
    created = []
    for directory in REQUIRED_DIRS:
        dir_path = PROJECT_ROOT / directory
        if not dir_path.exists():
            dir_path.mkdir(parents=True)
            created.append(directory)
    for pkg_dir in PACKAGES:
        (PROJECT_ROOT / pkg_dir / "__init__.py").touch(exist_ok=True)
    return created


def get_data_path(kind: Optional[str] = None, root: Optional[Path] = None) -> Path:
    """
    Path of the data store, or of one of its kinds ("goldens" or "mathieu").

    Args:
        kind: Optional data kind
        root: Data store location; defaults to dataStore under the project root

    Raises:
        ValueError: unknown kind
    """
    data_path = root or PROJECT_ROOT / "dataStore"
    if kind is None:
        return data_path
    if kind not in DATA_KINDS:
        raise ValueError(f"unknown data kind {kind!r}; choose from {DATA_KINDS}")
    return data_path / kind


def get_output_path(kind: Optional[str] = None) -> Path:
    output_path = PROJECT_ROOT / "outputs"
    if kind is None:
        return output_path
    if kind not in OUTPUT_KINDS:
        raise ValueError(f"unknown output kind {kind!r}; choose from {OUTPUT_KINDS}")
    return output_path / kind


def report_file(fmt: str, stem: str = "report") -> Path:
    """Default location of a report in the given format."""
    return get_output_path("reports") / f"{stem}.{fmt}"


if __name__ == "__main__":
    for directory in ensure_project_structure():
        print(f"Created directory: {directory}")
    print(f"Project root: {PROJECT_ROOT}")
    print(f"Goldens path: {get_data_path('goldens')}")
    print(f"Generator files path: {get_data_path('mathieu')}")
    print(f"Reports path: {get_output_path('reports')}")
