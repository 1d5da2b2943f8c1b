"""
Golden files and reports

This module reads and writes the golden tables under dataStore/goldens (one JSON file
per scenario) and renders scenario results as json, tsv or text reports.
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

from core.errors import DataInvalidError
from core.models.results import GoldenTable, ScenarioResult, canonical
from utils.config import GOLDEN_DIR

logger = logging.getLogger("utils.golden_store")

REPORT_FORMATS = ("text", "json", "tsv")


def golden_path(scenario: str, golden_dir: Optional[Path] = None) -> Path:
    return (golden_dir or GOLDEN_DIR) / f"{scenario}.json"


def load_golden(scenario: str, golden_dir: Optional[Path] = None) -> Optional[GoldenTable]:
    """
    Load the golden table of a scenario; None when no file exists.

    Raises:
        DataInvalidError: the file is not valid JSON or has unknown keys
    """
    path = golden_path(scenario, golden_dir)
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise DataInvalidError(f"{path.name}: {e}") from e
    table = GoldenTable.from_dict(data)
    if table.scenario != scenario:
        raise DataInvalidError(f"{path.name} holds goldens of {table.scenario!r}")
    return table


def load_goldens(scenarios: List[str], golden_dir: Optional[Path] = None) -> Dict[str, Optional[GoldenTable]]:
    return {sid: load_golden(sid, golden_dir) for sid in scenarios}


def write_golden(table: GoldenTable, golden_dir: Optional[Path] = None) -> Path:
    path = golden_path(table.scenario, golden_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(table.to_dict(), indent=2, sort_keys=True) + "\n")
    logger.info(f"Wrote {path}")
    return path


def update_goldens(results: List[ScenarioResult], golden_dir: Optional[Path] = None) -> List[Path]:
    """Store the observations of successful runs as the new goldens of their scenarios."""
    tables: Dict[str, GoldenTable] = {}
    for result in results:
        if any(o.label == "error" for o in result.observations):
            logger.warning(f"Not recording goldens for failed run {result.scenario} {result.params}")
            continue
        if result.scenario not in tables:
            tables[result.scenario] = load_golden(result.scenario, golden_dir) or GoldenTable(result.scenario)
        tables[result.scenario].put(result.params, result.observations)
    return [write_golden(table, golden_dir) for table in tables.values()]


# ==================== REPORTS ====================

def results_frame(results: List[ScenarioResult]) -> pd.DataFrame:
    """One row per observation: id, params, status, label, value."""
    rows = []
    for result in results:
        params = json.dumps(canonical(result.params), sort_keys=True)
        for obs in result.observations or []:
            rows.append({
                "id": result.scenario,
                "params": params,
                "status": result.status,
                "label": obs.label,
                "value": json.dumps(canonical(obs.value), sort_keys=True),
            })
        if not result.observations:
            rows.append({"id": result.scenario, "params": params, "status": result.status, "label": "", "value": ""})
    return pd.DataFrame(rows, columns=["id", "params", "status", "label", "value"])


def render_report(results: List[ScenarioResult], fmt: str = "json", timing: bool = True) -> str:
    """
    Render results as text.

    Args:
        results: Scenario results in run order
        fmt: 'json', 'tsv' or 'text'
        timing: When False, runtime_ms is written as 0 so equal runs give equal bytes

    Raises:
        ValueError: unknown format
    """
    if fmt == "json":
        return json.dumps([r.to_report(timing) for r in results], indent=2, sort_keys=True) + "\n"
    if fmt == "tsv":
        return results_frame(results).to_csv(sep="\t", index=False)
    if fmt == "text":
        summary = pd.DataFrame([
            {
                "id": r.scenario,
                "params": json.dumps(canonical(r.params), sort_keys=True),
                "status": r.status,
                "runtime_ms": r.runtime_ms if timing else 0,
            }
            for r in results
        ], columns=["id", "params", "status", "runtime_ms"])
        return summary.to_string(index=False) + "\n"
    raise ValueError(f"unknown report format {fmt!r}; choose from {REPORT_FORMATS}")


def write_report(results: List[ScenarioResult], out: Path, fmt: str = "json", timing: bool = True) -> Path:
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(render_report(results, fmt, timing))
    logger.info(f"Report written to {out}")
    return out
