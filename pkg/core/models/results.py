"""
Scenario Results

This module provides the record types exchanged between the scenario functions, the
runner and the golden store: observations, scenario results and golden tables.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from core.errors import DataInvalidError

STATUSES = ("pass", "fail", "skip")

_OBSERVATION_KEYS = {"label", "value", "provenance"}
_ENTRY_KEYS = {"params", "observations"}
_TABLE_KEYS = {"scenario", "entries"}


def canonical(value: Any) -> Any:
    """JSON-shaped copy of a value: tuples become lists, dict keys become strings."""
    if isinstance(value, dict):
        return {str(k): canonical(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (list, tuple)):
        return [canonical(v) for v in value]
    if hasattr(value, "item"):
        # numpy scalars
        return value.item()
    return value


def params_key(params: Dict[str, Any]) -> str:
    """Stable text key of a parameter dict."""
    return ",".join(f"{k}={canonical(params[k])}" for k in sorted(params))


@dataclass
class Observation:
    label: str
    value: Any
    provenance: str = "DERIVED"

    def to_dict(self, with_provenance: bool = False) -> Dict[str, Any]:
        data = {"label": self.label, "value": canonical(self.value)}
        if with_provenance:
            data["provenance"] = self.provenance
        return data


@dataclass
class ScenarioResult:
    """
    Outcome of one scenario run.

    status is 'pass' iff every golden observation for these params matched exactly;
    observations with no golden counterpart are informational.
    """

    scenario: str
    params: Dict[str, Any]
    status: str = "skip"
    observations: List[Observation] = field(default_factory=list)
    expected: List[Observation] = field(default_factory=list)
    mismatches: List[str] = field(default_factory=list)
    runtime_ms: int = 0

    def observe(self, label: str, value: Any, provenance: str = "DERIVED") -> None:
        self.observations.append(Observation(label, canonical(value), provenance))

    def value_of(self, label: str) -> Any:
        for obs in self.observations:
            if obs.label == label:
                return obs.value
        raise KeyError(label)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_report(self, timing: bool = True) -> Dict[str, Any]:
        return {
            "id": self.scenario,
            "params": canonical(self.params),
            "status": self.status,
            "observations": [o.to_dict() for o in self.observations],
            "runtime_ms": self.runtime_ms if timing else 0,
        }


@dataclass
class GoldenEntry:
    params: Dict[str, Any]
    observations: List[Observation]

    def expected(self) -> Dict[str, Any]:
        return {o.label: o.value for o in self.observations}


@dataclass
class GoldenTable:
    """Expected observations of one scenario, keyed by params."""

    scenario: str
    entries: List[GoldenEntry] = field(default_factory=list)

    def lookup(self, params: Dict[str, Any]) -> Optional[GoldenEntry]:
        key = params_key(params)
        return next((e for e in self.entries if params_key(e.params) == key), None)

    def put(self, params: Dict[str, Any], observations: List[Observation]) -> None:
        entry = GoldenEntry(canonical(params), list(observations))
        key = params_key(params)
        self.entries = [e for e in self.entries if params_key(e.params) != key] + [entry]
        self.entries.sort(key=lambda e: params_key(e.params))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario,
            "entries": [
                {
                    "params": canonical(e.params),
                    "observations": [o.to_dict(with_provenance=True) for o in e.observations],
                }
                for e in self.entries
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GoldenTable":
        """
        Parse a golden table.

        Raises:
            DataInvalidError: unknown or missing keys
        """
        _check_keys(data, _TABLE_KEYS, "golden table")
        entries = []
        for entry in data["entries"]:
            _check_keys(entry, _ENTRY_KEYS, "golden entry")
            observations = []
            for obs in entry["observations"]:
                _check_keys(obs, _OBSERVATION_KEYS, "golden observation", optional={"provenance"})
                observations.append(Observation(obs["label"], obs["value"], obs.get("provenance", "DERIVED")))
            entries.append(GoldenEntry(dict(entry["params"]), observations))
        return cls(scenario=data["scenario"], entries=entries)


def _check_keys(data: Any, allowed: set, what: str, optional: Optional[set] = None) -> None:
    if not isinstance(data, dict):
        raise DataInvalidError(f"{what} must be an object")
    unknown = set(data) - allowed
    if unknown:
        raise DataInvalidError(f"{what} has unknown keys {sorted(unknown)}")
    missing = allowed - (optional or set()) - set(data)
    if missing:
        raise DataInvalidError(f"{what} is missing keys {sorted(missing)}")


def judge(result: ScenarioResult, golden: Optional[GoldenEntry]) -> ScenarioResult:
    """Set status by exact comparison of observations with a golden entry."""
    if golden is None:
        result.status = "skip"
        return result
    found = {o.label: o.value for o in result.observations}
    result.expected = list(golden.observations)
    result.mismatches = []
    for label, value in golden.expected().items():
        if label not in found:
            result.mismatches.append(f"{label}: missing")
        elif canonical(found[label]) != canonical(value):
            result.mismatches.append(f"{label}: got {found[label]!r}, expected {value!r}")
    result.status = "fail" if result.mismatches else "pass"
    return result
