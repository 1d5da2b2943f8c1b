import pytest

from core.errors import InvalidArgumentError, InvariantViolationError, NotFoundError
from core.tools.actions import TransitivityProfile
from core.tools.scenarios import REGISTRY, Scenario, default_runs, field_of, get_scenario, run_scenario
from utils.golden_store import load_golden

SLOW = {
    ("half_transitive_table", "q=59"),
    ("half_transitive_table", "q=61"),
    ("half_transitive_table", "q=169"),
    ("sl25_semiregular", "q=169"),
    ("quotient_structure", "q=169"),
    ("permutation_suite", "group=M22"),
    ("permutation_suite", "group=M23"),
}


def _params_id(params):
    return ",".join(f"{k}={v}" for k, v in sorted(params.items()))


def _default_params():
    for sid, scenario in REGISTRY.items():
        for params in scenario.param_sets:
            marks = [pytest.mark.slow] if (sid, _params_id(params)) in SLOW else []
            yield pytest.param(sid, params, marks=marks, id=f"{sid}[{_params_id(params)}]")


def test_registry_order():
    assert list(REGISTRY) == [
        "half_transitive_table",
        "scalar_transitivity",
        "half_transitive_normal_subgroups",
        "projective_orbits",
        "sl25_semiregular",
        "a5_regular_orbits",
        "s4_regular_points",
        "tensor_stabilizer",
        "deleted_module",
        "order_statistics",
        "quotient_structure",
        "sylow_shapes",
        "corollary_cases",
        "permutation_suite",
        "bound_check",
    ]


def test_default_runs():
    runs = default_runs()
    assert len(runs) == 46
    fast = default_runs(skip_slow=True)
    assert len(fast) == 43
    assert ("permutation_suite", {"group": "M23"}) not in fast
    assert ("half_transitive_table", {"q": 59}) not in fast


@pytest.mark.parametrize("sid, params", list(_default_params()))
def test_default_run_matches_golden(sid, params):
    result = run_scenario(sid, params, load_golden(sid))
    assert result.status == "pass", result.mismatches or result.observations


def test_half_transitive_rows_carry_scalar_orders():
    result = run_scenario("half_transitive_table", {"q": 11})
    assert result.status == "skip"
    assert result.value_of("row_details") == [{"row": [600, 120, 1], "subgroups": 1, "scalar_orders": [10]}]
    assert result.value_of("subgroups_examined") == 2


def test_rows_for_q19():
    result = run_scenario("half_transitive_table", {"q": 19})
    details = {tuple(d["row"]): d for d in result.value_of("row_details")}
    assert details[(360, 120, 3)]["scalar_orders"] == [6]
    assert details[(1080, 360, 1)]["scalar_orders"] == [18]


def test_toolkit_errors_become_failures():
    result = run_scenario("sl25_semiregular", {"q": 7})
    assert result.status == "fail"
    assert result.value_of("error").startswith("UnsupportedFieldError")

    result = run_scenario("permutation_suite", {"group": "M24"})
    assert result.status == "fail"
    result = run_scenario("bound_check", {"name": "nope"})
    assert result.status == "fail"


def test_alias_resolves_to_canonical_id():
    assert get_scenario("table1") is REGISTRY["half_transitive_table"]
    assert "table1" not in REGISTRY
    result = run_scenario("table1", {"q": 19}, load_golden("half_transitive_table"))
    assert result.scenario == "half_transitive_table"
    assert result.status == "pass", result.mismatches


def test_unknown_scenario():
    with pytest.raises(NotFoundError):
        get_scenario("nope")
    with pytest.raises(NotFoundError):
        run_scenario("nope", {})


def test_field_of():
    assert field_of(169).a == 2
    with pytest.raises(InvalidArgumentError):
        field_of(12)


def test_runtime_is_recorded():
    result = run_scenario("bound_check", {"name": "poly_y6"})
    assert result.runtime_ms >= 0
    assert result.to_report(timing=False)["runtime_ms"] == 0


def _raising(exc):
    def func(result):
        result.observe("before", 1)
        raise exc

    return func


@pytest.mark.parametrize("exc", [RuntimeError("boom"), ZeroDivisionError("division by zero"), AssertionError("no")])
def test_unexpected_exceptions_become_failures(monkeypatch, exc):
    monkeypatch.setitem(REGISTRY, "demo", Scenario("demo", "raises", _raising(exc), [{}]))
    result = run_scenario("demo", {})
    assert result.status == "fail"
    assert result.value_of("before") == 1
    assert result.value_of("error") == f"{type(exc).__name__}: {exc}"


def test_invariant_violation_fails_the_run(monkeypatch):
    monkeypatch.setattr(TransitivityProfile, "implications_hold", lambda self: False)
    result = run_scenario("permutation_suite", {"group": "AGammaL1(8)"}, load_golden("permutation_suite"))
    assert result.status == "fail"
    assert result.value_of("error").startswith(InvariantViolationError.__name__)


def test_quotient_subgroup_lattice_for_q19():
    result = run_scenario("quotient_structure", {"q": 19})
    assert result.value_of("subgroup_count") == 3
    assert result.value_of("subgroup_orders") == [120, 360, 1080]


@pytest.mark.slow
def test_quotient_subgroup_lattice_for_q169():
    result = run_scenario("quotient_structure", {"q": 169})
    orders = result.value_of("subgroup_orders")
    assert result.value_of("subgroup_count") == len(orders) == 92
    assert orders == sorted(orders)
    assert all(order % 120 == 0 and 20160 % order == 0 for order in orders)
    assert orders.count(240) == orders.count(480) == orders.count(720) == orders.count(1440) == 15
