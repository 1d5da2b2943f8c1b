import pytest

from core.errors import InvalidArgumentError
from project_structure import PROJECT_ROOT, REQUIRED_DIRS, get_data_path, get_output_path, report_file
from utils import config


def test_data_paths():
    assert get_data_path() == PROJECT_ROOT / "dataStore"
    assert get_data_path("goldens").name == "goldens"
    assert get_data_path("mathieu", PROJECT_ROOT / "elsewhere") == PROJECT_ROOT / "elsewhere" / "mathieu"
    with pytest.raises(ValueError):
        get_data_path("companies")


def test_output_paths():
    assert report_file("tsv") == get_output_path("reports") / "report.tsv"
    assert report_file("json", "nightly").name == "nightly.json"
    with pytest.raises(ValueError):
        get_output_path("visualizations")


def test_required_dirs_cover_data_kinds():
    assert {"dataStore/goldens", "dataStore/mathieu", "outputs/reports"} <= set(REQUIRED_DIRS)


def test_shipped_data_locations():
    assert config.GOLDEN_DIR.is_dir()
    assert (config.MATHIEU_DIR / "M11.txt").is_file()


def test_int_env(monkeypatch):
    monkeypatch.setenv("VERIFIER_TEST_CAP", "1_000")
    assert config._int_env("VERIFIER_TEST_CAP", 5) == 1000
    monkeypatch.setenv("VERIFIER_TEST_CAP", " ")
    assert config._int_env("VERIFIER_TEST_CAP", 5) == 5
    monkeypatch.delenv("VERIFIER_TEST_CAP")
    assert config._int_env("VERIFIER_TEST_CAP", 5) == 5
    monkeypatch.setenv("VERIFIER_TEST_CAP", "lots")
    with pytest.raises(InvalidArgumentError):
        config._int_env("VERIFIER_TEST_CAP", 5)
