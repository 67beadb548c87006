"""
Tests for the configuration hierarchy
"""

import json
from pathlib import Path

import pytest

from tame_langlands.config.config_manager import (
    DEFAULTS,
    PROJECT_CONFIG_NAME,
    get_config_manager,
    get_config_value,
    reset_config_manager,
)
from tame_langlands.exceptions import InputError


def write_json(path: Path, data: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data))


def test_defaults():
    assert get_config_value("jobs") == 1
    assert get_config_value("output_format") == "tsv"
    assert get_config_value("missing", 7) == 7
    assert get_config_manager().get_sweep_config() == DEFAULTS["sweep"]


def test_cache_dir_expands_home(tmp_path):
    assert get_config_manager().get_cache_dir() == tmp_path / "home" / ".cache" / "tame_langlands"


def test_overrides_skip_missing_values():
    manager = get_config_manager()
    manager.set_overrides(jobs=3, output_format=None)
    assert manager.get_config_value("jobs") == 3
    assert manager.get_config_value("output_format") == "tsv"
    with pytest.raises(InputError):
        manager.set_overrides(colour="red")


def test_project_file_beats_user_file(tmp_path):
    write_json(tmp_path / "home" / ".config" / "tame_langlands" / "config.json", {"jobs": 2, "bound_dim": 4})
    write_json(Path.cwd() / PROJECT_CONFIG_NAME, {"jobs": 5})
    manager = reset_config_manager()
    assert manager.get_config_value("jobs") == 5
    assert manager.get_config_value("bound_dim") == 4
    manager.set_overrides(jobs=8)
    assert manager.get_config_value("jobs") == 8


def test_sweep_settings_merge():
    write_json(Path.cwd() / PROJECT_CONFIG_NAME, {"sweep": {"primes": [3]}})
    sweep = reset_config_manager().get_sweep_config()
    assert sweep["primes"] == [3]
    assert sweep["max_summands"] == DEFAULTS["sweep"]["max_summands"]


def test_bad_files(tmp_path):
    with pytest.raises(InputError):
        reset_config_manager(str(tmp_path / "missing.json")).get_config_value("jobs")
    write_json(Path.cwd() / PROJECT_CONFIG_NAME, {"colour": "red"})
    with pytest.raises(InputError):
        reset_config_manager().get_config_value("jobs")
    (Path.cwd() / PROJECT_CONFIG_NAME).write_text("{not json")
    with pytest.raises(InputError):
        reset_config_manager().get_config_value("jobs")
