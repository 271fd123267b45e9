"""Tests for setting resolution and the ``ambitlab config`` command."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from ambitlab import config
from ambitlab.cli import main
from ambitlab.commands.config import coerce_value


@pytest.fixture
def config_file(tmp_path: Path, monkeypatch) -> Path:
    path = tmp_path / "config.json"
    monkeypatch.setattr(config, "CONFIG_FILE", path)
    return path


def test_setting_prefers_environment(monkeypatch):
    monkeypatch.setattr(config, "PERSISTENT_CONFIG", {"count": 40})
    monkeypatch.delenv("AMBITLAB_COUNT", raising=False)
    assert config._setting("count", 100) == 40
    monkeypatch.setenv("AMBITLAB_COUNT", "7")
    assert config._setting("count", 100) == 7
    monkeypatch.setenv("AMBITLAB_COUNT", "many")
    assert config._setting("count", 100) == 100


def test_setting_falls_back_to_default(monkeypatch):
    monkeypatch.setattr(config, "PERSISTENT_CONFIG", {})
    monkeypatch.delenv("AMBITLAB_GRID", raising=False)
    assert config._setting("grid", 8) == 8


@pytest.mark.parametrize(
    "raw,expected",
    [("true", True), ("False", False), ("12", 12), ("~/ambit", "~/ambit")],
)
def test_coerce_value(raw, expected):
    assert coerce_value(raw) == expected


def test_set_show_unset(config_file: Path, capsys):
    assert main(["config", "set", "max-window", "6"]) == 0
    assert json.loads(config_file.read_text()) == {"max_window": 6}

    assert main(["config", "show"]) == 0
    assert "max_window" in capsys.readouterr().err

    assert main(["config", "unset", "max-window"]) == 0
    assert json.loads(config_file.read_text()) == {}


def test_set_rejects_unknown_key(config_file: Path, capsys):
    assert main(["config", "set", "colour", "blue"]) == 2
    assert "unknown key" in capsys.readouterr().err
    assert not config_file.exists()


@pytest.mark.parametrize("value", ["0", "-3", "lots", "true"])
def test_set_rejects_non_positive_numbers(config_file: Path, value):
    assert main(["config", "set", "budget", value]) == 2


def test_set_home_accepts_a_path(config_file: Path):
    assert main(["config", "set", "home", "~/ambit"]) == 0
    assert json.loads(config_file.read_text()) == {"home": "~/ambit"}


def test_set_requires_a_value(config_file: Path, capsys):
    assert main(["config", "set", "seed"]) == 2
    assert "requires a key and a value" in capsys.readouterr().err
