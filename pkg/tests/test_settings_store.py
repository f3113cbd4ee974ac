import json
import logging

import pytest

from tanglekit import settings_store as store


def test_defaults_without_a_file(settings_home):
    assert not (settings_home / "config.json").exists()
    assert store.load_settings() == store.make_settings()
    assert store.crossing_cap() == 24


def test_save_and_reload(settings_home):
    store.save_setting("crossing_cap", 30)
    assert store.crossing_cap() == 30
    saved = json.loads((settings_home / "config.json").read_text(encoding="utf-8"))
    assert saved["crossing_cap"] == 30
    assert saved["default_w"] == -1


def test_unknown_setting():
    with pytest.raises(KeyError):
        store.save_setting("colour", "red")
    with pytest.raises(KeyError):
        store.get_setting("colour")


def test_environment_overrides_the_cap(monkeypatch):
    store.save_setting("crossing_cap", 30)
    monkeypatch.setenv("TANGLEKIT_CROSSING_CAP", "12")
    assert store.crossing_cap() == 12
    monkeypatch.setenv("TANGLEKIT_CROSSING_CAP", "many")
    with pytest.raises(ValueError):
        store.crossing_cap()


def test_unreadable_file_falls_back(settings_home, caplog):
    settings_home.mkdir(parents=True)
    (settings_home / "config.json").write_text("{not json", encoding="utf-8")
    with caplog.at_level(logging.WARNING, logger="tanglekit.settings_store"):
        assert store.load_settings() == store.make_settings()
    assert "ignoring unreadable settings file" in caplog.text


def test_stale_keys_are_dropped(settings_home):
    settings_home.mkdir(parents=True)
    (settings_home / "config.json").write_text(json.dumps({"h_max": 5, "old": 1}), encoding="utf-8")
    data = store.load_settings()
    assert data["h_max"] == 5
    assert "old" not in data


def test_reset(settings_home):
    store.save_setting("oracle_workers", 8)
    store.reset_settings()
    assert store.get_setting("oracle_workers") == 4
