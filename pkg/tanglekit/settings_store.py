"""Persist tanglekit settings to ~/.tanglekit/config.json.

The directory can be moved with ``TANGLEKIT_HOME``; ``TANGLEKIT_CROSSING_CAP``
overrides the stored crossing cap for a single process.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)

_CAP_ENV = "TANGLEKIT_CROSSING_CAP"
_HOME_ENV = "TANGLEKIT_HOME"


def _config_dir() -> Path:
    home = os.environ.get(_HOME_ENV)
    return Path(home) if home else Path.home() / ".tanglekit"


def _config_file() -> Path:
    return _config_dir() / "config.json"


def _ensure_dir() -> None:
    """Ensure config directory exists."""
    _config_dir().mkdir(parents=True, exist_ok=True)


def _read_all() -> dict[str, Any]:
    """Read stored settings merged over the defaults."""
    data = make_settings()
    path = _config_file()
    if not path.exists():
        return data
    try:
        stored = json.loads(path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, OSError) as e:
        logger.warning("ignoring unreadable settings file %s: %s", path, e)
        return data
    if isinstance(stored, dict):
        data.update({k: v for k, v in stored.items() if k in data})
    return data


def _write_all(data: dict[str, Any]) -> None:
    """Write all settings."""
    _ensure_dir()
    _config_file().write_text(
        json.dumps(data, indent=2, ensure_ascii=False), encoding="utf-8"
    )


# ---- Public API ----


def load_settings() -> dict[str, Any]:
    """Return every setting, with environment overrides applied."""
    data = _read_all()
    raw = os.environ.get(_CAP_ENV)
    if raw:
        try:
            data["crossing_cap"] = int(raw)
        except ValueError:
            raise ValueError(f"{_CAP_ENV} must be an integer, got {raw!r}") from None
    return data


def get_setting(name: str) -> Any:
    """Get a single setting by name."""
    data = load_settings()
    if name not in data:
        raise KeyError(f"unknown setting: {name}")
    return data[name]


def save_setting(name: str, value: Any) -> None:
    """Store one setting; unknown names are rejected."""
    data = _read_all()
    if name not in data:
        raise KeyError(f"unknown setting: {name}")
    data[name] = value
    _write_all(data)


def reset_settings() -> None:
    """Overwrite the stored file with the defaults."""
    _write_all(make_settings())


def crossing_cap() -> int:
    return int(get_setting("crossing_cap"))


def make_settings(
    crossing_cap: int = 24,
    oracle_workers: int = 4,
    split_depth: int = 0,
    h_min: int = -3,
    h_max: int = 3,
    default_w: int = -1,
) -> dict:
    """Create a settings dictionary."""
    return {
        "crossing_cap": crossing_cap,
        "oracle_workers": oracle_workers,
        "split_depth": split_depth,
        "h_min": h_min,
        "h_max": h_max,
        "default_w": default_w,
    }
