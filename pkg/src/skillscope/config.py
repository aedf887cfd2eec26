"""Layered runtime configuration.

Precedence, lowest to highest: built-in defaults, JSON config file,
SKILLSCOPE_* environment variables, command-line flags. The file location
itself comes from --config or SKILLSCOPE_CONFIG, falling back to
./skillscope.json when that exists.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Mapping

ENV_PREFIX = "SKILLSCOPE_"
DEFAULT_CONFIG_NAME = "skillscope.json"

KEYS = (
    "store_path",
    "lexicon_path",
    "bind_address",
    "politeness_delay",
    "worker_count",
    "schedule_period",
    "source",
    "terms",
    "window",
    "seed",
)

DEFAULTS: dict[str, str | None] = {
    "store_path": "skillscope.db",
    "lexicon_path": None,
    "bind_address": "127.0.0.1:8080",
    "politeness_delay": "2.0",
    "worker_count": "1",
    "schedule_period": "7",  # days
    "source": None,
    "terms": "all",
    "window": "auto",
    "seed": None,
}


class BadConfig(ValueError):
    pass


def _validate(merged: dict[str, str | None], origin: str) -> None:
    try:
        if float(merged["politeness_delay"] or 0) < 0:
            raise BadConfig(f"{origin}: politeness_delay must be >= 0")
        if int(merged["worker_count"] or 1) < 1:
            raise BadConfig(f"{origin}: worker_count must be >= 1")
        if float(merged["schedule_period"] or 7) <= 0:
            raise BadConfig(f"{origin}: schedule_period must be positive")
    except ValueError as exc:
        raise BadConfig(f"{origin}: {exc}") from exc


def load_config(
    path: str | Path | None = None,
    env: Mapping[str, str] | None = None,
) -> dict[str, str | None]:
    """Merge defaults, config file, and environment into one mapping."""
    env = os.environ if env is None else env
    merged = dict(DEFAULTS)

    file_path = path or env.get(ENV_PREFIX + "CONFIG")
    if file_path is None and Path(DEFAULT_CONFIG_NAME).is_file():
        file_path = DEFAULT_CONFIG_NAME
    if file_path is not None:
        try:
            with open(file_path) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise BadConfig(f"cannot read config {file_path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise BadConfig(f"malformed config {file_path}: {exc}") from exc
        if not isinstance(data, dict):
            raise BadConfig(f"config {file_path} must hold a JSON object")
        unknown = sorted(set(data) - set(KEYS))
        if unknown:
            raise BadConfig(
                f"config {file_path} has unknown keys: {', '.join(unknown)}"
            )
        for key, value in data.items():
            merged[key] = None if value is None else str(value)

    for key in KEYS:
        value = env.get(ENV_PREFIX + key.upper())
        if value is not None:
            merged[key] = value
    _validate(merged, str(file_path or "config"))
    return merged


def pick(flag_value, key: str, config: Mapping[str, str | None]):
    """Flag beats config; config beats default (already merged)."""
    return flag_value if flag_value is not None else config.get(key)
