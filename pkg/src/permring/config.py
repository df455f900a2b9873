"""Size limits for enumerations, overridable from the environment or a JSON file."""
from __future__ import annotations

import json
import os
from pathlib import Path

DEFAULT_ORDER_BOUND = 10_080
DEFAULT_POINT_BUDGET = 500_000


def default_order_bound() -> int:
    value = os.environ.get("PERMRING_BUDGET")
    if value:
        return int(value)
    return DEFAULT_ORDER_BOUND


def load_config(path: str | os.PathLike) -> dict:
    """Read a JSON config file with optional ``order_bound`` and ``battery`` keys."""
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise ValueError(f"config {path} must hold a JSON object")
    return data
