"""Runtime knobs read from the environment.

LABY_MAX_WIDTH  -- largest grid width that may be materialized (default 2**16)
LABY_BACKEND    -- ``numba`` (default when importable) or ``numpy``
"""

import os

DEFAULT_MAX_WIDTH = 2**16


def max_width() -> int:
    raw = os.environ.get("LABY_MAX_WIDTH")
    if not raw:
        return DEFAULT_MAX_WIDTH
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"LABY_MAX_WIDTH must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("LABY_MAX_WIDTH must be positive")
    return value


def backend_name() -> str:
    return os.environ.get("LABY_BACKEND", "numba").strip().lower()
