"""Resource caps shared by the enumeration-heavy operations."""

from __future__ import annotations

import os

DEFAULT_MAX_FACES = 2_000_000
ENV_MAX_FACES = "SIGNTOPE_MAX_FACES"


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured size cap."""


def max_faces() -> int:
    """Face cap, overridable through ``SIGNTOPE_MAX_FACES``."""
    raw = os.environ.get(ENV_MAX_FACES)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_FACES
