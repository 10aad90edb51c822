"""Electric and magnetic field samples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class EMSample:
    """``eE`` and ``eB`` (internal units) at ``position = (t, x, y, z)``."""

    E: Any
    B: Any
    position: tuple
