"""Runtime limits for the exact kernels and the searches."""

from __future__ import annotations

import os
from dataclasses import dataclass

# lcm(3..8); degrees phi(2L)/2 stay small enough for predictable runtimes.
DEFAULT_LEVEL_CAP = 840

ENV_LEVEL_CAP = "COXETERLAB_LEVEL_CAP"


def _env_level_cap() -> int:
    raw = os.environ.get(ENV_LEVEL_CAP)
    if raw is None:
        return DEFAULT_LEVEL_CAP
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_LEVEL_CAP} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{ENV_LEVEL_CAP} must be >= 1, got {value}")
    return value


@dataclass
class Limits:
    level_cap: int = DEFAULT_LEVEL_CAP
    cycle_det_max_order: int = 9
    product_total_order_cap: int = 12


_limits = Limits(level_cap=_env_level_cap())


def limits() -> Limits:
    return _limits


def level_cap() -> int:
    return _limits.level_cap


def set_level_cap(cap: int) -> None:
    if cap < 1:
        raise ValueError("level cap must be >= 1")
    _limits.level_cap = cap
