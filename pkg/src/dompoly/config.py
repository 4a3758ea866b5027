"""Capacity limits and defaults, overridable through ``DOMPOLY_*`` environment variables."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_PREFIX = "DOMPOLY_"

# One machine word per vertex subset.
WORD_BITS = 64
PRODUCT_CAP = 63
BRUTE_CAP = 26
GK2_CAP = 12
DEFAULT_SEED = 20130415


class CapacityError(ValueError):
    """An input exceeds a configured vertex capacity."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} vertices exceeds the cap of {cap}")
        self.what = what
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class Caps:
    brute: int = BRUTE_CAP
    product: int = PRODUCT_CAP
    gk2: int = GK2_CAP

    def __post_init__(self):
        for name in ("brute", "product", "gk2"):
            if getattr(self, name) <= 0:
                raise ValueError(f"cap {name!r} must be positive")

    def with_overrides(self, **kw) -> "Caps":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return default
    return int(raw)


def caps_from_env() -> Caps:
    return Caps(
        brute=_env_int("CAP_BRUTE", BRUTE_CAP),
        product=_env_int("CAP_PRODUCT", PRODUCT_CAP),
        gk2=_env_int("CAP_GK2", GK2_CAP),
    )


_current = caps_from_env()


def get_caps() -> Caps:
    return _current


def set_caps(caps: Caps) -> Caps:
    """Install ``caps`` as the process default and return the previous value."""
    global _current
    prev, _current = _current, caps
    return prev


def default_seed() -> int:
    return _env_int("SEED", DEFAULT_SEED)
