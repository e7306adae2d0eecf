"""Ground-size limits shared by the exhaustive routines."""

import os

from .errors import TooLarge

HARD_MAX_N = 6
DEFAULT_SOFT_MAX_N = 4
ENUMERATION_MAX_N = 5


def soft_max_n() -> int:
    """Soft cap for exhaustive suites; ``TOPOSCOPE_MAX_N`` may raise it up to the hard cap."""
    raw = os.environ.get("TOPOSCOPE_MAX_N")
    if raw is None:
        return DEFAULT_SOFT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_SOFT_MAX_N
    return max(0, min(value, HARD_MAX_N))


def require_n(n: int, limit: int, what: str) -> None:
    if n < 0:
        raise TooLarge(f"{what}: ground size must be nonnegative, got {n}")
    if n > min(limit, HARD_MAX_N):
        raise TooLarge(f"{what}: n={n} exceeds the cap of {min(limit, HARD_MAX_N)}")
