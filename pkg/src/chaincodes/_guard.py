from __future__ import annotations

import os

from .errors import EnumerationTooLarge

GUARD_ENV = "CHAINCODES_ENUM_GUARD"
DEFAULT_GUARD = 2**24


def enumeration_guard() -> int:
    raw = os.environ.get(GUARD_ENV)
    return int(raw) if raw else DEFAULT_GUARD


def check_guard(count: int, what: str) -> None:
    limit = enumeration_guard()
    if count > limit:
        raise EnumerationTooLarge(f"{what}: {count} exceeds enumeration guard {limit} (set {GUARD_ENV})")
