"""Order caps. ``PMLAB_ORDER_CAP`` overrides the enumeration cap."""

from __future__ import annotations

import os

CONSTRUCTION_CAP = 256
ENUMERATION_CAP = 64


def construction_cap() -> int:
    return CONSTRUCTION_CAP


def enumeration_cap() -> int:
    raw = os.environ.get("PMLAB_ORDER_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return ENUMERATION_CAP
