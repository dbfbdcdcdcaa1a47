"""Enumeration bounds.

All exhaustive computations refuse to run past these limits rather than
silently taking hours.  The defaults are desk-scale; the CLI can raise them
per run with --bound-override NAME=VALUE.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass
class Limits:
    group_enum: int = 8        # full enumeration of the rank-n signed group
    centralizer_enum: int = 6  # centralizer by direct filtering
    brute_force: int = 7       # element-level root counting
    class_level: int = 12      # class-level root enumerators
    series: int = 8            # two-alphabet series / per-class character extraction
    psi_brute: int = 5         # induced-character values by centralizer sums
    sn_table: int = 10         # symmetric group character table
    bn_table: int = 10         # signed permutation group character table
    root_s: int = 9            # symmetric group root enumerators


LIMITS = Limits()

_NAMES = {f.name.replace("_", "-"): f.name for f in fields(Limits)}


class BoundExceeded(RuntimeError):
    def __init__(self, name: str, limit: int, requested: int):
        self.name = name
        self.limit = limit
        self.requested = requested
        super().__init__(
            f"n = {requested} exceeds the {name.replace('_', '-')} bound {limit}; "
            f"raise it with --bound-override {name.replace('_', '-')}={requested}"
        )


def check(name: str, requested: int) -> None:
    limit = getattr(LIMITS, name)
    if requested > limit:
        raise BoundExceeded(name, limit, requested)


def override(name: str, value: int) -> None:
    key = _NAMES.get(name, name.replace("-", "_"))
    if not hasattr(LIMITS, key):
        raise ValueError(f"unknown bound {name!r}; known: {', '.join(sorted(_NAMES))}")
    setattr(LIMITS, key, int(value))
