"""Exhaustive-search bounds.

Every brute-force oracle refuses inputs above its bound. Bounds are plain
configuration: ``AZTEC_MAX_EXHAUSTIVE`` raises (or lowers) all of them at once.
"""

from __future__ import annotations

import os

DEFAULT_BOUNDS = {
    "tilings": 5,  # diamond order for tiling enumeration
    "flip": 3,  # diamond order for flip-graph BFS
    "asm": 6,  # ASM size
    "triangle": 6,  # bottom-row length for triangle enumeration
    "ice": 5,  # ice lattice size
    "poset": 5,  # diamond order for ideal counting
}


class BoundExceeded(ValueError):
    pass


def bound(kind: str) -> int:
    env = os.environ.get("AZTEC_MAX_EXHAUSTIVE")
    if env:
        return int(env)
    return DEFAULT_BOUNDS[kind]


def check_bound(kind: str, value: int) -> None:
    limit = bound(kind)
    if value > limit:
        raise BoundExceeded(
            f"{kind} search at size {value} exceeds the exhaustive bound {limit} "
            "(set AZTEC_MAX_EXHAUSTIVE to raise it)"
        )
