"""Closed quarter-plane walks with the five-step set used by the walk identity.

``walk_counts(k)`` counts walks of k steps from the origin back to the
origin that never leave ``{x >= 0, y >= 0}``, using the steps
(-1,0), (-1,1), (0,-1), (0,1), (1,-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

STEPS = ((-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1))


@lru_cache(maxsize=None)
def walk_distribution(k: int) -> dict[tuple[int, int], int]:
    """Counts of k-step confined walks from the origin, by endpoint."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return {(0, 0): 1}
    prev = walk_distribution(k - 1)
    out: dict[tuple[int, int], int] = {}
    for (x, y), cnt in prev.items():
        for dx, dy in STEPS:
            nx, ny = x + dx, y + dy
            if nx >= 0 and ny >= 0:
                key = (nx, ny)
                out[key] = out.get(key, 0) + cnt
    return out


def walk_counts(k: int) -> int:
    """w(k): closed confined walks of length k.  w(0)=1, w(1)=0, w(2)=1."""
    return walk_distribution(k).get((0, 0), 0)


def walk_counts_exhaustive(k: int) -> int:
    """Independent oracle: recursive enumeration of all step sequences."""

    def count_from(x: int, y: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if (x, y) == (0, 0) else 0
        total = 0
        for dx, dy in STEPS:
            nx, ny = x + dx, y + dy
            if nx >= 0 and ny >= 0:
                total += count_from(nx, ny, remaining - 1)
        return total

    return count_from(0, 0, k)


@dataclass(frozen=True)
class WalkIdentityReport:
    n_max: int
    ok: bool
    first_mismatch: int | None


def walk_identity_check(n_max: int) -> WalkIdentityReport:
    """Verify sankar_sum(n) == count_av312(n) for 1 <= n <= n_max."""
    from .counting import count_av312, sankar_sum

    if n_max < 1:
        raise ValueError("n_max must be positive")
    for n in range(1, n_max + 1):
        if sankar_sum(n) != count_av312(n):
            return WalkIdentityReport(n_max, False, n)
    return WalkIdentityReport(n_max, True, None)
