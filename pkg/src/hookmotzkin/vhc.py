"""Hooks, valid hook configurations, and their enumeration by backtracking.

A hook of ``pi`` runs from a southwest endpoint ``(i, pi_i)`` vertically up
and then right to a northeast endpoint ``(j, pi_j)``, requiring ``i < j``
and ``pi_i < pi_j``.  A valid hook configuration carries one hook per
descent (southwest endpoints are exactly the descent tops), no point of the
plot may lie directly above a hook's horizontal segment, and two hooks may
only meet where the northeast endpoint of one is the southwest endpoint of
the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .perm import (
    Perm,
    avoiders,
    descents,
    lr_maxima,
    normalize,
    tail_length,
)


class Hook(NamedTuple):
    sw: int  # position of the southwest endpoint
    ne: int  # position of the northeast endpoint


@dataclass(frozen=True)
class HookConfig:
    """A permutation plus the northeast endpoint chosen for each descent."""

    perm: Perm
    ne_of_descent: tuple[int, ...]

    @property
    def hooks(self) -> tuple[Hook, ...]:
        return tuple(
            Hook(d, j) for d, j in zip(descents(self.perm), self.ne_of_descent)
        )


def is_hook_of(pi: Sequence[int], hook: Hook | tuple[int, int]) -> bool:
    i, j = hook
    return 1 <= i < j <= len(pi) and pi[i - 1] < pi[j - 1]


def _segments(pi: Sequence[int], hook: tuple[int, int]):
    # Trace of a hook: vertical segment at x=i from pi_i up to pi_j, then
    # horizontal segment at y=pi_j from x=i to x=j.
    i, j = hook
    return (
        ("V", i, pi[i - 1], pi[j - 1]),
        ("H", pi[j - 1], i, j),
    )


_OVERLAP = "overlap"


def _intersect(s1, s2):
    """Intersection of two axis-parallel segments: None, a point, or overlap."""
    o1, f1, lo1, hi1 = s1
    o2, f2, lo2, hi2 = s2
    if o1 == o2:
        if f1 != f2:
            return None
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return None
        if lo < hi:
            return _OVERLAP
        return (f1, lo) if o1 == "V" else (lo, f1)
    if o1 == "H":
        s1, s2 = s2, s1
        o1, f1, lo1, hi1 = s1
        o2, f2, lo2, hi2 = s2
    # s1 vertical at x=f1, s2 horizontal at y=f2
    if lo2 <= f1 <= hi2 and lo1 <= f2 <= hi1:
        return (f1, f2)
    return None


def _hooks_compatible(pi: Sequence[int], h1: tuple[int, int], h2: tuple[int, int]) -> bool:
    allowed = set()
    if h1[1] == h2[0]:
        allowed.add((h1[1], pi[h1[1] - 1]))
    if h2[1] == h1[0]:
        allowed.add((h2[1], pi[h2[1] - 1]))
    for s1 in _segments(pi, h1):
        for s2 in _segments(pi, h2):
            hit = _intersect(s1, s2)
            if hit is None:
                continue
            if hit == _OVERLAP or hit not in allowed:
                return False
    return True


def _nothing_above(pi: Sequence[int], hook: tuple[int, int]) -> bool:
    # No plot point directly above the horizontal segment: every point
    # strictly between the endpoints must sit below the hook's height.
    i, j = hook
    top = pi[j - 1]
    return all(pi[a] < top for a in range(i, j - 1))


def validate(cfg: HookConfig) -> bool:
    """Full geometric validation; returns False rather than raising.

    Checks the one-hook-per-descent structure, the hook shape constraints,
    the no-point-above condition, and pairwise non-intersection (a shared
    point is allowed only where one hook's northeast endpoint is the other's
    southwest endpoint).
    """
    pi = cfg.perm
    ds = descents(pi)
    if len(cfg.ne_of_descent) != len(ds):
        return False
    hooks = [(d, j) for d, j in zip(ds, cfg.ne_of_descent)]
    for h in hooks:
        if not is_hook_of(pi, h):
            return False
        if not _nothing_above(pi, h):
            return False
    for a in range(len(hooks)):
        for b in range(a + 1, len(hooks)):
            if not _hooks_compatible(pi, hooks[a], hooks[b]):
                return False
    return True


def _iter_ne_tuples(pi: Perm) -> Iterator[tuple[int, ...]]:
    """Backtrack over descents in increasing position order.

    Candidates for each descent are filtered by incremental validity, so
    every complete tuple is already valid; tuples come out in lexicographic
    order.
    """
    ds = descents(pi)
    if not ds:
        yield ()
        return
    n = len(pi)
    chosen: list[int] = []
    placed: list[tuple[int, int]] = []

    def admissible(hook: tuple[int, int]) -> bool:
        return _nothing_above(pi, hook) and all(
            _hooks_compatible(pi, h, hook) for h in placed
        )

    def backtrack(t: int) -> Iterator[tuple[int, ...]]:
        if t == len(ds):
            yield tuple(chosen)
            return
        d = ds[t]
        top = pi[d - 1]
        for j in range(d + 1, n + 1):
            if pi[j - 1] > top and admissible((d, j)):
                chosen.append(j)
                placed.append((d, j))
                yield from backtrack(t + 1)
                chosen.pop()
                placed.pop()

    yield from backtrack(0)


def enumerate_vhcs(pi: Sequence[int]) -> tuple[HookConfig, ...]:
    """All valid hook configurations of ``pi`` in lexicographic ne-tuple order.

    Increasing permutations (including the empty one) have exactly one
    configuration, with no hooks.
    """
    perm = tuple(pi)
    out = []
    for ne in _iter_ne_tuples(perm):
        cfg = HookConfig(perm, ne)
        assert validate(cfg)  # safety net over the incremental filter
        out.append(cfg)
    return tuple(out)


@lru_cache(maxsize=None)
def _count_vhcs_normalized(pi: Perm) -> int:
    return sum(1 for _ in _iter_ne_tuples(pi))


def count_vhcs(pi: Sequence[int]) -> int:
    """|VHC(pi)|; a permutation and its normalization have equal counts."""
    return _count_vhcs_normalized(normalize(pi))


def count_vhcs_of_class(n: int, patterns: Iterable[Sequence[int]]) -> int:
    """Sum of |VHC(pi)| over all pattern-avoiding pi in S_n (brute force).

    This is the enumeration oracle that every recurrence and closed form in
    :mod:`hookmotzkin.counting` is checked against.
    """
    return sum(count_vhcs(p) for p in avoiders(n, patterns))


def abundancy(cfg: HookConfig) -> int:
    """Number of open sites: left-to-right maxima that are not ne endpoints."""
    if not validate(cfg):
        raise ValueError("configuration is not valid")
    ne = set(cfg.ne_of_descent)
    return sum(1 for pos, _ in lr_maxima(cfg.perm) if pos not in ne)


def open_sites(cfg: HookConfig) -> tuple[tuple[int, int], ...]:
    if not validate(cfg):
        raise ValueError("configuration is not valid")
    ne = set(cfg.ne_of_descent)
    return tuple(pt for pt in lr_maxima(cfg.perm) if pt[0] not in ne)


def split_at_hook(pi: Sequence[int], hook: Hook | tuple[int, int]) -> tuple[Perm, Perm]:
    """Split ``pi`` into its unsheltered and sheltered parts along ``hook``.

    The unsheltered part is ``pi_1..pi_i pi_{j+1}..pi_n`` and the sheltered
    part is ``pi_{i+1}..pi_{j-1}``; the entry ``pi_j`` appears in neither.

    >>> split_at_hook((3, 1, 4, 2, 5, 6, 7), (3, 6))
    ((3, 1, 4, 7), (2, 5))
    """
    if not is_hook_of(pi, hook):
        raise ValueError(f"{tuple(hook)} is not a hook of {tuple(pi)}")
    i, j = hook
    return tuple(pi[:i]) + tuple(pi[j:]), tuple(pi[i : j - 1])


def sw_hooks(pi: Sequence[int], i: int) -> tuple[Hook, ...]:
    """All hooks of ``pi`` with southwest endpoint at position ``i``."""
    return tuple(
        Hook(i, j) for j in range(i + 1, len(pi) + 1) if pi[j - 1] > pi[i - 1]
    )


def is_tail_bound(pi: Sequence[int], d: int) -> bool:
    """A descent is tail-bound if all its hooks end in the tail of ``pi``."""
    n = len(pi)
    ell = tail_length(pi)
    hooks = sw_hooks(pi, d)
    return bool(hooks) and all(h.ne > n - ell for h in hooks)


def tail_refined_count(n: int, ell: int, patterns: Iterable[Sequence[int]]) -> int:
    """Sum of |VHC(pi)| over avoiders of length ``n + ell`` with tail exactly ``ell``."""
    return sum(
        count_vhcs(p)
        for p in avoiders(n + ell, patterns)
        if tail_length(p) == ell
    )
