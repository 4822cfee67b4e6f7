"""Permutations, pattern containment, and the statistics everything else consumes.

A permutation is a tuple of distinct positive integers.  Positions are
1-based throughout: the entry at position ``i`` of ``pi`` is ``pi[i - 1]``.
A permutation is *normalized* when its entries are exactly ``{1, ..., n}``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def normalize(word: Sequence[int]) -> Perm:
    """Return the order-isomorphic permutation of {1..n}.

    >>> normalize((2, 7, 5))
    (1, 3, 2)
    >>> normalize((3, 1, 4, 7))
    (2, 1, 3, 4)
    """
    entries = tuple(word)
    if len(set(entries)) != len(entries):
        raise ValueError(f"entries must be distinct: {entries}")
    rank = {v: i for i, v in enumerate(sorted(entries), start=1)}
    return tuple(rank[v] for v in entries)


def is_normalized(pi: Sequence[int]) -> bool:
    return sorted(pi) == list(range(1, len(pi) + 1))


def _require_normalized(pi: Sequence[int]) -> None:
    if not is_normalized(pi):
        raise ValueError(f"permutation must be normalized: {tuple(pi)}")


def contains(sigma: Sequence[int], tau: Sequence[int]) -> bool:
    """True iff some subsequence of ``sigma`` normalizes to the pattern ``tau``.

    Pruned depth-first search over index subsequences; fine for the
    desk-scale inputs used here (len(sigma) <= 12, len(tau) <= 4).

    >>> contains((3, 1, 4, 2, 5, 6, 7), (3, 1, 2))
    True
    >>> contains((1, 2, 3, 4), (2, 1))
    False
    """
    pat = normalize(tau)
    m, n = len(pat), len(sigma)
    if m == 0:
        return True
    if m > n:
        return False
    chosen: list[int] = []

    def extend(k: int, start: int) -> bool:
        if k == m:
            return True
        pk = pat[k]
        for i in range(start, n - (m - k) + 1):
            v = sigma[i]
            if all((v > w) == (pk > pat[j]) for j, w in enumerate(chosen)):
                chosen.append(v)
                if extend(k + 1, i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def avoids(sigma: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return all(not contains(sigma, tau) for tau in patterns)


def _canonical_patterns(patterns: Iterable[Sequence[int]]) -> tuple[Perm, ...]:
    return tuple(sorted({normalize(p) for p in patterns}, key=lambda p: (len(p), p)))


@lru_cache(maxsize=None)
def _avoiders(n: int, patterns: tuple[Perm, ...]) -> tuple[Perm, ...]:
    if not patterns:
        return tuple(itertools.permutations(range(1, n + 1)))
    if len(patterns) > 1:
        # Filtering the first pattern's cached avoider list preserves the
        # lexicographic order and serves arbitrary pattern sets.
        rest = patterns[1:]
        return tuple(p for p in _avoiders(n, patterns[:1]) if avoids(p, rest))
    tau = patterns[0]
    return tuple(
        p for p in itertools.permutations(range(1, n + 1)) if not contains(p, tau)
    )


def avoiders(n: int, patterns: Iterable[Sequence[int]]) -> tuple[Perm, ...]:
    """All permutations in S_n avoiding every pattern, in lexicographic order.

    >>> len(avoiders(4, [(3, 1, 2)]))
    14
    >>> avoiders(0, [(2, 1)])
    ((),)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _avoiders(n, _canonical_patterns(patterns))


def descents(pi: Sequence[int]) -> tuple[int, ...]:
    """Positions ``i`` with ``pi_i > pi_{i+1}``, strictly increasing.

    >>> descents((3, 1, 4, 2, 5, 6, 7))
    (1, 3)
    """
    return tuple(i for i in range(1, len(pi)) if pi[i - 1] > pi[i])


def tail_length(pi: Sequence[int]) -> int:
    """Smallest ``l >= 0`` with ``pi_{n-l} != n-l``; an identity has tail n.

    >>> tail_length((2, 3, 1, 6, 5, 4, 7, 8, 9))
    3
    >>> tail_length((1, 2, 3))
    3
    """
    _require_normalized(pi)
    n = len(pi)
    ell = 0
    while ell < n and pi[n - ell - 1] == n - ell:
        ell += 1
    return ell


def direct_sum(*parts: Sequence[int]) -> Perm:
    """Concatenate permutations, shifting each block above the previous ones."""
    out: list[int] = []
    offset = 0
    for part in parts:
        out.extend(v + offset for v in part)
        offset += len(part)
    return tuple(out)


def components(pi: Sequence[int]) -> tuple[Perm, ...]:
    """The sum-indecomposable components, each normalized.

    >>> components((2, 1, 4, 3, 7, 6, 5))
    ((2, 1), (2, 1), (3, 2, 1))
    >>> components((3, 2, 1))
    ((3, 2, 1),)
    """
    _require_normalized(pi)
    out: list[Perm] = []
    start = 0
    run_max = 0
    for i, v in enumerate(pi, start=1):
        if v > run_max:
            run_max = v
        if run_max == i:
            out.append(normalize(pi[start:i]))
            start = i
    return tuple(out)


def component_count(pi: Sequence[int]) -> int:
    return len(components(pi))


def is_layered(pi: Sequence[int]) -> bool:
    """True iff every component is decreasing (equivalently pi avoids 231 and 312)."""
    return all(c == tuple(range(len(c), 0, -1)) for c in components(pi))


def lr_maxima(pi: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """The points ``(i, pi_i)`` higher than everything to their left.

    >>> lr_maxima((2, 3, 1, 6, 5, 4, 7, 8, 9))
    ((1, 2), (2, 3), (4, 6), (7, 7), (8, 8), (9, 9))
    """
    out: list[tuple[int, int]] = []
    best = 0
    for i, v in enumerate(pi, start=1):
        if v > best:
            out.append((i, v))
            best = v
    return tuple(out)
