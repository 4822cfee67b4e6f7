"""Motzkin paths, their gap decomposition, four order relations, and statistics.

A Motzkin path of length n is a word over {U, D, E} with as many U's as D's
in which every prefix has at least as many U's as D's.  Every path factors
uniquely as ``X1 D^g1 X2 D^g2 ... Xm D^gm`` with each ``Xj`` in {U, E};
the letters and gaps of that factorization drive the class, longevity, and
order relations below.  Dyck paths are the Motzkin paths with no E steps.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple

KINDS = ("S", "C", "T", "A")


def is_motzkin_word(word: str) -> bool:
    h = 0
    for ch in word:
        if ch == "U":
            h += 1
        elif ch == "D":
            h -= 1
        elif ch != "E":
            return False
        if h < 0:
            return False
    return h == 0


def _require_path(word: str) -> None:
    if not is_motzkin_word(word):
        raise ValueError(f"not a Motzkin path: {word!r}")


def heights(word: str) -> tuple[int, ...]:
    """Running height after each step."""
    out = []
    h = 0
    for ch in word:
        if ch == "U":
            h += 1
        elif ch == "D":
            h -= 1
        out.append(h)
    return tuple(out)


@lru_cache(maxsize=None)
def all_paths(n: int) -> tuple[str, ...]:
    """All Motzkin paths of length n, lexicographic with letter order U < D < E.

    >>> all_paths(3)
    ('UDE', 'UED', 'EUD', 'EEE')
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[str] = []
    word: list[str] = []

    def grow(h: int, remaining: int) -> None:
        if remaining == 0:
            out.append("".join(word))
            return
        if h + 1 <= remaining - 1:
            word.append("U")
            grow(h + 1, remaining - 1)
            word.pop()
        if h > 0:
            word.append("D")
            grow(h - 1, remaining - 1)
            word.pop()
        if h <= remaining - 1:
            word.append("E")
            grow(h, remaining - 1)
            word.pop()

    grow(0, n)
    return tuple(out)


@lru_cache(maxsize=None)
def motzkin_number(n: int) -> int:
    """M_n = 1, 1, 2, 4, 9, 21, 51, ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return 1
    return motzkin_number(n - 1) + sum(
        motzkin_number(k) * motzkin_number(n - 2 - k) for k in range(n - 1)
    )


class PathDecomposition(NamedTuple):
    letters: str
    gaps: tuple[int, ...]


def decompose(word: str) -> PathDecomposition:
    """The unique factorization ``X1 D^g1 ... Xm D^gm``.

    >>> decompose("UEDUUEDUDED")
    PathDecomposition(letters='UEUUEUE', gaps=(0, 1, 0, 0, 1, 1, 1))
    """
    _require_path(word)
    letters: list[str] = []
    gaps: list[int] = []
    for ch in word:
        if ch == "D":
            gaps[-1] += 1
        else:
            letters.append(ch)
            gaps.append(0)
    return PathDecomposition("".join(letters), tuple(gaps))


def reassemble(letters: str, gaps: Iterable[int]) -> str:
    return "".join(x + "D" * g for x, g in zip(letters, gaps, strict=True))


def longevity(word: str) -> tuple[int, ...]:
    """Per-letter longevity: -1 for an E; for a U at word position r, the
    smallest t >= 0 such that the window of t+1 steps after position r
    contains more D's than U's.

    >>> longevity("UEDUUEDUDED")
    (1, -1, 6, 1, -1, 0, -1)
    """
    out: list[int] = []
    dec = decompose(word)
    r = 0  # 0-based index of the current letter X_j in word
    for letter, gap in zip(dec.letters, dec.gaps):
        if letter == "E":
            out.append(-1)
        else:
            balance = 0  # D's minus U's in the window
            t = 0
            for s in range(r + 1, len(word)):
                if word[s] == "D":
                    balance += 1
                elif word[s] == "U":
                    balance -= 1
                if balance > 0:
                    t = s - (r + 1)
                    break
            out.append(t)
        r += 1 + gap
    return tuple(out)


def path_class(word: str) -> frozenset[int]:
    """Indices j (1-based) with X_j = E in the decomposition.

    >>> sorted(path_class("UEDUUEDUDED"))
    [2, 5, 7]
    """
    dec = decompose(word)
    return frozenset(j for j, x in enumerate(dec.letters, start=1) if x == "E")


def _below(a: str, b: str) -> bool:
    ha = 0
    hb = 0
    for ca, cb in zip(a, b):
        if ca == "U":
            ha += 1
        elif ca == "D":
            ha -= 1
        if cb == "U":
            hb += 1
        elif cb == "D":
            hb -= 1
        if ha > hb:
            return False
    return True


def leq(kind: str, a: str, b: str) -> bool:
    """Order relation on equal-length Motzkin paths.

    S compares height profiles pointwise; C additionally requires equal
    classes; T requires equal classes and componentwise longevity; A is
    equality only.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown order kind: {kind!r}")
    if len(a) != len(b):
        raise ValueError("paths must have equal length")
    if kind == "A":
        return a == b
    if kind == "S":
        return _below(a, b)
    da = decompose(a)
    db = decompose(b)
    # Equal classes on equal-length paths force equal letter words.
    if da.letters != db.letters:
        return False
    if kind == "C":
        return _below(a, b)
    return all(x <= y for x, y in zip(longevity(a), longevity(b)))


def intervals(n: int, kind: str) -> Iterator[tuple[str, str]]:
    """All ordered pairs (a, b) of length-n paths with a <= b.

    For C and T the pairs are bucketed by letter word first; classes
    partition both posets, so this is pure pruning.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown order kind: {kind!r}")
    paths = all_paths(n)
    if kind == "A":
        for p in paths:
            yield (p, p)
        return
    if kind == "S":
        for a in paths:
            for b in paths:
                if _below(a, b):
                    yield (a, b)
        return
    buckets: dict[str, list[str]] = {}
    for p in paths:
        buckets.setdefault(decompose(p).letters, []).append(p)
    for bucket in buckets.values():
        if kind == "C":
            for a in bucket:
                for b in bucket:
                    if _below(a, b):
                        yield (a, b)
        else:
            lons = {p: longevity(p) for p in bucket}
            for a in bucket:
                la = lons[a]
                for b in bucket:
                    lb = lons[b]
                    if all(x <= y for x, y in zip(la, lb)):
                        yield (a, b)


def count_intervals(n: int, kind: str) -> int:
    """|{(a, b) : a <= b}| over all pairs of length-n paths."""
    return sum(1 for _ in intervals(n, kind))


@lru_cache(maxsize=None)
def _descents_to_zero(m: int, h: int) -> int:
    # Paths of m steps in {U, D, E} from height h to 0 that stay >= 0.
    if h > m or h < 0:
        return 0
    if m == 0:
        return 1
    total = _descents_to_zero(m - 1, h + 1) + _descents_to_zero(m - 1, h)
    if h > 0:
        total += _descents_to_zero(m - 1, h - 1)
    return total


def first_down_stat(n: int, ell: int) -> int:
    """b(n, ell): length-n paths whose first D is step ell; b(n, n+1) = 1.

    The ell - 1 steps before the first D are U's and E's; summing over the
    number of U's among them counts the completions directly.
    """
    if not 1 <= ell <= n + 1:
        raise ValueError(f"ell must be in [1, {n + 1}]")
    if ell == n + 1:
        return 1
    return sum(
        comb(ell - 1, h) * _descents_to_zero(n - ell, h - 1)
        for h in range(1, ell)
    )


@lru_cache(maxsize=None)
def _axis_touch_counts(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in all_paths(n):
        touches = 1 + sum(1 for h in heights(p) if h == 0)
        out[touches] = out.get(touches, 0) + 1
    return out


def axis_touch_stat(n: int, ell: int) -> int:
    """a(n, ell): length-n paths with exactly ell lattice points on the axis.

    The starting point counts, so the single path of length 1 with an E step
    touches twice.  Computed by exhaustive enumeration; this is the brute
    side of the a = b equidistribution check.
    """
    return _axis_touch_counts(n).get(ell, 0)


def dyck_paths(k: int) -> Iterator[str]:
    """Dyck paths of length 2k as U/D words, lexicographic with U < D."""
    word: list[str] = []

    def grow(h: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            yield "".join(word)
            return
        if h + 1 <= remaining - 1:
            word.append("U")
            yield from grow(h + 1, remaining - 1)
            word.pop()
        if h > 0:
            word.append("D")
            yield from grow(h - 1, remaining - 1)
            word.pop()

    yield from grow(0, 2 * k)


def odd_downrun_dyck_count(n: int) -> int:
    """Dyck paths of length 2n whose maximal runs of D's all have odd length."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    count = 0
    for p in dyck_paths(n):
        run = 0
        ok = True
        for ch in p:
            if ch == "D":
                run += 1
            elif run:
                if run % 2 == 0:
                    ok = False
                    break
                run = 0
        if ok and run % 2 == 0 and run:
            ok = False
        if ok:
            count += 1
    return count
