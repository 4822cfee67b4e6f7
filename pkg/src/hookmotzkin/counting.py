"""Recurrence tables and closed forms for the pattern-restricted counts.

Each family keeps a memoized big-integer table refined by the statistic its
recurrence peels off: tail length and component count for Av(312), tail
length for Av(231), Av(231,321) and Av(231,1243), abundancy for
Av(312,321).  ``B`` tables count configurations with the statistic exact,
``_ge`` tables with the statistic at least the given value; the two are
linked by shifting the free length, e.g. ``B_ge(l, n) = B(l, n) +
B_ge(l + 1, n - 1)`` for the tail-refined families.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .motzkin import first_down_stat, motzkin_number
from .walks import walk_counts


# -- Av(312): table refined by tail length l and component count c ----------

@lru_cache(maxsize=None)
def _b312(l: int, c: int, n: int) -> int:
    # B_{l,c}(n): configurations over length n+l avoiders with tl = l, comp = c.
    if n < 0 or c < l or c > l + n:
        return 0
    if c == l:
        return 1 if n == 0 else 0
    if n == 0:
        return 0
    return sum(_b312_ge(l - j, c - j, n - 1) for j in range(1, l + 1))


@lru_cache(maxsize=None)
def _b312_ge(l: int, c: int, m: int) -> int:
    # B_{>=l,>=c}(m), aggregated over tail lengths >= l and comp counts >= c.
    if m < 0:
        return 0
    head = sum(_b312(l, cp, m) for cp in range(max(c, l), l + m + 1))
    return head + _b312_ge(l + 1, c, m - 1)


def count_av312(n: int) -> int:
    """|VHC(Av_n(312))| = 1, 1, 2, 5, 14, 44, 148, ... (n >= 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _b312_ge(0, 0, n)


# -- Av(231) (equivalently Av(132)): tail-refined table ----------------------

@lru_cache(maxsize=None)
def _av231_ge_table(size: int) -> tuple[tuple[int, ...], ...]:
    """B_ge[l][n] for l + n <= size, filled iteratively by total length.

    B_l(n) convolves unsheltered against sheltered counts:
    B_l(n) = sum_{i=1}^{n-1} sum_{j=1}^{l} B_ge(l-j+1, n-1-i) * B_ge(j-1, i)
    with B_l(0) = 1, and B_ge(l, n) = B_l(n) + B_ge(l+1, n-1).
    """
    ge: list[list[int]] = [[0] * (size + 1) for _ in range(size + 2)]
    for l in range(size + 2):
        ge[l][0] = 1
    for n in range(1, size + 1):
        for l in range(0, size - n + 1):
            exact = 0
            for j in range(1, l + 1):
                row_u = ge[l - j + 1]
                row_s = ge[j - 1]
                exact += sum(
                    row_u[n - 1 - i] * row_s[i] for i in range(1, n)
                )
            ge[l][n] = exact + ge[l + 1][n - 1]
    return tuple(tuple(row) for row in ge)


_av231_size = 48


def _av231_ge(l: int, n: int) -> int:
    # The table only holds valid entries on l + n <= size; grow once and
    # keep reusing the largest fill.
    global _av231_size
    if n < 0:
        return 0
    if l + n > _av231_size:
        _av231_size = l + n
    return _av231_ge_table(_av231_size)[l][n]


def count_av231(n: int) -> int:
    """|VHC(Av_n(231))|, which also equals |VHC(Av_n(132))|."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _av231_ge(0, n)


def count_av231_prefix(n_max: int) -> list[int]:
    """count_av231(n) for n = 0..n_max, sharing one table fill."""
    return [count_av231(n) for n in range(n_max + 1)]


# -- Av(231, 321): tail-refined table ----------------------------------------

@lru_cache(maxsize=None)
def _b231_321(l: int, n: int) -> int:
    if n == 0:
        return 1
    # The sheltered side is forced increasing, leaving a single sum over the
    # position of the peeled maximum.
    return sum(
        _b231_321_ge(l - j + 1, m)
        for j in range(1, l + 1)
        for m in range(0, n - 1)
    )


@lru_cache(maxsize=None)
def _b231_321_ge(l: int, n: int) -> int:
    if n < 0:
        return 0
    return _b231_321(l, n) + _b231_321_ge(l + 1, n - 1)


def count_av231_321(n: int) -> int:
    """|VHC(Av_n(231,321))|."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _b231_321_ge(0, n)


# -- Av(312, 321): abundancy-refined table ------------------------------------

@lru_cache(maxsize=None)
def _a312_321(a: int, n: int) -> int:
    # A_a(n): configurations over length n+a avoiders with abundancy exactly a.
    if n == 0:
        return 1
    if a == 0:
        return 0  # the leftmost point of a nonempty permutation is open
    return _a312_321(a - 1, n) + sum(
        _a312_321_ge(a - r + 1, n - 2) for r in range(1, a + 1)
    )


@lru_cache(maxsize=None)
def _a312_321_ge(a: int, n: int) -> int:
    if n < 0:
        return 0
    if n == 0:
        return 1
    return _a312_321(a, n) + _a312_321_ge(a + 1, n - 1)


def count_av312_321(n: int) -> int:
    """|VHC(Av_n(312,321))| via the abundancy table."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _a312_321_ge(0, n)


def closed_form_312_321(n: int) -> int:
    """sum_k C(n-k-1, k) C(n, 2k) / (2k+1), asserted integral term by term.

    >>> closed_form_312_321(4)
    5
    """
    if n < 1:
        raise ValueError("n must be positive")
    total_num = 0
    total_den = 1
    for k in range((n - 1) // 2 + 1):
        num = comb(n - k - 1, k) * comb(n, 2 * k)
        den = 2 * k + 1
        total_num = total_num * den + num * total_den
        total_den *= den
    if total_num % total_den:
        raise RuntimeError("closed form produced a non-integer total")
    return total_num // total_den


# -- Av(132, 321): closed form ------------------------------------------------

def closed_form_132_321(n: int) -> int:
    """1 + sum_{l=1}^{n-1} (n-l-1) l; matches (1-3x+3x^2)/(1-x)^4.

    >>> closed_form_132_321(4)
    5
    """
    if n < 1:
        raise ValueError("n must be positive")
    return 1 + sum((n - l - 1) * l for l in range(1, n))


# -- Av(132, 231) helper table (tail-refined), from the first-down statistic --

@lru_cache(maxsize=None)
def _a132_231(l: int, n: int) -> int:
    # A_l(n) = b(n+l-1, l+1) for n >= 2; lengths below that are degenerate.
    if n == 0:
        return 1
    if n == 1:
        return 0
    return first_down_stat(n + l - 1, l + 1)


@lru_cache(maxsize=None)
def _a132_231_ge(l: int, n: int) -> int:
    if n < 0:
        return 0
    return _a132_231(l, n) + _a132_231_ge(l + 1, n - 1)


def tail_refined_132_231(l: int, n: int) -> int:
    """A_l(n): |VHC| over Av_{n+l}(132,231) with tail length exactly l."""
    if l < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    return _a132_231(l, n)


# -- Av(231, 1243): tail-refined table ----------------------------------------

@lru_cache(maxsize=None)
def _b1243(l: int, n: int) -> int:
    # Lengths n+l with tail exactly l.  The length-(l+1) case has no such
    # permutation, hence the n == 1 base; the displayed recurrence needs the
    # peeled maximum to sit at position >= 1, so it starts at n == 2.
    if n == 0:
        return 1
    if n == 1:
        return 0
    total = 0
    for j in range(1, l + 1):
        total += sum(
            comb(l - j + 1, n - 2 - i) * _a132_231_ge(j - 1, i)
            for i in range(1, n - 1)
        )
        total += _b1243_ge(j - 1, n - 1)
    return total


@lru_cache(maxsize=None)
def _b1243_ge(l: int, n: int) -> int:
    if n < 0:
        return 0
    return _b1243(l, n) + _b1243_ge(l + 1, n - 1)


def count_av231_1243(n: int) -> int:
    """|VHC(Av_n(231,1243))|."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _b1243_ge(0, n)


# -- pairs, triples, quadruple ------------------------------------------------

def pair_counts_motzkin(n: int) -> int:
    """|VHC(Av_n(P))| = M_{n-1} for P in {132,231}, {132,312}, {231,312}."""
    if n < 1:
        raise ValueError("n must be positive")
    return motzkin_number(n - 1)


def fibonacci(n: int) -> int:
    """F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError("n must be positive")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def count_av132_231_321(n: int) -> int:
    """1 + C(n-1, 2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return 1 + comb(n - 1, 2)


def count_av132_312_321(n: int) -> int:
    """1 + C(n-1, 2)."""
    return count_av132_231_321(n)


def count_av132_231_312(n: int) -> int:
    """F_n."""
    return fibonacci(n)


def count_av132_231_312_321(n: int) -> int:
    """n - 1 for n >= 2; the single increasing permutation gives 1 at n = 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return n - 1 if n >= 2 else 1


_SMALL_CLASS_FORMS = {
    "132_231_321": count_av132_231_321,
    "132_312_321": count_av132_312_321,
    "132_231_312": count_av132_231_312,
    "132_231_312_321": count_av132_231_312_321,
}


def prop_closed_forms(family: str, n: int) -> int:
    """Closed forms for the four small classes, keyed by their pattern lists."""
    try:
        fn = _SMALL_CLASS_FORMS[family]
    except KeyError:
        raise ValueError(f"unknown family: {family!r}") from None
    return fn(n)


# -- the binomial walk transform ----------------------------------------------

def sankar_sum(n: int) -> int:
    """sum_{k=0}^{n-1} C(n-1, k) w(k); equals count_av312(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(comb(n - 1, k) * walk_counts(k) for k in range(n))
