"""The bijection between hook configurations over Av(312) and path intervals.

A 312-avoider with configurations ends in its maximum, and its plot is
determined by the staircase matrix whose (i, j) entry counts the points
strictly between consecutive left-to-right maxima, vertically for the row
and horizontally for the column.  Reading gap sequences off the column and
row sums, and marking which maxima serve as northeast endpoints, turns a
configuration into a pair of Motzkin paths; the pair is an interval in the
class-refined order.  The inverse rebuilds the matrix from the margins by a
greedy fill, rebuilds the permutation, and reattaches the hooks.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .motzkin import decompose, is_motzkin_word, leq, reassemble
from .perm import Perm, contains, descents, is_layered, lr_maxima
from .vhc import HookConfig, validate

Matrix = tuple[tuple[int, ...], ...]


class PathInterval(NamedTuple):
    lower: str
    upper: str


#: Times the greedy hook assignment in ``inverse`` failed validation and the
#: exhaustive search ran instead.  Expected to stay zero; tracked so that a
#: surprise is visible.
FALLBACK_ASSIGNMENTS = {"count": 0}


def _maxima_right_to_left(pi: Sequence[int]) -> list[tuple[int, int]]:
    return list(reversed(lr_maxima(pi)))


def _check_312_with_sink(pi: Sequence[int]) -> None:
    n = len(pi)
    if n == 0 or pi[n - 1] != n:
        raise ValueError("permutation must end in its maximum")
    if contains(pi, (3, 1, 2)):
        raise ValueError("permutation contains 312")


def lr_matrix(pi: Sequence[int]) -> Matrix:
    """The staircase matrix of a 312-avoider that ends in its maximum.

    Entry (i, j), 1-based, counts plot points strictly between the i-th and
    (i+1)-st maxima in height (maxima numbered from the right, the sentinel
    (0, 0) closing the list) and strictly between the (l-j)-th and
    (l-j+1)-st maxima in position.
    """
    _check_312_with_sink(pi)
    maxima = _maxima_right_to_left(pi)
    ell = len(maxima) - 1
    maxima.append((0, 0))
    rows = [[0] * ell for _ in range(ell)]
    max_positions = {p for p, _ in maxima}
    for pos in range(1, len(pi) + 1):
        if pos in max_positions:
            continue
        val = pi[pos - 1]
        i = next(
            k for k in range(1, ell + 1)
            if maxima[k + 1][1] < val < maxima[k][1]
        )
        j = next(
            jj for jj in range(1, ell + 1)
            if maxima[ell - jj + 1][0] < pos < maxima[ell - jj][0]
        )
        rows[i - 1][j - 1] += 1
    return tuple(tuple(r) for r in rows)


def matrix_ok(m: Matrix) -> bool:
    """Staircase zeros plus the lower-2x2 condition."""
    ell = len(m)
    if any(len(row) != ell for row in m):
        return False
    for i in range(1, ell + 1):
        for j in range(1, ell + 1):
            if j <= ell - i and m[i - 1][j - 1] != 0:
                return False
    # Lower 2x2 submatrices: rows r < r', cols c < c' with l+1-c <= r.
    for r in range(1, ell + 1):
        for rp in range(r + 1, ell + 1):
            for c in range(max(1, ell + 1 - r), ell + 1):
                for cp in range(c + 1, ell + 1):
                    if m[rp - 1][c - 1] > 0 and m[r - 1][cp - 1] > 0:
                        return False
    return True


def forward(cfg: HookConfig) -> PathInterval:
    """Map a configuration over a 312-avoider to a pair of Motzkin paths.

    The lower path takes its gaps from the column sums of the staircase
    matrix, the upper from the row sums; letter j is U exactly when the
    (j-1)-st maximum from the right is a northeast endpoint.
    """
    pi = cfg.perm
    if len(pi) == 0:
        raise ValueError("configurations live over nonempty permutations")
    if not validate(cfg):
        raise ValueError("configuration is not valid")
    m = lr_matrix(pi)
    ell = len(m)
    maxima = _maxima_right_to_left(pi)
    ne = set(cfg.ne_of_descent)
    letters = "".join(
        "U" if maxima[j - 1][0] in ne else "E" for j in range(1, ell + 1)
    )
    gaps_lower = tuple(
        sum(m[i][ell - j] for i in range(ell)) for j in range(1, ell + 1)
    )
    gaps_upper = tuple(sum(m[i - 1]) for i in range(1, ell + 1))
    lower = reassemble(letters, gaps_lower)
    upper = reassemble(letters, gaps_upper)
    if not (is_motzkin_word(lower) and is_motzkin_word(upper)):
        raise RuntimeError("image words lost the ballot property")
    return PathInterval(lower, upper)


def reconstruct_matrix(
    row_sums: Sequence[int], col_sums: Sequence[int]
) -> Matrix:
    """The unique staircase matrix with the given margins.

    Greedy fill, rows top to bottom, each row placing as much as possible
    into its leftmost allowed columns.  Once a row moves past a column that
    column is saturated, so no later row can complete a forbidden lower 2x2
    pair; the margins are met exactly when the top-i row sums never exceed
    the rightmost-i column sums.
    """
    ell = len(row_sums)
    if len(col_sums) != ell:
        raise ValueError("margins must have equal length")
    if sum(row_sums) != sum(col_sums):
        raise ValueError("infeasible margins: totals differ")
    top = 0
    for i in range(1, ell + 1):
        top += row_sums[i - 1]
        if top > sum(col_sums[ell - i :]):
            raise ValueError("infeasible margins: dominance fails")
    remaining = list(col_sums)
    rows = [[0] * ell for _ in range(ell)]
    for i in range(1, ell + 1):
        budget = row_sums[i - 1]
        for j in range(ell - i + 1, ell + 1):
            if budget == 0:
                break
            put = min(budget, remaining[j - 1])
            rows[i - 1][j - 1] = put
            budget -= put
            remaining[j - 1] -= put
        if budget:
            raise ValueError("infeasible margins: row cannot be placed")
    m = tuple(tuple(r) for r in rows)
    if (
        not matrix_ok(m)
        or any(sum(r) != s for r, s in zip(m, row_sums))
        or any(
            sum(m[i][j] for i in range(ell)) != col_sums[j] for j in range(ell)
        )
    ):
        raise RuntimeError("greedy fill violated its own contract")
    return m


def permutation_from_matrix(m: Matrix) -> Perm:
    """Rebuild the unique 312-avoider whose staircase matrix is ``m``.

    Between consecutive maxima the points decrease in height from left to
    right, both within a horizontal strip and within a vertical strip, so
    each cell's points form a contiguous descending block.
    """
    if not matrix_ok(m):
        raise ValueError("matrix violates the staircase or lower-2x2 shape")
    ell = len(m)
    row_sums = [sum(r) for r in m]
    col_sums = [sum(m[i][j] for i in range(ell)) for j in range(ell)]
    n = ell + 1 + sum(row_sums)

    # Heights of the maxima, bottom strip first (row l sits under maximum l).
    height_of = [0] * (ell + 2)  # height_of[k] = height of the k-th maximum
    for k in range(ell, 0, -1):
        height_of[k] = height_of[k + 1] + row_sums[k - 1] + 1
    height_of[0] = height_of[1] + 1
    pos_of = [0] * (ell + 2)  # pos_of[k] = position of the k-th maximum
    pos_of[ell] = 1
    for j in range(1, ell + 1):
        pos_of[ell - j] = pos_of[ell - j + 1] + col_sums[j - 1] + 1

    values = [0] * (n + 1)
    for k in range(ell + 1):
        values[pos_of[k]] = height_of[k]
    # Vertical strip i hands its heights to cells (i, j) left to right,
    # highest block first; inside a horizontal strip the cells stack in
    # row order, so positions advance with i.
    next_pos = {
        j: pos_of[ell - j + 1] + 1 for j in range(1, ell + 1)
    }
    for i in range(1, ell + 1):
        next_height = height_of[i] - 1
        for j in range(1, ell + 1):
            for _ in range(m[i - 1][j - 1]):
                values[next_pos[j]] = next_height
                next_pos[j] += 1
                next_height -= 1
    return tuple(values[1:])


def _assign_hooks(
    pi: Perm, ne_positions: list[int]
) -> HookConfig | None:
    """Greedy assignment: descent tops right to left, each taking the
    leftmost unused northeast endpoint strictly right of and above it."""
    ds = descents(pi)
    if len(ds) != len(ne_positions):
        return None
    free = sorted(ne_positions)
    ne_of: dict[int, int] = {}
    for d in reversed(ds):
        top = pi[d - 1]
        pick = next(
            (j for j in free if j > d and pi[j - 1] > top), None
        )
        if pick is None:
            return None
        free.remove(pick)
        ne_of[d] = pick
    return HookConfig(pi, tuple(ne_of[d] for d in ds))


def _assign_hooks_exhaustive(
    pi: Perm, ne_positions: list[int]
) -> HookConfig | None:
    ds = descents(pi)
    used = [False] * len(ne_positions)
    choice: list[int] = []

    def backtrack(t: int) -> HookConfig | None:
        if t == len(ds):
            cfg = HookConfig(pi, tuple(choice))
            return cfg if validate(cfg) else None
        d = ds[t]
        for idx, j in enumerate(ne_positions):
            if not used[idx] and j > d and pi[j - 1] > pi[d - 1]:
                used[idx] = True
                choice.append(j)
                found = backtrack(t + 1)
                if found is not None:
                    return found
                choice.pop()
                used[idx] = False
        return None

    return backtrack(0)


def inverse(iv: PathInterval | tuple[str, str]) -> HookConfig:
    """The unique configuration mapping forward onto the given interval."""
    lower, upper = iv
    if not leq("C", lower, upper):
        raise ValueError("not an interval of the class-refined order")
    if lower == "":
        return HookConfig((1,), ())
    dec_lower = decompose(lower)
    dec_upper = decompose(upper)
    letters = dec_lower.letters
    ell = len(letters)
    row_sums = list(dec_upper.gaps)
    col_sums = [dec_lower.gaps[ell - j] for j in range(1, ell + 1)]
    m = reconstruct_matrix(row_sums, col_sums)
    pi = permutation_from_matrix(m)
    maxima = _maxima_right_to_left(pi)
    ne_positions = [
        maxima[i][0] for i in range(ell) if letters[i] == "U"
    ]
    cfg = _assign_hooks(pi, ne_positions)
    if cfg is None or not validate(cfg):
        FALLBACK_ASSIGNMENTS["count"] += 1
        cfg = _assign_hooks_exhaustive(pi, ne_positions)
        if cfg is None:
            raise RuntimeError("no valid hook assignment exists")
    return cfg


def is_diagonal_image(cfg: HookConfig) -> bool:
    """True iff the image interval is degenerate; holds exactly for layered
    underlying permutations."""
    image = forward(cfg)
    return image.lower == image.upper


def diagonal_matches_layered(cfg: HookConfig) -> bool:
    return is_diagonal_image(cfg) == is_layered(cfg.perm)
