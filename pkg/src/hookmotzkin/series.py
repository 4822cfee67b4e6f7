"""Truncated power series over exact rationals, named generating functions,
the degree-5 residual certificate, and rational root isolation.

A series carries its first ``order`` coefficients as ``Fraction`` values.
Binary operations truncate to the shorter operand, so an order-N result is
correct through x^(N-1) whenever the inputs are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .counting import count_av231_prefix

IntPolynomial = tuple[int, ...]  # coefficients low to high, trailing zeros trimmed

#: 256 x^3 - 645 x^2 - 2112 x - 2048; its real root is the growth rate of
#: the Av(231) configuration counts.
RHO_POLY: IntPolynomial = (-2048, -2112, -645, 256)

#: 41472 x^6 - 34749 x^4 + 5472 x^2 - 256; its positive real root is the
#: constant in front of the asymptotic formula.
BETA_POLY: IntPolynomial = (-256, 0, 5472, 0, -34749, 0, 41472)


@dataclass(frozen=True)
class Series:
    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > len(self.coeffs):
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[:order])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def series(values: Iterable[int | Fraction], order: int | None = None) -> Series:
    """Build a series from coefficients, zero-padding up to ``order``."""
    coeffs = [Fraction(v) for v in values]
    if order is not None:
        if len(coeffs) > order:
            coeffs = coeffs[:order]
        else:
            coeffs.extend([Fraction(0)] * (order - len(coeffs)))
    return Series(tuple(coeffs))


def ts_add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series(tuple(a[i] + b[i] for i in range(n)))


def ts_sub(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series(tuple(a[i] - b[i] for i in range(n)))


def ts_scale(a: Series, k: int | Fraction) -> Series:
    k = Fraction(k)
    return Series(tuple(c * k for c in a.coeffs))


def ts_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the shorter operand."""
    n = min(a.order, b.order)
    out = [Fraction(0)] * n
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n - i):
            bj = b[j]
            if bj != 0:
                out[i + j] += ai * bj
    return Series(tuple(out))


def ts_div(a: Series, b: Series) -> Series:
    """Series division; the divisor needs a nonzero constant term."""
    n = min(a.order, b.order)
    if n == 0:
        return Series(())
    if b[0] == 0:
        raise ZeroDivisionError("divisor has zero constant term")
    out: list[Fraction] = []
    for i in range(n):
        acc = a[i]
        for k in range(i):
            acc -= out[k] * b[i - k]
        out.append(acc / b[0])
    return Series(tuple(out))


def ts_sqrt(a: Series) -> Series:
    """The square root with constant term 1."""
    if a.order == 0:
        return Series(())
    if a[0] != 1:
        raise ValueError("square root requires constant term 1")
    out: list[Fraction] = [Fraction(1)]
    for n in range(1, a.order):
        acc = a[n]
        for k in range(1, n):
            acc -= out[k] * out[n - k]
        out.append(acc / 2)
    return Series(tuple(out))


def _shift_down(a: Series, k: int) -> Series:
    """Divide by x^k, requiring the low-order coefficients to vanish."""
    if any(a[i] != 0 for i in range(min(k, a.order))):
        raise ValueError("series is not divisible by x^k")
    return Series(a.coeffs[k:])


def integer_coeffs(a: Series) -> list[int]:
    """The coefficients as ints; raises if any is non-integral."""
    out = []
    for i, c in enumerate(a.coeffs):
        if c.denominator != 1:
            raise RuntimeError(f"coefficient {i} is not an integer: {c}")
        out.append(int(c))
    return out


GF_NAMES = (
    "motzkin",
    "av231_321",
    "av231_1243",
    "av231_312_321",
    "conj_132_3241",
)


def named_gf(name: str, order: int) -> Series:
    """Expand one of the closed-form generating functions to the given order.

    All of these have nonnegative integer coefficients; that is asserted
    before returning.
    """
    work = order + 4
    one = series([1], work)
    if name == "motzkin":
        rad = ts_sqrt(series([1, -2, -3], work))
        num = ts_sub(series([1, -1], work), rad)
        out = ts_scale(_shift_down(num, 2), Fraction(1, 2))
    elif name == "av231_321":
        rad = ts_sqrt(series([1, -4, 4, -4, 4], work))
        num = ts_sub(series([1, -2, 2], work), rad)
        out = ts_scale(_shift_down(num, 2), Fraction(1, 2))
    elif name == "av231_1243":
        # 1 + 2x^2 / (3x - 1 + sqrt(1 - 2x - 3x^2)): the denominator has a
        # vanishing constant term, so expand the conjugate form
        # 1 + x (3x - 1 - sqrt(1 - 2x - 3x^2)) / (2 (3x - 1)) instead.
        rad = ts_sqrt(series([1, -2, -3], work))
        num = ts_mul(series([0, 1], work), ts_sub(series([-1, 3], work), rad))
        out = ts_add(one, ts_div(num, series([-2, 6], work)))
    elif name == "av231_312_321":
        rad = ts_sqrt(series([1, -2, -1, -2, 1], work))
        num = ts_sub(series([1, -1, 1], work), rad)
        out = ts_scale(_shift_down(num, 2), Fraction(1, 2))
    elif name == "conj_132_3241":
        rad = ts_sqrt(series([1, -4, 2, 0, 1], work))
        num = ts_sub(series([1, 0, 1], work), rad)
        out = ts_scale(_shift_down(num, 1), Fraction(1, 2))
    else:
        raise ValueError(f"unknown generating function: {name!r}")
    out = out.truncate(order)
    values = integer_coeffs(out)
    if any(v < 0 for v in values):
        raise RuntimeError(f"{name} produced a negative coefficient")
    return out


#: Coefficients of Q(v, x) as polynomials in x, by power of v.  Q vanishes
#: identically on the Av(231) generating function.
Q_COEFFS: tuple[IntPolynomial, ...] = (
    (-1, 6, 15, 8),
    (1, -11, 0, 28, 16),
    (0, 4, -19, -14),
    (0, 0, 6, -9, 8),
    (0, 0, 0, 4),
    (0, 0, 0, 0, 1),
)


def q_residual(order: int) -> Series:
    """Evaluate the quintic Q at the Av(231) counting series, mod x^order.

    A zero result certifies that the recurrence-generated series satisfies
    the degree-5 algebraic equation.  A nonzero residual is returned, not
    raised; callers report it.
    """
    if order < 1:
        raise ValueError("order must be positive")
    v = series(count_av231_prefix(order - 1), order)
    return q_eval_at(v)


def q_eval_at(v: Series) -> Series:
    """Horner evaluation of Q(v, x) at an arbitrary series v."""
    order = v.order
    acc = series(Q_COEFFS[-1], order)
    for poly in reversed(Q_COEFFS[:-1]):
        acc = ts_add(ts_mul(acc, v), series(poly, order))
    return acc


def poly_eval(p: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def real_root(
    p: Sequence[int], lo: Fraction | int, hi: Fraction | int, tol: Fraction
) -> Fraction:
    """Bisect a sign change of ``p`` down to an interval of width <= tol.

    Exact rational arithmetic throughout; returns the midpoint of the final
    bracket, so the root is within tol/2 of the result.
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    if tol <= 0:
        raise ValueError("tol must be positive")
    flo = poly_eval(p, lo)
    fhi = poly_eval(p, hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo < 0) == (fhi < 0):
        raise ValueError("no sign change on the bracket")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = poly_eval(p, mid)
        if fmid == 0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return (lo + hi) / 2


def rho_approx(tol: Fraction = Fraction(1, 10**9)) -> Fraction:
    """The growth rate, about 4.658905."""
    return real_root(RHO_POLY, 4, 5, tol)


def beta_approx(tol: Fraction = Fraction(1, 10**9)) -> Fraction:
    """The asymptotic constant's root, about 0.805810."""
    return real_root(BETA_POLY, Fraction(7, 10), Fraction(9, 10), tol)


@dataclass(frozen=True)
class RatioReport:
    n_max: int
    rho: Fraction
    deviation_at_n_max: Fraction
    deviation_at_half: Fraction
    tolerance: Fraction
    passed: bool


def asymptotic_ratio_check(
    n_max: int, tolerance: Fraction = Fraction(1, 25)
) -> RatioReport:
    """Check that successive count ratios approach the predicted growth rate.

    Computes r_n = a_{n+1} / a_n for the Av(231) counts exactly, and passes
    when |r_{n_max} / rho - 1| is below ``tolerance`` and strictly smaller
    than the same deviation at n_max // 2.
    """
    if n_max < 50:
        raise ValueError("n_max must be at least 50")
    rho = rho_approx(Fraction(1, 10**12))
    a = count_av231_prefix(n_max + 1)

    def deviation(n: int) -> Fraction:
        return abs(Fraction(a[n + 1], a[n]) / rho - 1)

    dev_full = deviation(n_max)
    dev_half = deviation(n_max // 2)
    return RatioReport(
        n_max=n_max,
        rho=rho,
        deviation_at_n_max=dev_full,
        deviation_at_half=dev_half,
        tolerance=Fraction(tolerance),
        passed=dev_full < tolerance and dev_full < dev_half,
    )
