"""Pure-Python fixed-point series kernels.

These are the hot loops of the numeric layer.  All values are integer
mantissas scaled by a caller-supplied power of ten; every operation is exact
integer arithmetic, so results are bit-identical to the compiled twin in
``zetaodd._speedups``.
"""

from __future__ import annotations

BACKEND = "pure"


def alt_series_sum(m: int, stride: int, offset: int, scale: int, n: int):
    """Accelerated alternating sum S = sum_{k>=0} (-1)^k / (stride*k + offset)^m.

    Uses the Chebyshev-polynomial acceleration scheme for alternating series
    whose terms are moments of a positive measure on [0, 1]; n is the number
    of accelerated terms.  Returns ``(num, den, slack)`` where the scaled
    result is num/den and |S*scale - num/den| <= slack/den + 2 in mantissa
    units, plus a truncation of at most 2*scale/(3+sqrt(8))^n.
    """
    # den = ((3+sqrt(8))^n + (3-sqrt(8))^n) / 2 via the Pell-style recurrence.
    hp, h = 1, 3
    for _ in range(n - 1):
        hp, h = h, 6 * h - hp
    den = h if n >= 1 else 1

    b = -1
    c = -den
    total = 0
    slack = 0
    for k in range(n):
        c = b - c
        base = stride * k + offset
        term = scale // base**m
        total += c * term
        slack += abs(c)
        q, r = divmod(b * (2 * (k + n) * (k - n)), (2 * k + 1) * (k + 1))
        if r:
            raise ArithmeticError("coefficient recurrence lost exact divisibility")
        b = q
    return total, den, slack


def recip_power_sum(scale_num: int, stride: int, offset: int, m: int, count: int) -> int:
    """sum_{k=0}^{count-1} scale_num // (stride*k + offset)^m (each term floored)."""
    total = 0
    for k in range(count):
        total += scale_num // (stride * k + offset) ** m
    return total


def arctan_recip(scale: int, x: int):
    """arctan(1/x) * scale for integer x >= 2, by the Gregory series.

    Returns (num, terms).  The running power is floored once per term, so the
    accumulated error is below 2*terms + 2 mantissa units.
    """
    power = scale // x
    xx = x * x
    total = 0
    j = 0
    while power:
        term = power // (2 * j + 1)
        total += -term if j & 1 else term
        power //= xx
        j += 1
    return total, j
