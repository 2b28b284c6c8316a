# cython: language_level=3
"""Compiled fixed-point series kernels (Cython twin of _purekernels).

The mantissas stay arbitrary-precision Python integers; compiling removes the
interpreter overhead of the inner loops, which dominates at small and medium
precision.  Results are bit-identical to the pure backend.

Power bases are boxed to Python ints before ``**`` so exponentiation never
drops into C arithmetic (which would overflow or go through doubles).
"""

BACKEND = "compiled"


def alt_series_sum(long m, long stride, long offset, object scale, long n):
    """Accelerated alternating sum; see zetaodd._purekernels.alt_series_sum."""
    cdef long k
    cdef object base, term, b, c, total, slack, den, hp, h, q, r, exp
    exp = m
    hp = 1
    h = 3
    for k in range(n - 1):
        hp, h = h, 6 * h - hp
    den = h if n >= 1 else 1

    b = -1
    c = -den
    total = 0
    slack = 0
    for k in range(n):
        c = b - c
        base = stride * k + offset
        term = scale // base ** exp
        total += c * term
        slack += abs(c)
        q, r = divmod(b * (2 * (k + n) * (k - n)), (2 * k + 1) * (k + 1))
        if r:
            raise ArithmeticError("coefficient recurrence lost exact divisibility")
        b = q
    return total, den, slack


def recip_power_sum(object scale_num, long stride, long offset, long m, long count):
    """sum_{k=0}^{count-1} scale_num // (stride*k + offset)^m (each term floored)."""
    cdef long k
    cdef object base, total, exp
    exp = m
    total = 0
    for k in range(count):
        base = stride * k + offset
        total += scale_num // base ** exp
    return total


def arctan_recip(object scale, long x):
    """arctan(1/x) * scale for integer x >= 2, by the Gregory series."""
    cdef long j = 0
    cdef object power, xx, total, term
    power = scale // x
    xx = x * x
    total = 0
    while power:
        term = power // (2 * j + 1)
        if j & 1:
            total -= term
        else:
            total += term
        power //= xx
        j += 1
    return total, j
