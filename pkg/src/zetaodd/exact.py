"""Exact integer/rational layer: classical sequences and cotangent derivative polynomials.

Everything here is computed with arbitrary-precision integers and
`fractions.Fraction`; no floating point enters at any stage.

Conventions:
  * Euler numbers follow the secant convention (E_0 = 1, E_2 = -1, E_4 = 5, ...),
    so sign(E_{2s}) = (-1)^s and E_n = 0 for odd n.
  * Bernoulli numbers use B_1 = -1/2; B_n = 0 for odd n >= 3.
  * Q_n is the cotangent derivative polynomial defined by
    d^n/dz^n cot(pi z) = pi^n * Q_n(cot(pi z)), with Q_0(u) = u and
    Q_{n+1}(u) = -(1 + u^2) * Q_n'(u).  Its coefficients are integers.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterRangeError

# Largest sequence index served; guards the O(n^2) triangle fills.
MAX_INDEX = 4000

#: Exact rational number used throughout the exact layer.  The stdlib type
#: already maintains the invariants we need (reduced form, positive
#: denominator, arbitrary-precision components).
BigRational = Fraction


def _check_index(n: int, name: str = "n") -> None:
    if n < 0:
        raise ParameterRangeError(f"{name} must be non-negative, got {n}")
    if n > MAX_INDEX:
        raise ParameterRangeError(f"{name}={n} exceeds supported range {MAX_INDEX}")


class SequenceCache:
    """Append-only cache of zigzag, Euler and Bernoulli numbers.

    Safe for concurrent readers and concurrent fills: the fill is guarded by
    a lock and insertion is idempotent (a cached value never changes).
    """

    def __init__(self) -> None:
        self._zigzag: list[int] = [1]  # Z_0
        self._lock = threading.Lock()

    def _extend_zigzag(self, n: int) -> None:
        # Boustrophedon triangle: T(n, 0) = [n == 0], T(n, k) = T(n, k-1) + T(n-1, n-k);
        # Z_n = T(n, n).  Secant numbers are Z_{2s}, tangent numbers Z_{2s-1}.
        with self._lock:
            if n < len(self._zigzag):
                return
            # Rebuild the previous triangle row from scratch; rows are cheap
            # relative to the values they produce and this keeps the cache
            # itself limited to the zigzag values.
            start = len(self._zigzag)
            prev: list[int] = []
            for i in range(start):
                cur = [1 if i == 0 else 0]
                for k in range(1, i + 1):
                    cur.append(cur[k - 1] + prev[i - k])
                prev = cur
            for i in range(start, n + 1):
                cur = [1 if i == 0 else 0]
                for k in range(1, i + 1):
                    cur.append(cur[k - 1] + prev[i - k])
                prev = cur
                self._zigzag.append(cur[i])

    def zigzag(self, n: int) -> int:
        """Zigzag (up/down) number Z_n."""
        _check_index(n)
        if n >= len(self._zigzag):
            self._extend_zigzag(n)
        return self._zigzag[n]

    def euler(self, n: int) -> int:
        """Signed secant Euler number E_n."""
        _check_index(n)
        if n % 2 == 1:
            return 0
        sign = -1 if (n // 2) % 2 else 1
        return sign * self.zigzag(n)

    def bernoulli(self, n: int) -> Fraction:
        """Bernoulli number B_n with B_1 = -1/2."""
        _check_index(n)
        if n == 0:
            return Fraction(1)
        if n == 1:
            return Fraction(-1, 2)
        if n % 2 == 1:
            return Fraction(0)
        m = n // 2
        # Tangent numbers: Z_{2m-1} = 2^{2m} (2^{2m} - 1) |B_{2m}| / (2m).
        magnitude = Fraction(n * self.zigzag(n - 1), (1 << n) * ((1 << n) - 1))
        return magnitude if m % 2 == 1 else -magnitude

    def factorial(self, n: int) -> int:
        """Exact n! (delegated to math.factorial, which is exact)."""
        _check_index(n)
        return math.factorial(n)


_CACHE = SequenceCache()


def euler_number(n: int) -> int:
    """Signed Euler number E_n (secant convention); 0 for odd n."""
    return _CACHE.euler(n)


def euler_abs(n: int) -> int:
    """|E_n|, the magnitude used by the even-index closed forms."""
    return abs(_CACHE.euler(n))


def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2 convention)."""
    return _CACHE.bernoulli(n)


def factorial(n: int) -> int:
    """Exact integer factorial."""
    return _CACHE.factorial(n)


@dataclass(frozen=True)
class CotPoly:
    """Polynomial Q_n with d^n/dz^n cot(pi z) = pi^n * Q_n(cot(pi z)).

    ``coefficients[i]`` multiplies u^i.  Q_n has degree n + 1 and fixed
    parity: only odd powers of u for even n, only even powers for odd n.
    """

    order: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        d = len(self.coefficients) - 1
        while d > 0 and self.coefficients[d] == 0:
            d -= 1
        return d

    def evaluate(self, u: Fraction | int) -> Fraction | int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * u + c
        return acc

    def derivative_coefficients(self) -> tuple[int, ...]:
        return tuple(i * c for i, c in enumerate(self.coefficients) if i > 0)


_COT_LOCK = threading.Lock()
_COT_CACHE: list[tuple[int, ...]] = [(0, 1)]  # Q_0(u) = u


def cot_derivative_poly(n: int) -> CotPoly:
    """Q_n via the recurrence Q_0(u) = u, Q_{n+1}(u) = -(1 + u^2) Q_n'(u)."""
    _check_index(n)
    if n >= len(_COT_CACHE):
        with _COT_LOCK:
            while n >= len(_COT_CACHE):
                prev = _COT_CACHE[-1]
                deriv = [i * c for i, c in enumerate(prev)][1:]  # drop u^-1 slot
                nxt = [0] * (len(prev) + 1)
                for i, c in enumerate(deriv):
                    nxt[i] -= c
                    nxt[i + 2] -= c
                _COT_CACHE.append(tuple(nxt))
    return CotPoly(order=n, coefficients=_COT_CACHE[n])


def cot_derivative_at_quarter(n: int) -> int:
    """Value of pi^{-n} * d^n/dz^n cot(pi z) at z = 1/4, i.e. Q_n(1).

    cot(pi/4) = 1, so this is the coefficient sum of Q_n; always an integer.
    """
    return sum(cot_derivative_poly(n).coefficients)


def polygamma_closed_form_pair(s: int) -> tuple[int, int]:
    """Integer pair (a, b) with psi^(2s)(3/4) = 2^(2s-1) * (a*pi^(2s+1) - b*zeta(2s+1)).

    a = |E_{2s}| and b = 2 * (2^(2s+1) - 1) * (2s)!.
    """
    if s < 1:
        raise ParameterRangeError(f"s must be >= 1, got {s}")
    _check_index(2 * s, "2s")
    a = euler_abs(2 * s)
    b = 2 * ((1 << (2 * s + 1)) - 1) * factorial(2 * s)
    return a, b
