"""Fixed-point high-precision reals with conservative absolute error bounds.

An ``HPReal`` stores an integer mantissa ``man`` scaled by ``10**prec`` and an
integer ``err`` bounding the absolute error in units of one mantissa ulp
(``10**-prec``).  Error propagation is interval-flavoured but deliberately
simple: bounds add under addition and propagate to first order (plus the
cross term) under multiplication.  All rounding is floor rounding, charged as
one extra ulp wherever it occurs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_POW10: dict[int, int] = {}


def pow10(n: int) -> int:
    """10**n with memoisation (mantissa scales are reused heavily)."""
    p = _POW10.get(n)
    if p is None:
        p = 10**n
        _POW10[n] = p
    return p


@dataclass(frozen=True)
class PrecisionContext:
    """Requested precision: P result digits plus guard digits of headroom."""

    decimal_digits: int
    guard_digits: int = 10

    def __post_init__(self) -> None:
        if self.decimal_digits < 10:
            raise ValueError("decimal_digits must be at least 10")
        if self.guard_digits < 5:
            raise ValueError("guard_digits must be at least 5")

    @property
    def working(self) -> int:
        return self.decimal_digits + self.guard_digits

    @property
    def scale(self) -> int:
        return pow10(self.working)


@dataclass(frozen=True)
class HPReal:
    """Value man/10**prec known to within err ulps (err >= 0)."""

    man: int
    err: int
    prec: int

    @staticmethod
    def zero(prec: int) -> "HPReal":
        return HPReal(0, 0, prec)

    @staticmethod
    def from_int(value: int, prec: int) -> "HPReal":
        return HPReal(value * pow10(prec), 0, prec)

    @staticmethod
    def from_fraction(value: Fraction, prec: int) -> "HPReal":
        num = value.numerator * pow10(prec)
        man, rem = divmod(num, value.denominator)
        return HPReal(man, 0 if rem == 0 else 1, prec)

    def _require_same(self, other: "HPReal") -> None:
        if self.prec != other.prec:
            raise ValueError("mixed mantissa scales; rescale first")

    def add(self, other: "HPReal") -> "HPReal":
        self._require_same(other)
        return HPReal(self.man + other.man, self.err + other.err, self.prec)

    def sub(self, other: "HPReal") -> "HPReal":
        self._require_same(other)
        return HPReal(self.man - other.man, self.err + other.err, self.prec)

    def neg(self) -> "HPReal":
        return HPReal(-self.man, self.err, self.prec)

    def mul(self, other: "HPReal") -> "HPReal":
        self._require_same(other)
        scale = pow10(self.prec)
        man = (self.man * other.man) // scale
        err = (
            abs(self.man) * other.err + abs(other.man) * self.err + self.err * other.err
        ) // scale + 2
        return HPReal(man, err, self.prec)

    def mul_fraction(self, factor: Fraction | int) -> "HPReal":
        if isinstance(factor, int):
            return HPReal(self.man * factor, self.err * abs(factor), self.prec)
        p, q = factor.numerator, factor.denominator
        man = (self.man * p) // q
        err = (self.err * abs(p)) // q + 2
        return HPReal(man, err, self.prec)

    def pow_int(self, exponent: int) -> "HPReal":
        if exponent < 1:
            raise ValueError("exponent must be >= 1")
        result = self
        for _ in range(exponent - 1):
            result = result.mul(self)
        return result

    def rescale(self, prec: int) -> "HPReal":
        if prec == self.prec:
            return self
        if prec > self.prec:
            shift = pow10(prec - self.prec)
            return HPReal(self.man * shift, self.err * shift, prec)
        shift = pow10(self.prec - prec)
        return HPReal(self.man // shift, self.err // shift + 2, prec)

    def abs_diff_ulps(self, other: "HPReal") -> int:
        self._require_same(other)
        return abs(self.man - other.man)

    def as_fraction(self) -> Fraction:
        return Fraction(self.man, pow10(self.prec))

    def error_fraction(self) -> Fraction:
        return Fraction(self.err, pow10(self.prec))

    def to_decimal(self, significant: int, mode: str = "round") -> str:
        return format_significant(self.man, self.prec, significant, mode)


def format_significant(
    man: int,
    prec: int,
    significant: int,
    mode: str = "round",
    sci_low: int = -6,
    sci_high: int = 30,
) -> str:
    """Render man/10**prec with the given number of significant digits.

    Plain decimal notation for leading exponents in [sci_low, sci_high],
    scientific notation outside.  ``mode`` is "round" (half away from zero)
    or "trunc".
    """
    if significant < 1:
        raise ValueError("significant must be >= 1")
    if man == 0:
        return "0"
    neg = man < 0
    digits = str(-man if neg else man)
    exp = len(digits) - prec - 1  # value = d.ddd... * 10**exp
    if len(digits) > significant:
        cut = pow10(len(digits) - significant)
        head, rem = divmod(-man if neg else man, cut)
        if mode == "round" and 2 * rem >= cut:
            head += 1
        digits = str(head)
        if len(digits) > significant:  # rounding carried into a new digit
            exp += 1
            digits = digits[:significant]
    else:
        digits = digits.ljust(significant, "0")
    sign = "-" if neg else ""
    if sci_low <= exp <= sci_high:
        if exp >= 0:
            if exp + 1 >= len(digits):
                body = digits.ljust(exp + 1, "0")
            else:
                body = digits[: exp + 1] + "." + digits[exp + 1 :]
            return sign + body
        return sign + "0." + "0" * (-exp - 1) + digits
    mantissa = digits[0] if len(digits) == 1 else digits[0] + "." + digits[1:]
    return f"{sign}{mantissa}e{exp:+03d}"
