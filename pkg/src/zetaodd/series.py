"""High-precision evaluators for zeta, beta, quarter-site Hurwitz sums and pi.

Method choices:
  * zeta(m) and beta(m) use the Chebyshev acceleration of their alternating
    series (roughly 1.3 digits per term), switching to plain truncated
    summation when the direct tail already fits the target in 64 terms.
  * Hurwitz values at 1/4 and 3/4 use Euler-Maclaurin summation with exact
    Bernoulli correction terms; the remainder is bounded by the first omitted
    correction term, whose sign is fixed because every derivative of
    (x + a)^-m keeps one sign on the tail.
  * pi comes from the two-term Machin arctangent identity.

Every evaluator works at ctx.working + 8 internal digits and floors the
result back to ctx.working digits, so the returned error bounds stay within
a few ulps of the working scale regardless of the term counts involved.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from . import kernels
from .errors import DomainError, UnsupportedAtomError
from .exact import cot_derivative_at_quarter, euler_abs, bernoulli_number, factorial
from .hiprec import HPReal, PrecisionContext, pow10

_EXTRA = 8  # internal headroom digits, floored away before returning

METHOD_DIRECT = "direct-with-tail"
METHOD_ACCELERATED = "alternating-accelerated"
METHOD_EULER_MACLAURIN = "euler-maclaurin"

_DIRECT_TERMS = 64


class Site(Enum):
    """Evaluation site for quarter-argument polygamma values."""

    QUARTER = "1/4"
    THREE_QUARTER = "3/4"

    @property
    def fraction(self) -> Fraction:
        return Fraction(1, 4) if self is Site.QUARTER else Fraction(3, 4)


@dataclass(frozen=True)
class SeriesResult:
    """A converged series evaluation: value, work spent and method used."""

    result: HPReal
    terms_used: int
    method: str


class EulerTerm(NamedTuple):
    """Magnitude of the Euler-number bracket term and its fixed orientation sign."""

    magnitude: HPReal
    sign: int


def _downshift(man: int, err: int, prec: int) -> HPReal:
    shift = pow10(_EXTRA)
    return HPReal(man // shift, err // shift + 2, prec)


def _check_error_contract(value: HPReal, ctx: PrecisionContext) -> None:
    # SeriesResult contract: abs_error <= 10^-P, i.e. err <= 10^guard ulps.
    if value.err > pow10(ctx.guard_digits):
        raise ArithmeticError("series error bound exceeded the requested precision")


_PI_CACHE: dict[int, tuple[int, int]] = {}
_PI_LOCK = threading.Lock()


def hp_pi(ctx: PrecisionContext) -> HPReal:
    """pi at working precision via 16*arctan(1/5) - 4*arctan(1/239)."""
    prec = ctx.working
    cached = _PI_CACHE.get(prec)
    if cached is None:
        scale = pow10(prec + _EXTRA)
        a5, t5 = kernels.arctan_recip(scale, 5)
        a239, t239 = kernels.arctan_recip(scale, 239)
        man = 16 * a5 - 4 * a239
        err = 16 * (2 * t5 + 2) + 4 * (2 * t239 + 2)
        value = _downshift(man, err, prec)
        with _PI_LOCK:
            cached = _PI_CACHE.setdefault(prec, (value.man, value.err))
    return HPReal(cached[0], cached[1], prec)


_PI_POW_CACHE: dict[tuple[int, int], HPReal] = {}


def pi_power(m: int, ctx: PrecisionContext) -> HPReal:
    """pi**m at working precision (cached per (m, precision))."""
    if m < 1:
        raise DomainError("pi power requires m >= 1")
    key = (m, ctx.working)
    value = _PI_POW_CACHE.get(key)
    if value is None:
        value = hp_pi(ctx).pow_int(m)
        _PI_POW_CACHE.setdefault(key, value)
    return value


def _accelerated(m: int, stride: int, offset: int, prec: int) -> tuple[int, int, int]:
    """Accelerated alternating sum at prec+_EXTRA internal digits."""
    internal = prec + _EXTRA
    scale = pow10(internal)
    n = (131 * internal) // 100 + 6
    num, den, slack = kernels.alt_series_sum(m, stride, offset, scale, n)
    man = num // den
    err = slack // den + 3  # floor rounding plus Chebyshev truncation headroom
    return man, err, n


def _direct_alternating(m: int, stride: int, offset: int, prec: int) -> tuple[int, int]:
    internal = prec + _EXTRA
    scale = pow10(internal)
    total = 0
    for k in range(_DIRECT_TERMS):
        term = scale // (stride * k + offset) ** m
        total += -term if k & 1 else term
    return total, _DIRECT_TERMS + 2  # truncation below one ulp by the method gate


def zeta_value(m: int, ctx: PrecisionContext) -> SeriesResult:
    """Riemann zeta at integer m >= 2 to ctx.decimal_digits digits."""
    if m < 2:
        raise DomainError(f"zeta requires m >= 2, got {m}")
    prec = ctx.working
    internal = prec + _EXTRA
    if _direct_tail_ok(m, internal):
        scale = pow10(internal)
        total = kernels.recip_power_sum(scale, 1, 1, m, _DIRECT_TERMS)
        value = _downshift(total, _DIRECT_TERMS + 2, prec)
        result = SeriesResult(value, _DIRECT_TERMS, METHOD_DIRECT)
    else:
        man, err, n = _accelerated(m, 1, 1, prec)
        # eta -> zeta: multiply by 2^(m-1) / (2^(m-1) - 1).
        num = 1 << (m - 1)
        man = man * num // (num - 1)
        err = err * num // (num - 1) + 2
        value = _downshift(man, err, prec)
        result = SeriesResult(value, n, METHOD_ACCELERATED)
    _check_error_contract(result.result, ctx)
    return result


def _direct_tail_ok(m: int, internal: int) -> bool:
    """True when sum_{k>64} k^-m < 0.1 ulp at the internal scale."""
    if m < 3:
        return False
    # tail <= integral_64^inf x^-m dx = 64^(1-m)/(m-1)
    return _DIRECT_TERMS ** (m - 1) * (m - 1) >= pow10(internal + 1)


def _beta_direct_tail_ok(m: int, internal: int) -> bool:
    # alternating: truncation below the first omitted term (2*64+1)^-m
    return (2 * _DIRECT_TERMS + 1) ** m >= pow10(internal + 1)


def beta_value(m: int, ctx: PrecisionContext) -> SeriesResult:
    """Dirichlet beta at integer m >= 1 to ctx.decimal_digits digits."""
    if m < 1:
        raise DomainError(f"beta requires m >= 1, got {m}")
    prec = ctx.working
    internal = prec + _EXTRA
    if _beta_direct_tail_ok(m, internal):
        total, err = _direct_alternating(m, 2, 1, prec)
        value = _downshift(total, err, prec)
        result = SeriesResult(value, _DIRECT_TERMS, METHOD_DIRECT)
    else:
        man, err, n = _accelerated(m, 2, 1, prec)
        value = _downshift(man, err, prec)
        result = SeriesResult(value, n, METHOD_ACCELERATED)
    _check_error_contract(result.result, ctx)
    return result


_QUARTER_SITES = (Fraction(1, 4), Fraction(3, 4))


def hurwitz_zeta(m: int, a: Fraction, ctx: PrecisionContext) -> SeriesResult:
    """Hurwitz zeta(m, a) for a in {1/4, 3/4} via Euler-Maclaurin summation."""
    if m < 2:
        raise DomainError(f"hurwitz zeta requires m >= 2, got {m}")
    if a not in _QUARTER_SITES:
        raise DomainError(f"only quarter sites are supported, got {a}")
    p4 = a.numerator  # denominator is 4
    prec = ctx.working
    internal = prec + _EXTRA
    scale = pow10(internal)
    n_start = max(8, (36 * internal) // 100 + 2, m // 4)
    n = n_start
    while True:
        total = kernels.recip_power_sum(scale * 4**m, 4, p4, m, n)
        err = n + 4
        d = 4 * n + p4  # (n + a) = d/4
        # integral and midpoint boundary terms
        total += scale * 4 ** (m - 1) // (d ** (m - 1) * (m - 1))
        total += scale * 4**m // (2 * d**m)
        corrections = 0
        poch = m  # (m)(m+1)...(m+2j-2), starting at j=1
        prev_mag = None
        ok = True
        j = 1
        while True:
            b = bernoulli_number(2 * j)
            pw = m + 2 * j - 1
            t_num = scale * b.numerator * poch * 4**pw
            t_den = b.denominator * factorial(2 * j) * d**pw
            t = t_num // t_den
            mag = abs(t)
            if prev_mag is not None and mag >= prev_mag:
                ok = False  # corrections stopped contracting; need a larger n
                break
            total += t
            err += 2
            corrections += 1
            if mag == 0:
                break  # remainder bounded by the first omitted term < 1 ulp
            prev_mag = mag
            poch *= (m + 2 * j - 1) * (m + 2 * j)
            j += 1
        if ok:
            break
        n *= 2
    value = _downshift(total, err + 2, prec)
    result = SeriesResult(value, n + corrections, METHOD_EULER_MACLAURIN)
    _check_error_contract(result.result, ctx)
    return result


def polygamma_quarter(n: int, site: Site, ctx: PrecisionContext) -> HPReal:
    """psi^(n) at 1/4 or 3/4 via the bridge psi^(n)(a) = (-1)^(n+1) n! zeta(n+1, a)."""
    if n < 1:
        raise DomainError(f"polygamma order must be >= 1, got {n}")
    hz = hurwitz_zeta(n + 1, site.fraction, ctx)
    sign = 1 if n % 2 == 1 else -1
    return hz.result.mul_fraction(sign * factorial(n))


def lattice_sum_plus(m: int, ctx: PrecisionContext) -> SeriesResult:
    """S_plus(m) = sum_{k>=0} (4k+1)^-m = 4^-m zeta(m, 1/4)."""
    if m < 2:
        raise DomainError(f"lattice sum requires m >= 2, got {m}")
    hz = hurwitz_zeta(m, Fraction(1, 4), ctx)
    return SeriesResult(hz.result.mul_fraction(Fraction(1, 4**m)), hz.terms_used, hz.method)


def lattice_sum_minus(m: int, ctx: PrecisionContext) -> SeriesResult:
    """S_minus(m) = sum_{k>=1} (4k-1)^-m = 4^-m zeta(m, 3/4)."""
    if m < 2:
        raise DomainError(f"lattice sum requires m >= 2, got {m}")
    hz = hurwitz_zeta(m, Fraction(3, 4), ctx)
    return SeriesResult(hz.result.mul_fraction(Fraction(1, 4**m)), hz.terms_used, hz.method)


def euler_term(s: int, ctx: PrecisionContext) -> EulerTerm:
    """Magnitude |E_2s| pi^(2s+1) / (2 (2^(2s+1) - 1) (2s)!) with its fixed sign.

    The bracketed term it represents always enters the odd-zeta series
    splittings with a negative sign once the imaginary units are resolved.
    """
    if s < 1:
        raise DomainError(f"s must be >= 1, got {s}")
    q = 2 * s + 1
    coeff = Fraction(euler_abs(2 * s), 2 * ((1 << q) - 1) * factorial(2 * s))
    return EulerTerm(pi_power(q, ctx).mul_fraction(coeff), -1)


def eval_expr(expr, ctx: PrecisionContext) -> HPReal:
    """Numeric value of a rational linear combination of special-value atoms."""
    acc = HPReal.zero(ctx.working)
    for atom, coeff in expr.sorted_terms():
        value = _atom_value(atom, ctx)
        acc = acc.add(value.mul_fraction(coeff))
    return acc


def _atom_value(atom, ctx: PrecisionContext) -> HPReal:
    from .symbolic import AtomKind  # local import to avoid a module cycle

    kind = atom.kind
    if kind is AtomKind.ONE:
        return HPReal.from_int(1, ctx.working)
    if kind is AtomKind.PI_POW:
        return pi_power(atom.order, ctx)
    if kind is AtomKind.ZETA:
        return zeta_value(atom.order, ctx).result
    if kind is AtomKind.BETA:
        return beta_value(atom.order, ctx).result
    if kind is AtomKind.POLYGAMMA:
        return polygamma_quarter(atom.order, atom.site, ctx)
    if kind is AtomKind.COT_DERIV:
        n = atom.order
        return pi_power(n + 1, ctx).mul_fraction(cot_derivative_at_quarter(n))
    raise UnsupportedAtomError(f"no numeric rule for atom {atom!r}")
