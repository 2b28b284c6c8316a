"""Exact linear-combination algebra over special-value atoms.

Atoms are pi powers, zeta and beta values at integer arguments, polygamma
values at 1/4 and 3/4, and the scaled cotangent derivative
pi * d^n/dz^n cot(pi z) at z = 1/4.  Expressions are finite maps from atoms
to exact rationals; everything stays over Q.

``reduce`` rewrites an expression to the basis {1, pi^m, zeta(m)} where
closed forms exist:

  R1  beta(2s+1)        -> |E_2s| / (2^(2s+2) (2s)!) * pi^(2s+1)
  R2  psi^(2s)(3/4)     -> 2^(2s-1) |E_2s| pi^(2s+1)
                           - 2^(2s) (2^(2s+1)-1) (2s)! zeta(2s+1)
  R3  psi^(2s)(1/4)     -> -2^(2s-1) |E_2s| pi^(2s+1)
                           - 2^(2s) (2^(2s+1)-1) (2s)! zeta(2s+1)
  R4  cotd(n)           -> Q_n(1) * pi^(n+1)   (Q_2s(1) = 2^(2s) |E_2s|)
  R5  zeta(2s)          -> (-1)^(s+1) B_2s 2^(2s-1) / (2s)! * pi^(2s)
                           (opt-in; even arguments stay put by default)
  R6  psi^(2s-1)(3/4)   -> -Q_{2s-1}(1) * pi^(2s) - psi^(2s-1)(1/4)

R6 canonicalises odd-order polygamma values onto the 1/4 site using the
reflection of the digamma derivatives; neither odd-order value reduces to
the {1, pi, zeta} basis on its own (beta(2s) would be needed), but their sum
does, which is exactly what the even-argument zeta identity consumes.
Canonicalising keeps ``reduce`` linear and idempotent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .errors import ParameterRangeError
from .exact import (
    bernoulli_number,
    cot_derivative_at_quarter,
    euler_abs,
    factorial,
)
from .series import Site

MAX_ATOM_ORDER = 4000


class AtomKind(enum.Enum):
    ONE = "one"
    PI_POW = "pi"
    ZETA = "zeta"
    BETA = "beta"
    POLYGAMMA = "psi"
    COT_DERIV = "cotd"


_KIND_RANK = {
    AtomKind.ONE: 0,
    AtomKind.PI_POW: 1,
    AtomKind.ZETA: 2,
    AtomKind.BETA: 3,
    AtomKind.POLYGAMMA: 4,
    AtomKind.COT_DERIV: 5,
}


@dataclass(frozen=True)
class Atom:
    """A single special value; equal iff kind and all parameters are equal."""

    kind: AtomKind
    order: int = 0
    site: Optional[Site] = None

    def sort_key(self):
        site_rank = 0 if self.site in (None, Site.QUARTER) else 1
        return (_KIND_RANK[self.kind], self.order, site_rank)

    def render(self) -> str:
        if self.kind is AtomKind.ONE:
            return "1"
        if self.kind is AtomKind.PI_POW:
            return f"pi^{self.order}" if self.order != 1 else "pi"
        if self.kind is AtomKind.ZETA:
            return f"zeta({self.order})"
        if self.kind is AtomKind.BETA:
            return f"beta({self.order})"
        if self.kind is AtomKind.POLYGAMMA:
            return f"psi^({self.order})({self.site.value})"
        return f"cotd({self.order})"


def _check_order(n: int, low: int, label: str) -> None:
    if n < low:
        raise ParameterRangeError(f"{label} requires parameter >= {low}, got {n}")
    if n > MAX_ATOM_ORDER:
        raise ParameterRangeError(f"{label} parameter {n} exceeds {MAX_ATOM_ORDER}")


ONE = Atom(AtomKind.ONE)


def pi_pow(m: int) -> Atom:
    _check_order(m, 1, "pi power")
    return Atom(AtomKind.PI_POW, m)


def zeta_at(m: int) -> Atom:
    _check_order(m, 2, "zeta")
    return Atom(AtomKind.ZETA, m)


def beta_at(m: int) -> Atom:
    _check_order(m, 1, "beta")
    return Atom(AtomKind.BETA, m)


def polygamma_at(n: int, site: Site) -> Atom:
    _check_order(n, 1, "polygamma")
    if not isinstance(site, Site):
        raise ValueError(f"site must be a Site, got {site!r}")
    return Atom(AtomKind.POLYGAMMA, n, site)


def cot_deriv(n: int) -> Atom:
    _check_order(n, 0, "cot derivative")
    return Atom(AtomKind.COT_DERIV, n)


class LinExpr:
    """Immutable rational linear combination of atoms; zero terms are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[dict[Atom, Fraction]] = None) -> None:
        cleaned = {}
        if terms:
            for atom, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    cleaned[atom] = c
        object.__setattr__(self, "_terms", cleaned)

    @staticmethod
    def of(*pairs: tuple[Atom, Fraction | int]) -> "LinExpr":
        acc: dict[Atom, Fraction] = {}
        for atom, coeff in pairs:
            acc[atom] = acc.get(atom, Fraction(0)) + Fraction(coeff)
        return LinExpr(acc)

    def coeff(self, atom: Atom) -> Fraction:
        return self._terms.get(atom, Fraction(0))

    def atoms(self) -> frozenset[Atom]:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[tuple[Atom, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Atom, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __add__(self, other: "LinExpr") -> "LinExpr":
        acc = dict(self._terms)
        for atom, coeff in other._terms.items():
            acc[atom] = acc.get(atom, Fraction(0)) + coeff
        return LinExpr(acc)

    def __sub__(self, other: "LinExpr") -> "LinExpr":
        acc = dict(self._terms)
        for atom, coeff in other._terms.items():
            acc[atom] = acc.get(atom, Fraction(0)) - coeff
        return LinExpr(acc)

    def __neg__(self) -> "LinExpr":
        return LinExpr({a: -c for a, c in self._terms.items()})

    def scale(self, factor: Fraction | int) -> "LinExpr":
        f = Fraction(factor)
        return LinExpr({a: c * f for a, c in self._terms.items()})

    def __mul__(self, factor: Fraction | int) -> "LinExpr":
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LinExpr) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for atom, coeff in self.sorted_terms():
            mag = -coeff if coeff < 0 else coeff
            if atom.kind is AtomKind.ONE:
                body = str(mag)
            elif mag == 1:
                body = atom.render()
            else:
                body = f"{mag}*{atom.render()}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LinExpr({self.render()})"


ZERO_EXPR = LinExpr()

#: Atom kinds that form the reduced basis.
_BASIS = (AtomKind.ONE, AtomKind.PI_POW, AtomKind.ZETA)


@dataclass(frozen=True)
class ReductionOutcome:
    """Result of rewriting to the {1, pi^m, zeta(m)} basis."""

    reduced: LinExpr
    irreducible_atoms: frozenset[Atom] = field(default_factory=frozenset)


def _rewrite_atom(atom: Atom, enable_even_zeta: bool) -> Optional[LinExpr]:
    """Closed form for one atom, or None if the atom is terminal."""
    kind = atom.kind
    if kind in (AtomKind.ONE, AtomKind.PI_POW):
        return None
    if kind is AtomKind.ZETA:
        m = atom.order
        if m % 2 == 1 or not enable_even_zeta:
            return None
        s = m // 2
        sign = 1 if (s + 1) % 2 == 0 else -1
        coeff = Fraction(sign * bernoulli_number(m) * (1 << (m - 1)), factorial(m))
        return LinExpr.of((pi_pow(m), coeff))
    if kind is AtomKind.BETA:
        m = atom.order
        if m % 2 == 0:
            return None  # no closed form in this basis (Catalan class)
        s = (m - 1) // 2
        coeff = Fraction(euler_abs(2 * s), (1 << (2 * s + 2)) * factorial(2 * s))
        return LinExpr.of((pi_pow(m), coeff))
    if kind is AtomKind.POLYGAMMA:
        n = atom.order
        if n % 2 == 0:
            s = n // 2
            a = euler_abs(2 * s)
            zc = (1 << (2 * s)) * ((1 << (2 * s + 1)) - 1) * factorial(2 * s)
            pc = (1 << (2 * s - 1)) * a
            if atom.site is Site.QUARTER:
                pc = -pc
            return LinExpr.of((pi_pow(2 * s + 1), pc), (zeta_at(2 * s + 1), -zc))
        if atom.site is Site.THREE_QUARTER:
            # reflection: psi^(n)(1/4) + psi^(n)(3/4) = -Q_n(1) pi^(n+1) for odd n
            return LinExpr.of(
                (pi_pow(n + 1), -cot_derivative_at_quarter(n)),
                (polygamma_at(n, Site.QUARTER), -1),
            )
        return None
    if kind is AtomKind.COT_DERIV:
        n = atom.order
        if n % 2 == 0 and n >= 2:
            s = n // 2
            return LinExpr.of((pi_pow(n + 1), (1 << n) * euler_abs(n)))
        return LinExpr.of((pi_pow(n + 1), cot_derivative_at_quarter(n)))
    return None


def reduce(expr: LinExpr, enable_even_zeta: bool = False) -> ReductionOutcome:
    """Rewrite to the {1, pi^m, zeta(m)} basis plus any irreducible atoms.

    Idempotent and linear: rewriting is applied atom by atom to a fixpoint,
    and every rule output is itself terminal.
    """
    pending = dict(expr.items())
    acc: dict[Atom, Fraction] = {}
    while pending:
        atom, coeff = pending.popitem()
        if coeff == 0:
            continue
        replacement = _rewrite_atom(atom, enable_even_zeta)
        if replacement is None:
            acc[atom] = acc.get(atom, Fraction(0)) + coeff
            continue
        for sub_atom, sub_coeff in replacement.items():
            contribution = coeff * sub_coeff
            if sub_atom in pending:
                pending[sub_atom] += contribution
            elif _rewrite_atom(sub_atom, enable_even_zeta) is None:
                acc[sub_atom] = acc.get(sub_atom, Fraction(0)) + contribution
            else:
                pending[sub_atom] = contribution
    reduced = LinExpr(acc)
    irreducible = frozenset(
        a for a in reduced.atoms() if a.kind not in _BASIS
    )
    return ReductionOutcome(reduced=reduced, irreducible_atoms=irreducible)
