"""Named modular objects as exact q-series, and the identities among them.

Builders: the Dedekind eta factor and finite eta quotients, the Jacobi theta
functions theta2/theta3, and the two norm-form theta series (built from
lattice enumeration, never from closed forms, so they can sit on the
geometric side of every identity check).  The residue decomposition splits an
integer-exponent series by exponent class.

The classical facts verified here, each as an exact coefficient comparison:

* hexagonal form:  sum q^(a^2-ab+b^2) = theta3(q) theta3(q^3) + theta2(q) theta2(q^3)
* square form:     sum q^(a^2+b^2)    = theta3(q)^2
* the mixed (3,3,3) correlator series equals the eta quotient
  eta(q^9)^3 / eta(q^3), and its all-one-point partner follows by adding
  (1/3) eta(q)^3 / eta(q^3).

These series are weight-one modular forms; their transformation behavior is
out of scope here, only the q-expansions matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from .lattice import LatticeKind, solutions_of_norm
from .qseries import (
    QSeries,
    SeriesComparison,
    compare_series,
    qs_add,
    qs_scale,
    qs_substitute_power,
)

__all__ = [
    "EtaQuotientSpec",
    "ResidueDecomposition",
    "GridMismatch",
    "NonIntegralValuation",
    "eta_series",
    "eta_quotient",
    "theta2",
    "theta3",
    "theta_F",
    "theta_G",
    "residue_decompose",
    "IdentityReport",
    "check_theta_identity_F",
    "check_theta_identity_G",
    "check_eta_vs_lattice",
    "ETA_QUOTIENT_F0",
    "ETA_QUOTIENT_F1_CORRECTION",
]


class GridMismatch(Exception):
    """Residue decomposition asked for on a series with fractional support."""


class NonIntegralValuation(Exception):
    """An integer-exponent series was demanded but the eta prefactor is fractional."""


@dataclass(frozen=True)
class EtaQuotientSpec:
    """A finite product of eta factors: prod over (scale, exponent) pairs."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for m, r in self.factors:
            if m < 1:
                raise ValueError(f"eta argument scale must be >= 1, got {m}")
            if not isinstance(r, int):
                raise ValueError(f"eta exponent must be an integer, got {r!r}")

    @property
    def valuation_24(self) -> int:
        """Leading q-power in 24ths: sum of scale * exponent."""
        return sum(m * r for m, r in self.factors)


# The quotient giving the mixed (3,3,3) correlator series, and the correction
# quotient whose third added on top gives the all-one-point series.
ETA_QUOTIENT_F0 = EtaQuotientSpec(((9, 3), (3, -1)))
ETA_QUOTIENT_F1_CORRECTION = EtaQuotientSpec(((1, 3), (3, -1)))


def _check_order(order: int):
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order}")


# ----------------------------------------------------------------------
# Integer-coefficient polynomial helpers for the eta machinery.  All lists
# are truncated at a common length; index = exponent.


def _euler_coeffs(step: int, order: int) -> list[int]:
    """Coefficients of prod_{n>=1} (1 - q^(step*n)) through exponent < order,
    by iterated multiplication with the sparse binomial factors."""
    out = [0] * order
    out[0] = 1
    for n in range(step, order, step):
        for k in range(order - 1, n - 1, -1):
            if out[k - n]:
                out[k] -= out[k - n]
    return out


def _poly_mul(a: Sequence[int], b: Sequence[int], order: int) -> list[int]:
    if sum(1 for c in a if c) > sum(1 for c in b if c):
        a, b = b, a
    out = [0] * order
    for i, ca in enumerate(a):
        if not ca:
            continue
        if i >= order:
            break
        for j, cb in enumerate(b):
            if i + j >= order:
                break
            if cb:
                out[i + j] += ca * cb
    return out


def _poly_recip(a: Sequence[int], order: int) -> list[int]:
    """Reciprocal of a unit power series with leading coefficient 1."""
    if a[0] != 1:
        raise ValueError("reciprocal needs leading coefficient 1")
    support = [(j, aj) for j, aj in enumerate(a[:order]) if j and aj]
    out = [0] * order
    out[0] = 1
    for k in range(1, order):
        acc = 0
        for j, aj in support:
            if j > k:
                break
            acc += aj * out[k - j]
        out[k] = -acc
    return out


def eta_series(order: int) -> QSeries:
    """q^(1/24) * prod (1 - q^n), exact below exponent ``order``."""
    return eta_quotient(EtaQuotientSpec(((1, 1),)), order)


def eta_quotient(
    spec: Union[EtaQuotientSpec, Iterable[tuple[int, int]]],
    order: int,
    require_integral: bool = False,
) -> QSeries:
    """Exact expansion of a finite eta product, exact below ``order``.

    The fractional prefactor q^(valuation/24) is carried on the exponent
    grid; the unit parts are multiplied and (for negative exponents)
    inverted as integer power series.
    """
    if not isinstance(spec, EtaQuotientSpec):
        spec = EtaQuotientSpec(tuple(spec))
    _check_order(order)
    val24 = spec.valuation_24
    if require_integral and val24 % 24 != 0:
        raise NonIntegralValuation(
            f"eta quotient has leading power q^({val24}/24), not an integer exponent"
        )
    unit = [0] * order
    unit[0] = 1
    for m, r in spec.factors:
        if r == 0:
            continue
        base = _euler_coeffs(m, order)
        if r < 0:
            base = _poly_recip(base, order)
        for _ in range(abs(r)):
            unit = _poly_mul(unit, base, order)
    g = 24 // gcd(val24, 24)
    shift = val24 * g // 24
    if g == 1:
        coeffs = unit
    else:
        coeffs = [0] * ((order - 1) * g + 1)
        for n, c in enumerate(unit):
            if c:
                coeffs[n * g] = c
    return QSeries(g, shift, coeffs, order * g + shift)


# ----------------------------------------------------------------------
# Theta series


def theta2(order: int) -> QSeries:
    """Sum of q^((n+1/2)^2) over the integers: 2q^(1/4) + 2q^(9/4) + ..."""
    _check_order(order)
    trunc = 4 * order
    terms = {}
    n = 0
    while (2 * n + 1) ** 2 < trunc:
        terms[(2 * n + 1) ** 2] = 2  # n and -n-1 pair up
        n += 1
    out = [0] * max(terms, default=0)
    for e, c in terms.items():
        out[e - 1] = c
    return QSeries(4, 1, out, trunc)


def theta3(order: int) -> QSeries:
    """Sum of q^(n^2) over the integers: 1 + 2q + 2q^4 + 2q^9 + ..."""
    _check_order(order)
    coeffs = [0] * order
    coeffs[0] = 1
    n = 1
    while n * n < order:
        coeffs[n * n] = 2
        n += 1
    return QSeries(1, 0, coeffs, order)


def _theta_of_form(kind: LatticeKind, order: int) -> QSeries:
    counts = [len(solutions_of_norm(kind, n)) for n in range(order)]
    return QSeries(1, 0, counts, order)


def theta_F(order: int) -> QSeries:
    """Theta series of the hexagonal form a^2 - a*b + b^2, by enumeration."""
    _check_order(order)
    return _theta_of_form(LatticeKind.EISENSTEIN, order)


def theta_G(order: int) -> QSeries:
    """Theta series of the square form a^2 + b^2, by enumeration."""
    _check_order(order)
    return _theta_of_form(LatticeKind.GAUSSIAN, order)


# ----------------------------------------------------------------------
# Residue decomposition


@dataclass(frozen=True)
class ResidueDecomposition:
    """Split of an integer-exponent series by exponent residue class."""

    modulus: int
    parts: dict[int, QSeries]

    def part(self, residue: int) -> QSeries:
        return self.parts[residue % self.modulus]

    def recombined(self) -> QSeries:
        acc = None
        for r in range(self.modulus):
            acc = self.parts[r] if acc is None else qs_add(acc, self.parts[r])
        return acc


def residue_decompose(s: QSeries, modulus: int) -> ResidueDecomposition:
    """Partition the terms of ``s`` by exponent mod ``modulus``.

    Only integer-exponent series decompose this way; a series carrying a
    nonzero coefficient at a fractional exponent is rejected.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    g = s.grid
    if g != 1:
        for exp, _ in s.nonzero_terms():
            if exp.denominator != 1:
                raise GridMismatch(
                    f"series has a nonzero coefficient at fractional exponent {exp}"
                )
    trunc = -(-s.trunc // g)  # exact below trunc/g, so below ceil of it in integers
    buckets: dict[int, dict[int, Fraction]] = {r: {} for r in range(modulus)}
    for exp, c in s.nonzero_terms():
        e = int(exp)
        buckets[e % modulus][e] = c
    parts = {
        r: QSeries.from_terms(terms, trunc, grid=1) if terms else QSeries.zero(trunc)
        for r, terms in buckets.items()
    }
    return ResidueDecomposition(modulus, parts)


# ----------------------------------------------------------------------
# Identity checks


@dataclass(frozen=True)
class IdentityReport:
    name: str
    comparisons: dict[str, SeriesComparison]

    @property
    def holds(self) -> bool:
        return all(c.equal for c in self.comparisons.values())

    @property
    def verified_below(self) -> Fraction:
        return min(c.verified_below for c in self.comparisons.values())

    def first_discrepancy(self) -> Optional[tuple[str, tuple]]:
        for label, c in self.comparisons.items():
            if not c.equal:
                return label, c.first_discrepancy
        return None


def check_theta_identity_F(order: int) -> IdentityReport:
    """Hexagonal theta series against theta3*theta3(q^3) + theta2*theta2(q^3).

    The comparison runs on the 1/4 grid, so it also certifies that every
    fractional slot of the theta2 product vanishes.
    """
    lhs = theta_F(order)
    t3 = theta3(order)
    t2 = theta2(order)
    rhs = qs_add(t3 * qs_substitute_power(t3, 3), t2 * qs_substitute_power(t2, 3))
    return IdentityReport("theta-identity-F", {"F": compare_series(lhs, rhs)})


def check_theta_identity_G(order: int) -> IdentityReport:
    """Square-form theta series against theta3 squared."""
    lhs = theta_G(order)
    t3 = theta3(order)
    return IdentityReport("theta-identity-G", {"G": compare_series(lhs, t3 * t3)})


def check_eta_vs_lattice(order: int) -> IdentityReport:
    """Eta-quotient forms of the two (3,3,3) series against enumeration.

    One sixth of the residue-1 part of the hexagonal theta series must equal
    eta(q^9)^3/eta(q^3); one third of the residue-0 part must equal that
    quotient plus (1/3) eta(q)^3/eta(q^3).
    """
    dec = residue_decompose(theta_F(order), 3)
    f0_eta = eta_quotient(ETA_QUOTIENT_F0, order)
    f1_eta = qs_add(f0_eta, qs_scale(eta_quotient(ETA_QUOTIENT_F1_CORRECTION, order), Fraction(1, 3)))
    return IdentityReport(
        "eta-vs-lattice",
        {
            "f0": compare_series(qs_scale(dec.part(1), Fraction(1, 6)), f0_eta),
            "f1": compare_series(qs_scale(dec.part(0), Fraction(1, 3)), f1_eta),
        },
    )
