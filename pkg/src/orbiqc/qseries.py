"""Exact truncated power series in q.

Coefficients are rational numbers (``fractions.Fraction``), exponents live on
a fixed fractional grid: every exponent is an integer multiple of 1/grid with
grid a divisor of 24.  That single grid accommodates both the q^{1/24}
valuation of the Dedekind eta factor and the q^{1/4} exponents of the second
Jacobi theta function, which is all this package ever needs.

Truncation is part of the data, not a convention.  A series knows the
boundary ``trunc`` (in grid units) below which its coefficients are exact;
queries at or beyond the boundary raise ``QueryBeyondTruncation`` instead of
silently returning garbage.  Every operation computes the tightest boundary
that is provable from its inputs, so an identity check can honestly say
"verified for all exponents below B".
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Optional, Union

__all__ = [
    "Rat",
    "RatLike",
    "QSeries",
    "QueryBeyondTruncation",
    "SeriesComparison",
    "qs_add",
    "qs_mul",
    "qs_scale",
    "qs_substitute_power",
    "qs_coefficient",
    "compare_series",
    "VALID_GRIDS",
]

# Exact rational coefficients; Fraction already guarantees lowest terms and a
# positive denominator.
Rat = Fraction
RatLike = Union[int, Fraction]

VALID_GRIDS = (1, 2, 3, 4, 6, 8, 12, 24)


class QueryBeyondTruncation(Exception):
    """A coefficient was requested at or past the series' knowledge boundary."""


def _as_rat(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {value!r}")


def _exp_to_units(exp: RatLike, grid: int, what: str) -> int:
    """Convert an exponent to grid units, requiring it to land on the grid."""
    e = _as_rat(exp) * grid
    if e.denominator != 1:
        raise ValueError(f"{what} {exp} does not lie on the 1/{grid} grid")
    return e.numerator


class QSeries:
    """A truncated q-series with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of q^{(min_exp + k)/grid}; the series is
    exact for every exponent strictly below ``trunc``/grid.  Instances are
    immutable and safe to share across threads.
    """

    __slots__ = ("grid", "min_exp", "coeffs", "trunc")

    def __init__(self, grid: int, min_exp: int, coeffs: Iterable[RatLike], trunc: int):
        if grid not in VALID_GRIDS:
            raise ValueError(f"grid must be a divisor of 24, got {grid}")
        cs = [_as_rat(c) for c in coeffs]
        # Trim zero padding at both ends; zeros below trunc stay implicit.
        while cs and cs[-1] == 0:
            cs.pop()
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        if lead:
            cs = cs[lead:]
            min_exp += lead
        if not cs:
            min_exp = trunc
        if min_exp + len(cs) > trunc:
            raise ValueError(
                f"coefficients reach exponent {(min_exp + len(cs) - 1)}/{grid} "
                f"at or beyond the truncation boundary {trunc}/{grid}"
            )
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # ------------------------------------------------------------------
    # Constructors

    @classmethod
    def zero(cls, trunc_exponent: RatLike, grid: int = 1) -> "QSeries":
        """The zero series, exact below ``trunc_exponent``."""
        t = _exp_to_units(trunc_exponent, grid, "truncation boundary")
        return cls(grid, t, (), t)

    @classmethod
    def constant(cls, value: RatLike, trunc_exponent: RatLike, grid: int = 1) -> "QSeries":
        t = _exp_to_units(trunc_exponent, grid, "truncation boundary")
        return cls(grid, 0, (value,), t)

    @classmethod
    def from_terms(
        cls,
        terms: Mapping[RatLike, RatLike],
        trunc_exponent: RatLike,
        grid: Optional[int] = None,
    ) -> "QSeries":
        """Build a series from an exponent -> coefficient mapping.

        The grid is inferred from the exponent denominators unless given.
        Terms at or beyond the truncation boundary are rejected.
        """
        if grid is None:
            grid = 1
            for exp in terms:
                grid = grid * _as_rat(exp).denominator // gcd(grid, _as_rat(exp).denominator)
            if grid not in VALID_GRIDS:
                raise ValueError(f"exponent denominators need grid {grid}, not a divisor of 24")
        t = _exp_to_units(trunc_exponent, grid, "truncation boundary")
        units = {}
        for exp, c in terms.items():
            e = _exp_to_units(exp, grid, "exponent")
            if e >= t:
                raise ValueError(f"term at exponent {exp} lies beyond the boundary {trunc_exponent}")
            units[e] = units.get(e, Fraction(0)) + _as_rat(c)
        if not units:
            return cls(grid, t, (), t)
        lo = min(units)
        dense = [Fraction(0)] * (max(units) - lo + 1)
        for e, c in units.items():
            dense[e - lo] = c
        return cls(grid, lo, dense, t)

    # ------------------------------------------------------------------
    # Views

    @property
    def truncation_exponent(self) -> Fraction:
        """First exponent whose coefficient is not known, as a rational."""
        return Fraction(self.trunc, self.grid)

    def is_zero(self) -> bool:
        return not self.coeffs

    def nonzero_terms(self) -> Iterator[tuple[Fraction, Fraction]]:
        """Yield (exponent, coefficient) pairs, ascending, nonzero only."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield Fraction(self.min_exp + k, self.grid), c

    def coefficient(self, exp: RatLike) -> Fraction:
        """Exact coefficient of q^exp; zero off-grid or between stored terms.

        Raises QueryBeyondTruncation when ``exp`` is at or past the boundary,
        which signals that the series was not computed far enough.
        """
        e = _as_rat(exp)
        if e >= self.truncation_exponent:
            raise QueryBeyondTruncation(
                f"coefficient of q^{exp} requested, but the series is only exact "
                f"below q^{self.truncation_exponent}"
            )
        units = e * self.grid
        if units.denominator != 1:
            return Fraction(0)
        k = units.numerator - self.min_exp
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.grid == other.grid
            and self.min_exp == other.min_exp
            and self.coeffs == other.coeffs
            and self.trunc == other.trunc
        )

    def __hash__(self):
        return hash((self.grid, self.min_exp, self.coeffs, self.trunc))

    def __repr__(self) -> str:
        terms = []
        for exp, c in self.nonzero_terms():
            if len(terms) == 6:
                terms.append("...")
                break
            terms.append(f"{c}*q^{exp}" if exp else str(c))
        body = " + ".join(terms) if terms else "0"
        return f"<QSeries {body} + O(q^{self.truncation_exponent})>"

    # ------------------------------------------------------------------
    # Arithmetic

    def __add__(self, other: "QSeries") -> "QSeries":
        return qs_add(self, other)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return qs_add(self, qs_scale(other, Fraction(-1)))

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        return qs_scale(self, other)

    def __rmul__(self, other):
        return qs_scale(self, other)

    def __neg__(self) -> "QSeries":
        return qs_scale(self, Fraction(-1))


def _aligned(a: QSeries, b: QSeries) -> tuple[int, int, int]:
    """Common grid and the per-operand index stretch factors."""
    g = a.grid * b.grid // gcd(a.grid, b.grid)
    return g, g // a.grid, g // b.grid


def _stretch(coeffs: tuple[Fraction, ...], factor: int) -> list[Fraction]:
    if factor == 1:
        return list(coeffs)
    if not coeffs:
        return []
    out = [Fraction(0)] * ((len(coeffs) - 1) * factor + 1)
    for k, c in enumerate(coeffs):
        if c:
            out[k * factor] = c
    return out


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    """Coefficientwise sum on the common grid.

    The result is exact below the smaller of the two boundaries.
    """
    g, fa, fb = _aligned(a, b)
    trunc = min(a.trunc * fa, b.trunc * fb)
    lo = min(a.min_exp * fa, b.min_exp * fb, trunc)
    out = [Fraction(0)] * (trunc - lo)
    for coeffs, mn, f in ((a.coeffs, a.min_exp, fa), (b.coeffs, b.min_exp, fb)):
        for k, c in enumerate(coeffs):
            if not c:
                continue
            pos = mn * f + k * f - lo
            if pos < len(out):
                out[pos] += c
    return QSeries(g, lo, out, trunc)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product on the common grid.

    The product coefficient at e is fully determined whenever
    e < min(a.trunc + b.min_exp, b.trunc + a.min_exp): any split of e using an
    unknown coefficient of one factor would need an exponent of the other
    factor below its own minimum.
    """
    g, fa, fb = _aligned(a, b)
    trunc = min(a.trunc * fa + b.min_exp * fb, b.trunc * fb + a.min_exp * fa)
    if a.is_zero() or b.is_zero():
        return QSeries(g, trunc, (), trunc)
    # Iterate the factor with fewer nonzero terms on the outside.
    an = sum(1 for c in a.coeffs if c)
    bn = sum(1 for c in b.coeffs if c)
    if an > bn:
        a, b = b, a
        fa, fb = fb, fa
    lo = a.min_exp * fa + b.min_exp * fb
    out = [Fraction(0)] * max(trunc - lo, 0)
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        base = (a.min_exp + i) * fa + b.min_exp * fb - lo
        if base >= len(out):
            break
        for j, cb in enumerate(b.coeffs):
            pos = base + j * fb
            if pos >= len(out):
                break
            if cb:
                out[pos] += ca * cb
    return QSeries(g, lo, out, trunc)


def qs_scale(a: QSeries, c: RatLike) -> QSeries:
    """Multiply every coefficient by c; the boundary is unchanged."""
    c = _as_rat(c)
    if c == 0:
        return QSeries(a.grid, a.trunc, (), a.trunc)
    return QSeries(a.grid, a.min_exp, [c * x for x in a.coeffs], a.trunc)


def qs_substitute_power(a: QSeries, k: int) -> QSeries:
    """Formal substitution q -> q^k for a positive integer k."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"substitution power must be a positive integer, got {k}")
    if k == 1:
        return a
    return QSeries(a.grid, a.min_exp * k, _stretch(a.coeffs, k), a.trunc * k)


def qs_coefficient(a: QSeries, exp: RatLike) -> Fraction:
    return a.coefficient(exp)


class SeriesComparison:
    """Outcome of comparing two series through their common exact range."""

    __slots__ = ("equal", "verified_below", "first_discrepancy")

    def __init__(
        self,
        equal: bool,
        verified_below: Fraction,
        first_discrepancy: Optional[tuple[Fraction, Fraction, Fraction]],
    ):
        self.equal = equal
        self.verified_below = verified_below
        self.first_discrepancy = first_discrepancy

    def __repr__(self):
        if self.equal:
            return f"<SeriesComparison equal below q^{self.verified_below}>"
        e, x, y = self.first_discrepancy
        return f"<SeriesComparison differs at q^{e}: {x} vs {y}>"


def compare_series(a: QSeries, b: QSeries) -> SeriesComparison:
    """Compare coefficientwise through the smaller truncation boundary.

    Different grids are allowed; a slot present on only one grid is compared
    against an exact zero.
    """
    g, fa, fb = _aligned(a, b)
    bound = min(a.trunc * fa, b.trunc * fb)
    lo = min(a.min_exp * fa, b.min_exp * fb, bound)
    for e in range(lo, bound):
        ca = a.coeffs[(e - a.min_exp * fa) // fa] if (e - a.min_exp * fa) % fa == 0 and 0 <= (e - a.min_exp * fa) // fa < len(a.coeffs) else Fraction(0)
        cb = b.coeffs[(e - b.min_exp * fb) // fb] if (e - b.min_exp * fb) % fb == 0 and 0 <= (e - b.min_exp * fb) // fb < len(b.coeffs) else Fraction(0)
        if ca != cb:
            return SeriesComparison(False, Fraction(bound, g), (Fraction(e, g), ca, cb))
    return SeriesComparison(True, Fraction(bound, g), None)
