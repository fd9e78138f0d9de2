"""Assembly of the cubic Gromov-Witten coefficients.

Every degree-zero-dimension three-point correlator of the three elliptic
orbifold lines is a q-series with exact rational coefficients.  Nonconstant
maps are counted by lattice points: the norm residue of a point decides which
insertion triple it feeds, the norm (doubled for the even-degree families)
gives the q-exponent, and the unit-group symmetry contributes the 1/6 or 1/4
prefactor.  Constant maps land automatically through the zero lattice point,
which reproduces the 1/n classical terms of the one-point triples.

Two of the (2,3,6) series (the all-w3 family h8 and its w2-partner h9) rest
on a heuristic rhombus count whose completeness is conjectural; their status
says so, and the Frobenius consistency relation

    6 h6 h8 = -3 h7 h9 + 6 h1^2 + 2 h0^2

is checked coefficientwise as numerical evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Callable, NamedTuple, Optional

from .insertions import (
    POINT_ORDERS,
    UNTWISTED,
    Insertion,
    canonical_triple,
    check_orbifold,
    domain_signature,
    twisted,
)
from .modforms import residue_decompose, theta_F, theta_G
from .qseries import (
    QSeries,
    SeriesComparison,
    compare_series,
    qs_add,
    qs_scale,
    qs_substitute_power,
)

__all__ = [
    "Insertion",
    "CorrelatorKey",
    "CorrelatorSeries",
    "AdmissibleTriple",
    "InadmissibleKey",
    "STATUS_PROVEN",
    "STATUS_CONJECTURAL",
    "STATUS_ZERO",
    "CATALOG_NAMES",
    "admissible_triples",
    "series_name_for_key",
    "correlator",
    "correlator_by_name",
    "classical_term",
    "potential_cubic_table",
    "frobenius_check",
    "lifting_correspondence_check",
    "FrobeniusReport",
    "LiftingReport",
]

STATUS_PROVEN = "proven"
STATUS_CONJECTURAL = "conjectural"
STATUS_ZERO = "zero"


class InadmissibleKey(Exception):
    """The insertion ages do not sum to 1, so the moduli dimension is not zero."""


@dataclass(frozen=True)
class CorrelatorKey:
    """An orbifold plus a canonical (point, age)-sorted insertion triple."""

    orbifold: str
    insertions: tuple[Insertion, Insertion, Insertion]

    def __post_init__(self):
        check_orbifold(self.orbifold)
        orders = POINT_ORDERS[self.orbifold]
        for ins in self.insertions:
            if ins.is_twisted and ins.n != orders[ins.point - 1]:
                raise ValueError(
                    f"insertion {ins} does not live on the ({self.orbifold}) orbifold"
                )
        object.__setattr__(self, "insertions", canonical_triple(*self.insertions))

    @property
    def age_sum(self) -> Fraction:
        return sum((ins.age for ins in self.insertions), Fraction(0))

    @property
    def is_admissible(self) -> bool:
        return self.age_sum == 1

    def monomial_factor(self) -> Fraction:
        """Combinatorial prefactor of this triple's monomial in the potential:
        one over the factorials of the insertion multiplicities."""
        denom = 1
        for ins in set(self.insertions):
            denom *= factorial(self.insertions.count(ins))
        return Fraction(1, denom)

    def label(self) -> str:
        return "<" + ", ".join(ins.label() for ins in self.insertions) + ">"


def make_key(orbifold: str, *insertions: Insertion) -> CorrelatorKey:
    return CorrelatorKey(orbifold, canonical_triple(*insertions))


@dataclass(frozen=True)
class CorrelatorSeries:
    key: CorrelatorKey
    name: Optional[str]  # catalog name (f0/h3/g2, ...); None for unnamed zero classes
    series: QSeries
    status: str
    monomial_factor: Fraction


class AdmissibleTriple(NamedTuple):
    key: CorrelatorKey
    domain: str  # cone orders of the domain sphere, e.g. "236", "366", "22"
    excluded: bool  # True for degenerate domains with fewer than three cone points


def _all_sectors(orbifold: str) -> list[Insertion]:
    sectors = [UNTWISTED]
    for point, n in enumerate(POINT_ORDERS[orbifold], start=1):
        sectors.extend(Insertion(point, k, n) for k in range(1, n))
    return sectors


def admissible_triples(orbifold: str) -> list[AdmissibleTriple]:
    """Every insertion triple with ages summing to 1, tagged with the domain
    sphere its nonconstant maps would have.

    Triples whose domain has fewer than three cone points (the ones carrying
    an untwisted insertion) support no nonconstant maps and are marked
    excluded; their q-series vanish identically.
    """
    check_orbifold(orbifold)
    out = []
    for combo in combinations_with_replacement(_all_sectors(orbifold), 3):
        if sum((ins.age for ins in combo), Fraction(0)) != 1:
            continue
        key = CorrelatorKey(orbifold, combo)
        sig = domain_signature(key.insertions)
        out.append(AdmissibleTriple(key, "".join(map(str, sig)), len(sig) < 3))
    out.sort(key=lambda t: t.key.insertions)
    return out


# ----------------------------------------------------------------------
# Catalog: name -> representative insertion triple, per orbifold.

_T = twisted

_CATALOG: dict[str, list[tuple[str, tuple[Insertion, Insertion, Insertion]]]] = {
    "333": [
        ("f0", (_T("333", 1, 1), _T("333", 2, 1), _T("333", 3, 1))),
        ("f1", (_T("333", 1, 1), _T("333", 1, 1), _T("333", 1, 1))),
    ],
    "236": [
        ("h0", (_T("236", 1, 1), _T("236", 2, 1), _T("236", 3, 1))),
        ("h1", (_T("236", 3, 3), _T("236", 2, 1), _T("236", 3, 1))),
        ("h2", (_T("236", 1, 1), _T("236", 3, 2), _T("236", 3, 1))),
        ("h3", (_T("236", 3, 3), _T("236", 3, 2), _T("236", 3, 1))),
        ("h4", (_T("236", 3, 2), _T("236", 3, 2), _T("236", 3, 2))),
        ("h5", (_T("236", 2, 1), _T("236", 3, 2), _T("236", 3, 2))),
        ("h6", (_T("236", 2, 1), _T("236", 2, 1), _T("236", 3, 2))),
        ("h7", (_T("236", 2, 1), _T("236", 2, 1), _T("236", 2, 1))),
        ("h8", (_T("236", 3, 1), _T("236", 3, 1), _T("236", 3, 4))),
        ("h9", (_T("236", 2, 2), _T("236", 3, 1), _T("236", 3, 1))),
    ],
    "244": [
        ("g0", (_T("244", 1, 1), _T("244", 2, 1), _T("244", 2, 1))),
        ("g1", (_T("244", 1, 1), _T("244", 2, 1), _T("244", 3, 1))),
        ("g2", (_T("244", 2, 2), _T("244", 2, 1), _T("244", 2, 1))),
        ("g3", (_T("244", 2, 2), _T("244", 3, 1), _T("244", 3, 1))),
        ("g4", (_T("244", 2, 2), _T("244", 2, 1), _T("244", 3, 1))),
    ],
}

CATALOG_NAMES = {orb: [name for name, _ in rows] for orb, rows in _CATALOG.items()}


def catalog_key(orbifold: str, name: str) -> CorrelatorKey:
    for row_name, insertions in _CATALOG[check_orbifold(orbifold)]:
        if row_name == name:
            return CorrelatorKey(orbifold, insertions)
    raise KeyError(f"no series named {name!r} in the ({orbifold}) catalog")


def series_name_for_key(key: CorrelatorKey) -> Optional[str]:
    """Map a canonical key to its catalog series, None for identically-zero
    unnamed classes (mixed-repeat point patterns and untwisted triples)."""
    if any(not ins.is_twisted for ins in key.insertions):
        return None
    if key.orbifold == "333":
        points = tuple(ins.point for ins in key.insertions)
        if points == (1, 2, 3):
            return "f0"
        if points[0] == points[1] == points[2]:
            return "f1"
        return None
    if key.orbifold == "236":
        for name, insertions in _CATALOG["236"]:
            if canonical_triple(*insertions) == key.insertions:
                return name
        return None
    # (2,4,4): exactly one insertion of age 1/2, two of age 1/4
    big = [i for i in key.insertions if i.age == Fraction(1, 2)]
    quarters = [i for i in key.insertions if i.age == Fraction(1, 4)]
    if len(big) != 1 or len(quarters) != 2:
        return None
    q1, q2 = quarters
    if big[0].point == 1:
        return "g0" if q1.point == q2.point else "g1"
    if q1.point == q2.point == big[0].point:
        return "g2"
    if q1.point == q2.point:
        return "g3"
    return "g4"


# ----------------------------------------------------------------------
# Series builders


def _F_parts(order: int, modulus: int):
    return residue_decompose(theta_F(order), modulus)


def _half_order(order: int) -> int:
    return (order + 1) // 2


def _doubled_F_part(order: int, residue: int, scale: Fraction) -> QSeries:
    """scale * (residue-class part of the hexagonal theta series)(q^2)."""
    part = _F_parts(_half_order(order), 3).part(residue)
    return qs_scale(qs_substitute_power(part, 2), scale)


def _build_zero(order: int, _include: bool) -> tuple[QSeries, str]:
    return QSeries.zero(order), STATUS_ZERO


def _build_333(residue: int, scale: Fraction):
    def build(order: int, _include: bool) -> tuple[QSeries, str]:
        return qs_scale(_F_parts(order, 3).part(residue), scale), STATUS_PROVEN

    return build


def _build_236_linear(residue6: int):
    def build(order: int, _include: bool) -> tuple[QSeries, str]:
        return qs_scale(_F_parts(order, 6).part(residue6), Fraction(1, 6)), STATUS_PROVEN

    return build


def _build_236_doubled(residue: int, scale: Fraction, status: str):
    def build(order: int, _include: bool) -> tuple[QSeries, str]:
        return _doubled_F_part(order, residue, scale), status

    return build


def _build_244(residue4: int):
    def build(order: int, include_degree_zero: bool) -> tuple[QSeries, str]:
        part = residue_decompose(theta_G(order), 4).part(residue4)
        if residue4 == 0 and not include_degree_zero:
            # The displayed potential starts this sum at degree 1; the
            # degree-0 count contributes 1/4 only on request.
            part = qs_add(part, QSeries.constant(-1, part.truncation_exponent))
        return qs_scale(part, Fraction(1, 4)), STATUS_PROVEN

    return build


_BUILDERS: dict[tuple[str, str], Callable[[int, bool], tuple[QSeries, str]]] = {
    ("333", "f0"): _build_333(1, Fraction(1, 6)),
    ("333", "f1"): _build_333(0, Fraction(1, 3)),
    ("236", "h0"): _build_236_linear(1),
    ("236", "h1"): _build_236_linear(4),
    ("236", "h2"): _build_236_linear(3),
    ("236", "h3"): _build_236_linear(0),
    ("236", "h4"): _build_236_doubled(0, Fraction(1, 6), STATUS_PROVEN),
    ("236", "h5"): _build_zero,
    ("236", "h6"): _build_236_doubled(1, Fraction(1, 6), STATUS_PROVEN),
    ("236", "h7"): _build_236_doubled(0, Fraction(1, 3), STATUS_PROVEN),
    ("236", "h8"): _build_236_doubled(0, Fraction(1, 6), STATUS_CONJECTURAL),
    ("236", "h9"): _build_236_doubled(1, Fraction(1, 6), STATUS_CONJECTURAL),
    ("244", "g0"): _build_zero,
    ("244", "g1"): _build_244(1),
    ("244", "g2"): _build_244(0),
    ("244", "g3"): _build_244(2),
    ("244", "g4"): _build_zero,
}


def correlator(key: CorrelatorKey, order: int, include_degree_zero: bool = False) -> CorrelatorSeries:
    """The q-series of a three-point correlator, exact below ``order``.

    Constant-map terms arrive through the zero lattice point, so one-point
    triples pick up their 1/n constants without special casing.  Status is
    conjectural exactly for the two series counted by the rhombus heuristic.
    """
    if not key.is_admissible:
        raise InadmissibleKey(
            f"ages of {key.label()} sum to {key.age_sum}, not 1; the correlator is trivial"
        )
    name = series_name_for_key(key)
    if name is None:
        series, status = _build_zero(order, include_degree_zero)
    else:
        series, status = _BUILDERS[(key.orbifold, name)](order, include_degree_zero)
    return CorrelatorSeries(key, name, series, status, key.monomial_factor())


def correlator_by_name(
    orbifold: str, name: str, order: int, include_degree_zero: bool = False
) -> CorrelatorSeries:
    return correlator(catalog_key(orbifold, name), order, include_degree_zero)


def classical_term(key: CorrelatorKey) -> Fraction:
    """Degree-0 constant-map contribution: 1/n when all three insertions sit
    at one cone point of isotropy order n (and ages sum to 1), else 0."""
    if not key.is_admissible:
        raise InadmissibleKey(f"ages of {key.label()} sum to {key.age_sum}, not 1")
    first = key.insertions[0]
    if first.is_twisted and all(ins.point == first.point for ins in key.insertions):
        return Fraction(1, first.n)
    return Fraction(0)


def potential_cubic_table(
    orbifold: str, order: int, include_degree_zero: bool = False
) -> list[CorrelatorSeries]:
    """The full catalog of cubic coefficients for one orbifold, in display
    order, each row carrying its monomial prefactor and status."""
    check_orbifold(orbifold)
    return [
        correlator_by_name(orbifold, name, order, include_degree_zero)
        for name in CATALOG_NAMES[orbifold]
    ]


# ----------------------------------------------------------------------
# Consistency checks


@dataclass(frozen=True)
class FrobeniusReport:
    holds: bool
    verified_through: int
    first_discrepancy: Optional[int]
    residual: Optional[Fraction]  # value of the defect at the discrepancy


def frobenius_check(order: int) -> FrobeniusReport:
    """Check 6 h6 h8 + 3 h7 h9 - 6 h1^2 - 2 h0^2 = 0 coefficientwise.

    h8 and h9 are the conjectural inputs; a failure here would falsify their
    assembly rather than the proven series.
    """
    h = {name: correlator_by_name("236", name, order).series for name in ("h0", "h1", "h6", "h7", "h8", "h9")}
    defect = qs_add(
        qs_add(qs_scale(h["h6"] * h["h8"], 6), qs_scale(h["h7"] * h["h9"], 3)),
        qs_add(qs_scale(h["h1"] * h["h1"], -6), qs_scale(h["h0"] * h["h0"], -2)),
    )
    cmp = compare_series(defect, QSeries.zero(defect.truncation_exponent))
    bound = int(cmp.verified_below)
    if cmp.equal:
        return FrobeniusReport(True, bound - 1, None, None)
    exp, lhs, _ = cmp.first_discrepancy
    return FrobeniusReport(False, int(exp) - 1, int(exp), lhs)


@dataclass(frozen=True)
class LiftingReport:
    holds: bool
    verified_through: int
    comparisons: dict[str, SeriesComparison]


def lifting_correspondence_check(order: int) -> LiftingReport:
    """Rebuild the doubled-degree (2,3,6) series from the (3,3,3) correlators.

    Each map with (3,3,3) domain has exactly two liftings to the double
    cover, so a catalog series equals half the lifted correlator sum with
    q -> q^2; concretely h4 = (1/2) f1(q^2), h5 = 0, h6 = f0(q^2) and
    h7 = f1(q^2).  The catalog side is assembled from the mod-6/mod-3 residue
    decompositions instead, so this exercises independent bookkeeping.
    """
    half = _half_order(order)
    f0 = correlator_by_name("333", "f0", half).series
    f1 = correlator_by_name("333", "f1", half).series

    def from_liftings(lift_sum: QSeries) -> QSeries:
        return qs_scale(qs_substitute_power(lift_sum, 2), Fraction(1, 2))

    expected = {
        "h4": from_liftings(f1),
        "h5": QSeries.zero(order),
        "h6": from_liftings(qs_scale(f0, 2)),
        "h7": from_liftings(qs_scale(f1, 2)),
    }
    comparisons = {
        name: compare_series(correlator_by_name("236", name, order).series, series)
        for name, series in expected.items()
    }
    holds = all(c.equal for c in comparisons.values())
    bound = min(int(c.verified_below) for c in comparisons.values())
    return LiftingReport(holds, bound - 1, comparisons)
