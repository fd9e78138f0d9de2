"""Integer points of the two norm forms and their sector classification.

The hexagonal (Eisenstein) form a^2 - a*b + b^2 and the square (Gaussian)
form a^2 + b^2 are the norms of a + b*tau (tau a primitive cube root of
unity) and a + b*i.  A nonzero point lambda classifies a degree-norm(lambda)
holomorphic orbi-sphere; which correlator it feeds is decided either by a
residue of the norm (the fast classifiers below) or by exact coset membership
of lambda times the fundamental-domain markings (the geometric oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import NamedTuple, Optional

from .insertions import Insertion, canonical_triple, twisted

__all__ = [
    "LatticeKind",
    "LatticePoint",
    "CosetClass",
    "ClassificationFailure",
    "norm",
    "solutions_of_norm",
    "unit_orbit",
    "classify_333",
    "classify_236",
    "classify_244",
    "classify_366_rhombus",
    "geometric_classify",
    "geometric_insertions",
    "check_geometry_vs_residue",
    "GEOMETRIC_DOMAINS",
]


class LatticeKind(Enum):
    EISENSTEIN = "eisenstein"
    GAUSSIAN = "gaussian"


class LatticePoint(NamedTuple):
    a: int
    b: int


class CosetClass(NamedTuple):
    """Which singular-point fiber a lattice image belongs to."""

    point_label: str  # "w1" | "w2" | "w3"


class ClassificationFailure(Exception):
    """A lattice image fell in no declared fiber: an implementation bug."""


def norm(kind: LatticeKind, p: LatticePoint) -> int:
    a, b = p
    if kind is LatticeKind.EISENSTEIN:
        return a * a - a * b + b * b
    return a * a + b * b


def solutions_of_norm(kind: LatticeKind, n: int) -> list[LatticePoint]:
    """All integer pairs of the given norm, in lexicographic order.

    For each a the norm equation is a quadratic in b, solved exactly with
    integer square roots; no floating point is involved.
    """
    if n < 0:
        raise ValueError("norm is nonnegative")
    if n == 0:
        return [LatticePoint(0, 0)]
    out = []
    if kind is LatticeKind.EISENSTEIN:
        # b^2 - a*b + (a^2 - n) = 0  =>  b = (a +- sqrt(4n - 3a^2)) / 2,
        # and 4n - 3a^2 = (2b - a)^2 has the parity of a automatically.
        amax = isqrt(4 * n // 3) + 1
        for a in range(-amax, amax + 1):
            disc = 4 * n - 3 * a * a
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r != disc:
                continue
            out.append(LatticePoint(a, (a + r) // 2))
            if r:
                out.append(LatticePoint(a, (a - r) // 2))
    else:
        amax = isqrt(n)
        for a in range(-amax, amax + 1):
            rem = n - a * a
            r = isqrt(rem)
            if r * r != rem:
                continue
            out.append(LatticePoint(a, r))
            if r:
                out.append(LatticePoint(a, -r))
    out.sort()
    return out


def unit_orbit(kind: LatticeKind, p: LatticePoint) -> list[LatticePoint]:
    """Orbit of p under the norm-form unit group (6 or 4 rotations)."""
    a, b = p
    orbit = []
    count = 6 if kind is LatticeKind.EISENSTEIN else 4
    for _ in range(count):
        orbit.append(LatticePoint(a, b))
        if kind is LatticeKind.EISENSTEIN:
            a, b = a - b, a  # multiplication by 1 + tau, a sixth root of unity
        else:
            a, b = -b, a  # multiplication by i
    return orbit


def _require_nonzero(p: LatticePoint):
    if p == (0, 0):
        raise ValueError("the zero point is the constant map; classify nonzero points only")


# ----------------------------------------------------------------------
# Residue classifiers.  Each returns the canonical insertion triple of the
# correlator the point contributes to; the q-exponent is norm(p) except for
# the rhombus case, where it is 2*norm(p).


def classify_333(p: LatticePoint) -> tuple[Insertion, Insertion, Insertion]:
    """Sphere-to-sphere maps on the (3,3,3) orbifold: all-one-point when
    3 | a+b (norm = 0 mod 3), one-insertion-per-point otherwise."""
    _require_nonzero(p)
    if (p.a + p.b) % 3 == 0:
        return canonical_triple(*(twisted("333", 1, 1) for _ in range(3)))
    return canonical_triple(twisted("333", 1, 1), twisted("333", 2, 1), twisted("333", 3, 1))


def classify_236(p: LatticePoint) -> tuple[Insertion, Insertion, Insertion]:
    """Self-maps of the (2,3,6) orbifold, split by (norm mod 2, norm mod 3)."""
    _require_nonzero(p)
    n = norm(LatticeKind.EISENSTEIN, p)
    half = twisted("236", 1, 1) if n % 2 == 1 else twisted("236", 3, 3)
    if n % 3 == 1:
        third = twisted("236", 2, 1)
    elif n % 3 == 0:
        third = twisted("236", 3, 2)
    else:
        raise ClassificationFailure(f"norm {n} = 2 mod 3 cannot occur for the hexagonal form")
    return canonical_triple(half, third, twisted("236", 3, 1))


def classify_244(p: LatticePoint) -> tuple[Insertion, Insertion, Insertion]:
    """Self-maps of the (2,4,4) orbifold, split by norm mod 4 in {1, 0, 2}."""
    _require_nonzero(p)
    n = norm(LatticeKind.GAUSSIAN, p)
    r = n % 4
    if r == 1:
        return canonical_triple(twisted("244", 1, 1), twisted("244", 2, 1), twisted("244", 3, 1))
    if r == 0:
        return canonical_triple(twisted("244", 2, 2), twisted("244", 2, 1), twisted("244", 2, 1))
    if r == 2:
        return canonical_triple(twisted("244", 3, 2), twisted("244", 2, 1), twisted("244", 2, 1))
    raise ClassificationFailure(f"norm {n} = 3 mod 4 cannot occur for the square form")


def classify_366_rhombus(p: LatticePoint) -> tuple[Insertion, Insertion, Insertion]:
    """Rhombus-folded maps with hyperbolic (3,6,6) domain, target (2,3,6).

    The q-exponent contributed by p is 2*norm(p); the zero point is excluded
    here and supplies the constant term of the all-w3 series instead.
    """
    _require_nonzero(p)
    if norm(LatticeKind.EISENSTEIN, p) % 3 == 0:
        return canonical_triple(twisted("236", 3, 1), twisted("236", 3, 1), twisted("236", 3, 4))
    return canonical_triple(twisted("236", 2, 2), twisted("236", 3, 1), twisted("236", 3, 1))


# ----------------------------------------------------------------------
# Geometric oracle: exact coset membership of the marking images.

GEOMETRIC_DOMAINS = ("333", "236", "244", "366")

_THIRD_COSETS = {(1, 2): "v2", (2, 1): "v3"}  # nontrivial cosets of Z<1,tau> in the 1/3 grid


def _mul_eisenstein(a: int, b: int, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
    # (a + b*tau)(x + y*tau) with tau^2 = -1 - tau
    return a * x - b * y, a * y + b * x - b * y


def _mul_gaussian(a: int, b: int, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
    return a * x - b * y, a * y + b * x


def _is_integral(x: Fraction, y: Fraction) -> bool:
    return x.denominator == 1 and y.denominator == 1


def _third_coset(x: Fraction, y: Fraction) -> Optional[str]:
    x3, y3 = 3 * x, 3 * y
    if x3.denominator != 1 or y3.denominator != 1:
        return None
    return _THIRD_COSETS.get((x3.numerator % 3, y3.numerator % 3))


def _fiber_333(x: Fraction, y: Fraction) -> Optional[str]:
    if _is_integral(x, y):
        return "w1"
    coset = _third_coset(x, y)
    if coset == "v2":
        return "w2"
    if coset == "v3":
        return "w3"
    return None


def _fiber_236(x: Fraction, y: Fraction) -> Optional[str]:
    if _is_integral(x, y):
        return "w3"
    if _third_coset(x, y) is not None:
        return "w2"
    x2, y2 = 2 * x, 2 * y
    if x2.denominator == 1 and y2.denominator == 1:
        return "w1"  # half-integral but not integral: a or b odd
    return None


def _fiber_244(x: Fraction, y: Fraction) -> Optional[str]:
    if _is_integral(x, y):
        return "w2"
    x2, y2 = 2 * x, 2 * y
    if x2.denominator == 1 and y2.denominator == 1:
        odd = (x2.numerator % 2, y2.numerator % 2)
        return "w3" if odd == (1, 1) else "w1"
    return None


# Markings of the fundamental domain whose images decide the insertions,
# together with the fiber test of the target lattice.
_MARKINGS = {
    "333": (_mul_eisenstein, _fiber_333, ((Fraction(1, 3), Fraction(2, 3)), (Fraction(2, 3), Fraction(1, 3)))),
    "236": (_mul_eisenstein, _fiber_236, ((Fraction(2, 3), Fraction(1, 3)), (Fraction(1, 2), Fraction(1, 2)))),
    "244": (_mul_gaussian, _fiber_244, ((Fraction(1, 2), Fraction(0)), (Fraction(1, 2), Fraction(1, 2)))),
    "366": (_mul_eisenstein, _fiber_236, ((Fraction(2, 3), Fraction(1, 3)),)),
}


def geometric_classify(domain: str, p: LatticePoint) -> tuple[CosetClass, ...]:
    """Fiber membership of each marking image, computed exactly over Q.

    This never consults a norm residue, so it is an independent oracle for
    the classifiers above.
    """
    if domain not in _MARKINGS:
        raise ValueError(f"unknown domain {domain!r}; expected one of {GEOMETRIC_DOMAINS}")
    _require_nonzero(p)
    mul, fiber, markings = _MARKINGS[domain]
    labels = []
    for vx, vy in markings:
        x, y = mul(p.a, p.b, vx, vy)
        label = fiber(x, y)
        if label is None:
            raise ClassificationFailure(
                f"image of marking ({vx}, {vy}) under {p} lies in no declared fiber"
            )
        labels.append(CosetClass(label))
    return tuple(labels)


# How a marking of given local order reads off its insertion from the fiber
# it lands in.  A missing entry means the fiber is unreachable for that
# marking, which only an implementation bug could produce.
_INSERTION_RULES = {
    "333": (
        twisted("333", 1, 1),
        ({"w1": twisted("333", 1, 1), "w2": twisted("333", 2, 1), "w3": twisted("333", 3, 1)},) * 2,
    ),
    "236": (
        twisted("236", 3, 1),
        (
            {"w2": twisted("236", 2, 1), "w3": twisted("236", 3, 2)},
            {"w1": twisted("236", 1, 1), "w3": twisted("236", 3, 3)},
        ),
    ),
    "244": (
        twisted("244", 2, 1),
        (
            {"w1": twisted("244", 1, 1), "w2": twisted("244", 2, 2), "w3": twisted("244", 3, 2)},
            {"w2": twisted("244", 2, 1), "w3": twisted("244", 3, 1)},
        ),
    ),
}


def geometric_insertions(domain: str, p: LatticePoint) -> tuple[Insertion, Insertion, Insertion]:
    """Insertion triple read off from coset membership alone."""
    labels = geometric_classify(domain, p)
    if domain == "366":
        # Both order-6 markings of the rhombus carry the same insertion; the
        # remaining vertex closes the triple.
        if labels[0].point_label == "w3":
            return canonical_triple(twisted("236", 3, 1), twisted("236", 3, 1), twisted("236", 3, 4))
        if labels[0].point_label == "w2":
            return canonical_triple(twisted("236", 2, 2), twisted("236", 3, 1), twisted("236", 3, 1))
        raise ClassificationFailure(f"rhombus marking cannot land in {labels[0].point_label}")
    base, rules = _INSERTION_RULES[domain]
    ins = [base]
    for label, rule in zip(labels, rules):
        try:
            ins.append(rule[label.point_label])
        except KeyError:
            raise ClassificationFailure(
                f"marking of {domain} cannot land in fiber {label.point_label}"
            ) from None
    return canonical_triple(*ins)


_RESIDUE_CLASSIFIERS = {
    "333": classify_333,
    "236": classify_236,
    "244": classify_244,
    "366": classify_366_rhombus,
}


@dataclass(frozen=True)
class GeometryReport:
    holds: bool
    max_norm: int
    points_checked: int
    first_failure: Optional[tuple[str, LatticePoint]]


def check_geometry_vs_residue(max_norm: int) -> GeometryReport:
    """Exhaustively compare the geometric oracle with every residue
    classifier on all nonzero points of norm up to max_norm."""
    checked = 0
    for domain in GEOMETRIC_DOMAINS:
        kind = LatticeKind.GAUSSIAN if domain == "244" else LatticeKind.EISENSTEIN
        classify = _RESIDUE_CLASSIFIERS[domain]
        for n in range(1, max_norm + 1):
            for p in solutions_of_norm(kind, n):
                checked += 1
                if geometric_insertions(domain, p) != classify(p):
                    return GeometryReport(False, max_norm, checked, (domain, p))
    return GeometryReport(True, max_norm, checked, None)
