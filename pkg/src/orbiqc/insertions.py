"""Twisted-sector vocabulary shared by the lattice classifiers and the
correlator assembly.

Each of the three target orbifolds is a sphere with cone points w1, w2, w3;
its orbifold cohomology has one twisted sector per nontrivial element of each
local group, written here as the cone point plus an age k/n.  The untwisted
(fundamental-class) sector appears only so that the excluded two-point domain
types can be enumerated alongside the genuine ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "ORBIFOLDS",
    "POINT_ORDERS",
    "Insertion",
    "UNTWISTED",
    "twisted",
    "canonical_triple",
    "domain_signature",
]

ORBIFOLDS = ("333", "236", "244")

# Isotropy orders of (w1, w2, w3) per orbifold.
POINT_ORDERS = {
    "333": (3, 3, 3),
    "236": (2, 3, 6),
    "244": (2, 4, 4),
}


def check_orbifold(orbifold: str) -> str:
    if orbifold not in ORBIFOLDS:
        raise ValueError(f"unknown orbifold {orbifold!r}; expected one of {ORBIFOLDS}")
    return orbifold


@dataclass(frozen=True, order=True)
class Insertion:
    """A sector label: cone point w{point} with age k/n.

    ``point`` is 1..3 for twisted sectors; the untwisted sector uses the
    sentinel point 0 with k=0, n=1.  Ordering is by (point, k, n), which
    within one orbifold coincides with the (point, age) canonical order.
    """

    point: int
    k: int
    n: int

    def __post_init__(self):
        if self.point == 0:
            if (self.k, self.n) != (0, 1):
                raise ValueError("untwisted sector must have k=0, n=1")
        else:
            if self.point not in (1, 2, 3):
                raise ValueError(f"cone point must be 1..3, got {self.point}")
            if self.n < 2 or not 1 <= self.k <= self.n - 1:
                raise ValueError(f"twisted sector needs 1 <= k <= n-1, got k={self.k}, n={self.n}")

    @property
    def age(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def is_twisted(self) -> bool:
        return self.point != 0

    def local_order(self) -> int:
        """Order of the cyclic group generated by this sector's group element."""
        return self.n // gcd(self.n, self.k) if self.is_twisted else 1

    def label(self) -> str:
        return f"w{self.point}[{self.k}/{self.n}]" if self.is_twisted else "1"

    def __str__(self) -> str:
        return self.label()


UNTWISTED = Insertion(0, 0, 1)


def twisted(orbifold: str, point: int, k: int) -> Insertion:
    """Twisted sector at w{point} with the isotropy order of that orbifold."""
    check_orbifold(orbifold)
    n = POINT_ORDERS[orbifold][point - 1]
    return Insertion(point, k, n)


def canonical_triple(*insertions: Insertion) -> tuple[Insertion, Insertion, Insertion]:
    if len(insertions) != 3:
        raise ValueError(f"expected exactly 3 insertions, got {len(insertions)}")
    a, b, c = sorted(insertions)
    return (a, b, c)


def domain_signature(triple: tuple[Insertion, ...]) -> tuple[int, ...]:
    """Cone-point orders of the domain sphere forced by the insertions.

    A marking carrying w{i}[k/n] must have local group of order n/gcd(n,k);
    untwisted markings are smooth and drop out of the signature.
    """
    return tuple(sorted(ins.local_order() for ins in triple if ins.local_order() > 1))
