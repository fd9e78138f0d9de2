"""Closed-form coefficients from divisor counts and prime factorizations.

These are the number-theoretic side of the oracle triangle: representation
numbers of the two norm forms expressed through divisor classes, and the
factored rule for the mixed-correlator series of the (3,3,3) orbifold.
Everything here is desk-scale trial division, deliberately simple enough to
audit by hand.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Factorization",
    "DivisorClassCount",
    "factorize",
    "divisors",
    "divisor_class_counts",
    "coeff_F_closed",
    "coeff_G_closed",
    "coeff_f0_factored",
]

Factorization = list[tuple[int, int]]


@dataclass(frozen=True)
class DivisorClassCount:
    """Divisor counts of one integer, bucketed by residue class."""

    modulus: int
    counts: tuple[int, ...]  # counts[r] = number of divisors = r (mod modulus)

    def count(self, residue: int) -> int:
        return self.counts[residue % self.modulus]

    def total(self) -> int:
        return sum(self.counts)


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division, primes ascending."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    out: Factorization = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def divisor_class_counts(n: int, modulus: int) -> DivisorClassCount:
    if modulus not in (3, 4):
        raise ValueError(f"modulus must be 3 or 4, got {modulus}")
    counts = [0] * modulus
    for d in divisors(n):
        counts[d % modulus] += 1
    return DivisorClassCount(modulus, tuple(counts))


def coeff_F_closed(n: int) -> int:
    """Representation number of a^2 - a*b + b^2 = n via divisor classes.

    Equals 6*(d_{1 mod 3}(n) - d_{2 mod 3}(n)) for n >= 1; the single zero
    solution gives 1 at n = 0.
    """
    if n == 0:
        return 1
    dc = divisor_class_counts(n, 3)
    return 6 * (dc.count(1) - dc.count(2))


def coeff_G_closed(n: int) -> int:
    """Representation number of a^2 + b^2 = n via divisor classes."""
    if n == 0:
        return 1
    dc = divisor_class_counts(n, 4)
    return 4 * (dc.count(1) - dc.count(3))


def coeff_f0_factored(n: int) -> int:
    """Coefficient of the (3,3,3) mixed-correlator series, from the
    factorization n = 3^e0 * prod p_i^{n_i} * prod q_j^{m_j} with p_i = 1 and
    q_j = 2 (mod 3): zero when e0 > 0 or some m_j is odd, else prod(n_i + 1).

    The redundant e0 > 0 branch doubles as a cross-check that the series is
    supported on n = 1 (mod 3) only.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    value = 1
    for p, e in factorize(n):
        if p % 3 == 0:
            return 0
        if p % 3 == 2:
            if e % 2 == 1:
                return 0
        else:
            value *= e + 1
    return value
