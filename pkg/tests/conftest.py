"""Shared golden expansions and comparison helpers.

The dictionaries below freeze published q-expansions (and values derived
from them by residue filtering); each maps exponent -> coefficient and is
exact for all exponents strictly below the stated bound.
"""

from fractions import Fraction

from orbiqc.qseries import QSeries

# Hexagonal-form theta series, exact through q^23.
PAPER_F = {0: 1, 1: 6, 3: 6, 4: 6, 7: 12, 9: 6, 12: 6, 13: 12, 16: 6, 19: 12, 21: 12}

# Square-form theta series, exact through q^19.
PAPER_G = {0: 1, 1: 4, 2: 4, 4: 4, 5: 8, 8: 4, 9: 4, 10: 8, 13: 8, 16: 4, 17: 8, 18: 4}

# (3,3,3) cubic coefficients, exact through q^23.
PAPER_F0 = {1: 1, 4: 1, 7: 2, 13: 2, 16: 1, 19: 2}
PAPER_F1 = {0: Fraction(1, 3), 3: 2, 9: 2, 12: 2, 21: 4}

# Residue parts of the hexagonal theta series, filtered from PAPER_F.
PAPER_F_MOD3 = {
    0: {0: 1, 3: 6, 9: 6, 12: 6, 21: 12},
    1: {1: 6, 4: 6, 7: 12, 13: 12, 16: 6, 19: 12},
    2: {},
}

# (2,3,6) doubled-degree series, exact through q^47 (h8 through q^95).
PAPER_H4 = {0: Fraction(1, 6), 6: 1, 18: 1, 24: 1, 42: 2}
PAPER_H6 = {2: 1, 8: 1, 14: 2, 26: 2, 32: 1, 38: 2}
PAPER_H7 = {0: Fraction(1, 3), 6: 2, 18: 2, 24: 2, 42: 4}
PAPER_H8 = {0: Fraction(1, 6), 6: 1, 18: 1, 24: 1, 42: 2, 54: 1, 72: 1, 78: 2}
PAPER_H9 = {2: 1, 8: 1, 14: 2, 26: 2, 32: 1, 38: 2}


def assert_series_terms(series: QSeries, expected: dict, through: int):
    """Every integer exponent 0..through must carry exactly the expected value."""
    for e in range(through + 1):
        got = series.coefficient(e)
        want = Fraction(expected.get(e, 0))
        assert got == want, f"coefficient of q^{e}: got {got}, expected {want}"
