from itertools import combinations

import pytest

from orbiqc.arith import (
    coeff_F_closed,
    coeff_G_closed,
    coeff_f0_factored,
    divisor_class_counts,
    divisors,
    factorize,
)
from orbiqc.lattice import LatticeKind, solutions_of_norm


@pytest.mark.parametrize(
    "n,expected",
    [(12, [(2, 2), (3, 1)]), (1, []), (91, [(7, 1), (13, 1)]), (97, [(97, 1)]), (720, [(2, 4), (3, 2), (5, 1)])],
)
def test_factorize(n, expected):
    assert factorize(n) == expected


def test_factorize_reconstructs():
    for n in range(1, 400):
        prod = 1
        fac = factorize(n)
        for p, e in fac:
            prod *= p**e
        assert prod == n
        assert [p for p, _ in fac] == sorted({p for p, _ in fac})


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)


def test_divisor_class_counts_examples():
    dc = divisor_class_counts(7, 3)
    assert dc.count(1) == 2 and dc.count(2) == 0  # divisors 1, 7
    dc = divisor_class_counts(9, 4)
    assert dc.count(1) == 2 and dc.count(3) == 1  # 1, 9 vs 3
    for m in (3, 4):
        dc = divisor_class_counts(1, m)
        assert dc.count(1) == 1 and dc.total() == 1


def test_divisor_class_total_is_divisor_count():
    for n in range(1, 300):
        for m in (3, 4):
            assert divisor_class_counts(n, m).total() == len(divisors(n))


def test_divisor_class_rejects_other_moduli():
    with pytest.raises(ValueError):
        divisor_class_counts(10, 5)


@pytest.mark.parametrize("n,value", [(7, 12), (2, 0), (0, 1), (1, 6), (3, 6), (21, 12)])
def test_coeff_F_closed(n, value):
    assert coeff_F_closed(n) == value


@pytest.mark.parametrize("n,value", [(5, 8), (9, 4), (3, 0), (0, 1), (2, 4)])
def test_coeff_G_closed(n, value):
    assert coeff_G_closed(n) == value


@pytest.mark.parametrize("n,value", [(13, 2), (3, 0), (4, 1), (1, 1), (7, 2), (10, 0), (91, 4)])
def test_coeff_f0_factored(n, value):
    assert coeff_f0_factored(n) == value


def test_closed_forms_match_enumeration():
    for n in range(300):
        assert coeff_F_closed(n) == len(solutions_of_norm(LatticeKind.EISENSTEIN, n))
        assert coeff_G_closed(n) == len(solutions_of_norm(LatticeKind.GAUSSIAN, n))


def test_f0_multiplicative_on_split_primes():
    # for coprime products of primes = 1 (mod 3) the normalized counts multiply
    split_primes = (7, 13, 19, 31, 37, 43)
    for m, n in combinations(split_primes, 2):
        assert coeff_F_closed(m * n) // 6 == (coeff_F_closed(m) // 6) * (coeff_F_closed(n) // 6)


def test_f0_factored_matches_closed_form_on_its_support():
    for n in range(1, 400):
        if n % 3 == 1:
            assert coeff_f0_factored(n) * 6 == coeff_F_closed(n)
        elif n % 3 == 0:
            assert coeff_f0_factored(n) == 0
