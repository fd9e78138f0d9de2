from math import isqrt

import pytest

from orbiqc.insertions import canonical_triple, twisted
from orbiqc.lattice import (
    ClassificationFailure,
    CosetClass,
    LatticeKind,
    LatticePoint,
    check_geometry_vs_residue,
    classify_236,
    classify_244,
    classify_333,
    classify_366_rhombus,
    geometric_classify,
    geometric_insertions,
    norm,
    solutions_of_norm,
    unit_orbit,
)

E = LatticeKind.EISENSTEIN
G = LatticeKind.GAUSSIAN


def P(a, b):
    return LatticePoint(a, b)


def triple(orb, *pairs):
    return canonical_triple(*(twisted(orb, pt, k) for pt, k in pairs))


# ----------------------------------------------------------------------
# norm and enumeration


@pytest.mark.parametrize(
    "kind,point,value",
    [(E, (2, 1), 3), (E, (0, 0), 0), (G, (2, 1), 5), (E, (1, 2), 3), (G, (-3, 4), 25)],
)
def test_norm(kind, point, value):
    assert norm(kind, P(*point)) == value


@pytest.mark.parametrize("kind,n,count", [(E, 1, 6), (E, 2, 0), (E, 3, 6), (G, 5, 8), (G, 0, 1)])
def test_solution_counts(kind, n, count):
    assert len(solutions_of_norm(kind, n)) == count


def test_solutions_sorted_and_unique():
    for kind in (E, G):
        for n in (1, 4, 25, 49):
            sols = solutions_of_norm(kind, n)
            assert sols == sorted(set(sols))
            assert all(norm(kind, p) == n for p in sols)


def brute_solutions(kind, n):
    bound = 2 * isqrt(n) + 2
    return sorted(
        P(a, b)
        for a in range(-bound, bound + 1)
        for b in range(-bound, bound + 1)
        if norm(kind, P(a, b)) == n
    )


@pytest.mark.parametrize("kind", [E, G])
def test_enumeration_complete_against_box_search(kind):
    for n in range(0, 80):
        assert solutions_of_norm(kind, n) == brute_solutions(kind, n)


def test_unit_orbit_preserves_norm_and_class():
    for p in (P(1, 0), P(2, 1), P(3, -1)):
        orbit = unit_orbit(E, p)
        assert len(set(orbit)) == 6
        assert {norm(E, q) for q in orbit} == {norm(E, p)}
        assert {classify_333(q) for q in orbit} == {classify_333(p)}
    for p in (P(1, 0), P(2, 1)):
        orbit = unit_orbit(G, p)
        assert len(set(orbit)) == 4
        assert {classify_244(q) for q in orbit} == {classify_244(p)}


@pytest.mark.parametrize("kind,divisor", [(E, 6), (G, 4)])
def test_counts_divisible_by_unit_group(kind, divisor):
    for n in range(1, 200):
        assert len(solutions_of_norm(kind, n)) % divisor == 0


def test_norm_support_residues():
    for n in range(200):
        if n % 3 == 2:
            assert solutions_of_norm(E, n) == []
        if n % 4 == 3:
            assert solutions_of_norm(G, n) == []


# ----------------------------------------------------------------------
# residue classifiers


def test_classify_333():
    mixed = triple("333", (1, 1), (2, 1), (3, 1))
    allsame = triple("333", (1, 1), (1, 1), (1, 1))
    assert classify_333(P(1, 0)) == mixed  # degree 1
    assert classify_333(P(1, 2)) == allsame  # degree 3
    assert classify_333(P(2, 1)) == allsame
    with pytest.raises(ValueError):
        classify_333(P(0, 0))


def test_classify_236():
    assert classify_236(P(1, 0)) == triple("236", (1, 1), (2, 1), (3, 1))  # N=1
    assert classify_236(P(2, 0)) == triple("236", (3, 3), (2, 1), (3, 1))  # N=4
    assert classify_236(P(1, 2)) == triple("236", (1, 1), (3, 2), (3, 1))  # N=3
    assert classify_236(P(6, 0)) == triple("236", (3, 3), (3, 2), (3, 1))  # N=36


def test_classify_244():
    assert classify_244(P(1, 0)) == triple("244", (1, 1), (2, 1), (3, 1))  # N=1
    assert classify_244(P(2, 0)) == triple("244", (2, 2), (2, 1), (2, 1))  # N=4
    assert classify_244(P(1, 1)) == triple("244", (3, 2), (2, 1), (2, 1))  # N=2


def test_classify_366_rhombus():
    h8 = triple("236", (3, 1), (3, 1), (3, 4))
    h9 = triple("236", (2, 2), (3, 1), (3, 1))
    assert classify_366_rhombus(P(1, 2)) == h8  # norm 3, exponent 6
    assert classify_366_rhombus(P(2, 1)) == h8
    assert classify_366_rhombus(P(1, 0)) == h9  # norm 1, exponent 2


# ----------------------------------------------------------------------
# geometric oracle


def test_geometric_examples():
    # lambda = 1 sends the two (3,3,3) markings to the w2 and w3 cosets
    assert geometric_classify("333", P(1, 0)) == (CosetClass("w2"), CosetClass("w3"))
    # lambda = 2 on (2,3,6): order-3 marking to w2, order-2 marking to w3
    assert geometric_classify("236", P(2, 0)) == (CosetClass("w2"), CosetClass("w3"))
    assert geometric_insertions("333", P(1, 0)) == classify_333(P(1, 0))


def test_geometric_rejects_zero_and_unknown_domain():
    with pytest.raises(ValueError):
        geometric_classify("333", P(0, 0))
    with pytest.raises(ValueError):
        geometric_classify("777", P(1, 0))


def test_geometry_matches_residues_smoke():
    report = check_geometry_vs_residue(80)
    assert report.holds, report
    assert report.points_checked > 0


def test_classification_failure_is_exported():
    assert issubclass(ClassificationFailure, Exception)
