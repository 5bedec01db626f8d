from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from staircase.closure import (
    StaircaseIdeal,
    closure_hull,
    closure_oracle,
    format_staircase,
    integral_closure,
    is_concave,
    parse_staircase,
    partition_of,
    staircase_of,
)
from staircase.partition import Partition, conjugate, ferrers

from conftest import partitions_upto

P = Partition.of

partitions = st.lists(st.integers(1, 40), max_size=12).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def concave_by_ratio(lam, kmax):
    """lambda_j < 1 + lambda_i (k-j)/(k-i) + lambda_k (j-i)/(k-i), all i<j<k<=kmax."""
    for k in range(3, kmax + 1):
        for j in range(2, k):
            for i in range(1, j):
                rhs = 1 + Fraction(lam.part(i) * (k - j), k - i) + Fraction(lam.part(k) * (j - i), k - i)
                if not lam.part(j) < rhs:
                    return False
    return True


@pytest.mark.parametrize(
    "lam, gens",
    [
        (P(4, 4, 2, 2), ((4, 0), (2, 2), (0, 4))),
        (P(), ((0, 0),)),
        (P(2, 1, 1), ((2, 0), (1, 1), (0, 3))),
        (P(4, 3, 2, 1), ((4, 0), (3, 1), (2, 2), (1, 3), (0, 4))),
    ],
)
def test_staircase_of_examples(lam, gens):
    assert staircase_of(lam).generators == gens
    assert partition_of(StaircaseIdeal(gens)) == lam


def test_staircase_text_form():
    ideal = staircase_of(P(4, 4, 2, 2))
    assert format_staircase(ideal) == "4,0;2,2;0,4"
    assert parse_staircase("0,4;2,2;4,0") == ideal


def test_non_antichain_rejected():
    with pytest.raises(ValueError):
        StaircaseIdeal(((2, 0), (3, 1)))


def test_partition_of_rejects_non_artinian():
    with pytest.raises(ValueError):
        partition_of(StaircaseIdeal(((2, 1), (0, 3))))
    with pytest.raises(ValueError):
        partition_of(StaircaseIdeal(((3, 0), (1, 2))))


def test_staircase_is_complement_of_diagram():
    for lam in partitions_upto(16):
        ideal = staircase_of(lam)
        pts = ferrers(lam)
        box = range(lam.largest + 3)
        for a in box:
            for b in range(lam.numparts + 3):
                assert ((a, b) in ideal) != ((a, b) in pts)
        assert partition_of(ideal) == lam


@pytest.mark.parametrize(
    "lam, expected",
    [(P(4, 4, 2, 2), P(4, 3, 2, 1)), (P(), P()), (P(2, 1, 1), P(2, 1, 1)), (P(5), P(5)), (P(6, 6), P(6, 3))],
)
def test_integral_closure_examples(lam, expected):
    assert integral_closure(lam) == expected


def test_worked_example_generators():
    closed = integral_closure(P(4, 4, 2, 2))
    assert staircase_of(closed).generators == ((4, 0), (3, 1), (2, 2), (1, 3), (0, 4))


def test_hull_drops_collinear_points():
    # (4,0), (2,2), (0,4) are collinear: only the axis generators remain
    assert closure_hull(P(4, 4, 2, 2)) == [(4, 0), (0, 4)]
    assert closure_hull(P()) == [(0, 0)]


@pytest.mark.parametrize(
    "lam, bound, expected",
    [(P(4, 4, 2, 2), 4, P(4, 3, 2, 1)), (P(), 1, P()), (P(5), 5, P(5))],
)
def test_closure_oracle_examples(lam, bound, expected):
    assert closure_oracle(lam, bound) == expected


def test_oracle_membership_of_1_3():
    # 2*(1,3) = (2,6) = (2,2) + (0,4) lies in 2*I
    assert closure_oracle(P(4, 4, 2, 2), 1) == P(4, 4, 2, 2)
    assert closure_oracle(P(4, 4, 2, 2), 2).part(4) == 1


@pytest.mark.parametrize(
    "lam, expected",
    [(P(4, 4, 2, 2), False), (P(1, 1), True), (P(2, 1, 1), True), (P(), True), (P(2), True), (P(3, 3), False)],
)
def test_is_concave_examples(lam, expected):
    assert is_concave(lam) is expected


def test_oracle_agreement_up_to_18():
    for lam in partitions_upto(18):
        assert integral_closure(lam) == closure_oracle(lam, lam.numparts + lam.largest + 1), lam


def test_fixed_points_are_concave(upto25):
    for lam in upto25:
        assert is_concave(lam) == (integral_closure(lam) == lam), lam


def test_ratio_form_agrees_and_truncation_is_safe(upto25):
    # checking well past k = r+1 confirms the finite bound loses nothing
    for lam in upto25:
        assert is_concave(lam) == concave_by_ratio(lam, lam.numparts + 3), lam


def test_idempotent_and_contained(upto25):
    for lam in upto25:
        bar = integral_closure(lam)
        assert integral_closure(bar) == bar
        assert all(bar.part(j) <= lam.part(j) for j in range(1, lam.numparts + 1))
        assert bar.weight <= lam.weight
        assert bar.numparts <= lam.numparts
        assert bar.largest == lam.largest


def test_concavity_preserved_by_conjugation(upto25):
    failures = [lam for lam in upto25 if is_concave(lam) != is_concave(conjugate(lam))]
    assert failures == []


@settings(max_examples=150, deadline=None)
@given(partitions)
def test_random_closure_matches_oracle(lam):
    bar = integral_closure(lam)
    assert bar == closure_oracle(lam, lam.numparts + lam.largest + 1)
    assert is_concave(bar)
