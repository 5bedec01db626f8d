import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from staircase.genfun import (
    MultiPoly,
    NumeratorError,
    UniSeries,
    _check_numerator,
    asymptotic_constants,
    asymptotic_estimate,
    denominator_degree,
    extract_qr,
    extract_qr_multivariate,
    parse_multipoly,
    parse_uniseries,
    pc_series,
    ps_series,
    staircase_denominator,
    staircase_monomial,
    zeta_three_halves,
)
from staircase.superconcave import is_superconcave, superconcave_counts

from conftest import partitions_of

PC_TABLE = [1, 1, 2, 3, 4, 7, 9, 11, 17, 23, 28, 39, 48, 59, 79, 100, 121, 152, 185, 225, 280]

Q2 = "1 + x1*x2 - x1^2*x2"
Q3 = "1 + x1*x2 - x1^2*x2 + x3*x1^5*x2^3 - x3*x1^4*x2^3 - 2*x3*x1^3*x2^2 + x3*x1^2*x2^2 + x3*x1*x2"


def series(coeffs):
    return UniSeries.from_list(coeffs)


def test_uniseries_arithmetic():
    a = series([1, 2, 3])
    b = series([1, -1, 0, 5])
    assert (a + b).coeffs == (2, 1, 3)
    assert (a * b).coeffs == (1, 1, 1)
    assert (1 - a).coeffs == (0, -2, -3)
    geometric = series([1, -1, 0, 0, 0]).inverse()
    assert geometric.coeffs == (1, 1, 1, 1, 1)
    with pytest.raises(ZeroDivisionError):
        series([2, 1]).inverse()


unit_series = st.lists(st.integers(-9, 9), min_size=1, max_size=25).flatmap(
    lambda tail: st.sampled_from([1, -1]).map(lambda c0: UniSeries.from_list([c0] + tail))
)


@given(unit_series)
def test_division_contract(u):
    ps = ps_series(None, u.order)
    assert ((ps * u) / u).coeffs == ps.coeffs


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12))
def test_uniseries_text_round_trip(coeffs):
    s = series(coeffs)
    parsed = parse_uniseries(s.to_text())
    assert UniSeries(parsed.coeffs, s.order) == s


def test_text_forms():
    assert series([1, 0, 1, -1]).to_text() == "1 + t^2 - t^3"
    assert series([0, -2, 0, 3]).to_text() == "-2*t + 3*t^3"
    assert series([0, 0]).to_text() == "0"
    assert parse_multipoly(Q2, 2).to_text() == Q2


@pytest.mark.parametrize(
    "r, order, expected",
    [(2, 9, [1, 1, 1, 2, 2, 2, 3, 3, 3, 4]), (0, 5, [1, 0, 0, 0, 0, 0]), (None, 6, [1, 1, 1, 2, 2, 2, 4])],
)
def test_ps_series_examples(r, order, expected):
    assert list(ps_series(r, order).coeffs) == expected


@pytest.mark.parametrize("r", [None, 1, 2, 3, 4])
def test_ps_series_matches_brute_force(r):
    s = ps_series(r, 30)
    for n in range(31):
        assert s[n] == sum(1 for lam in partitions_of(n, r) if is_superconcave(lam))


def test_ps_series_agrees_with_dp():
    assert list(ps_series(None, 300).coeffs) == superconcave_counts(300)


def test_pc_series_examples():
    assert list(pc_series(None, 20).coeffs) == PC_TABLE
    assert list(pc_series(1, 5).coeffs) == [1] * 6
    rational = parse_uniseries("1 + t^2 - t^3").truncate(6)
    expected = UniSeries(rational.coeffs, 6) / staircase_denominator(2, 6)
    assert pc_series(2, 6).coeffs == expected.coeffs


@pytest.mark.parametrize(
    "r, text",
    [
        (1, "1"),
        (2, "1 + t^2 - t^3"),
        (3, "1 + t^2 + t^5 - 2*t^6 - t^8 + t^9"),
        (
            4,
            "1 + t^2 + t^4 + t^5 - t^6 - t^7 + 2*t^9 - 2*t^10 - t^11 - 2*t^12"
            " + 2*t^13 - t^14 - t^15 + t^16 + t^17 + t^18 - t^19",
        ),
    ],
)
def test_extract_qr(r, text):
    q = extract_qr(r)
    assert q.to_text() == text
    assert q.value_at_one() == 1
    assert q.degree < denominator_degree(r)


def test_degree_bound_formula():
    for r in range(1, 10):
        assert 6 * denominator_degree(r) == r**3 + 3 * r**2 + 2 * r


def test_numerator_check_raises():
    with pytest.raises(NumeratorError):
        _check_numerator(series([1, 0, 0, 1]), 2, "bogus")


def test_staircase_monomials():
    assert staircase_monomial(1, 3) == (1, 0, 0)
    assert staircase_monomial(3, 3) == (3, 2, 1)
    assert staircase_monomial(2, 4) == (2, 1, 0, 0)


@pytest.mark.parametrize("r, text", [(1, "1"), (2, Q2), (3, Q3)])
def test_extract_qr_multivariate(r, text):
    assert extract_qr_multivariate(r) == parse_multipoly(text, r)


def test_multivariate_consistency():
    q3 = extract_qr_multivariate(3)
    q4 = extract_qr_multivariate(4)
    assert q3.set_last_zero() == extract_qr_multivariate(2)
    assert q4.set_last_zero() == q3
    for r in range(1, 5):
        q = extract_qr_multivariate(r)
        assert q.value_at_ones() == 1
        assert q.specialize().to_text() == extract_qr(r).to_text()
        assert all(list(e) == sorted(e, reverse=True) for e in q.terms)


def test_multivariate_cost_guard():
    with pytest.raises(ValueError):
        extract_qr_multivariate(5)


def test_multipoly_text_is_graded_lex():
    p = parse_multipoly("x2 + x1 + 1 + x1^2", 2)
    assert p.to_text() == "1 + x1 + x2 + x1^2"
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})


def test_pc_leading_numerator():
    q = pc_series(None, 20) * staircase_denominator(None, 20)
    assert q.coeffs[:3] == (1, 0, 1)


def test_zeta_against_mpmath():
    assert abs(zeta_three_halves() - float(mpmath.zeta(1.5))) < 1e-11


def test_constants():
    mpmath.mp.dps = 30
    C = mpmath.mpf(2) ** (-mpmath.mpf(1) / 3) * (mpmath.zeta(1.5) * mpmath.gamma(1.5)) ** (mpmath.mpf(2) / 3)
    c = mpmath.sqrt(3) / 12 * (C / mpmath.pi) ** 1.5
    k = asymptotic_constants()
    assert k.C == pytest.approx(float(C), rel=1e-10)
    assert k.c == pytest.approx(float(c), rel=1e-10)
    assert round(k.C, 4) == 1.3890
    assert round(k.c, 5) == 0.04243


def test_asymptotic_ratio_bracket():
    table = superconcave_counts(100_000)
    ratios = [table[n] / asymptotic_estimate(n) for n in (1000, 10_000, 100_000)]
    assert 0.5 < ratios[-1] < 2.0
    assert abs(1 - ratios[0]) > abs(1 - ratios[1]) > abs(1 - ratios[2])
    assert math.isfinite(asymptotic_estimate(1))
    with pytest.raises(ValueError):
        asymptotic_estimate(0)
