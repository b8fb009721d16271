"""Laurent series arithmetic and the named generating-series checks."""

import random

import pytest

from sternlike import (DivisionError, RangeError, UnknownCheckError, add,
                       check_named, compose_power, divide, first_mismatch,
                       mul, preset, scale, sequence_series, shift, sub,
                       truncate)
from sternlike.series import LaurentSeries, from_coeffs, monomial

from conftest import STERN_TERMS


def _random_series(rng, order=24, low=-4):
    val = rng.randint(low, 2)
    return LaurentSeries(val, tuple(rng.randint(-9, 9) for _ in range(order - val)))


def test_sequence_series_examples():
    s = sequence_series(preset("stern"), 0, 6)
    assert s.coeffs == (0, 1, 1, 2, 1, 3)
    t3 = sequence_series(preset("twisted"), 3, 5)
    assert t3.coeffs == (0, 1, 1, 0, -1)
    one = sequence_series(preset("stern"), 0, 1)
    assert one.coeffs == (0,)
    with pytest.raises(RangeError):
        sequence_series(preset("stern"), 0, 0)


def test_mul_monomials():
    x = monomial(1, 8)
    assert mul(x, x).coefficient(2) == 1
    assert mul(x, x).valuation() == 2


def test_compose_power_example():
    s8 = sequence_series(preset("stern"), 0, 8)
    s_sq = compose_power(s8, 2)
    assert s_sq.order == 16
    assert [s_sq.coefficient(j) for j in range(8)] == [0, 0, 1, 0, 1, 0, 2, 0]


def test_shift_negative():
    f = shift(from_coeffs([1, 1]), -1)
    assert f.val == -1
    assert f.coefficient(-1) == 1 and f.coefficient(0) == 1


def test_coefficient_bookkeeping():
    f = from_coeffs([5, 6], val=2)      # 5X^2 + 6X^3, sound below X^4
    assert f.coefficient(0) == 0        # below val: exactly zero
    with pytest.raises(RangeError):
        f.coefficient(4)                # beyond order: unknown, loud


def test_divide_examples():
    x = monomial(1, 6)
    q = divide(add(x, monomial(2, 6)), x)
    assert (q.coefficient(0), q.coefficient(1)) == (1, 1)

    num = sequence_series(preset("twisted"), 3, 8)
    den = sequence_series(preset("stern"), 0, 8)
    u = divide(num, den)
    assert u.coeffs[:4] == (1, 0, -2, 0)

    with pytest.raises(DivisionError):
        divide(from_coeffs([1, 1]), monomial(1, 2))   # valuation mismatch
    with pytest.raises(DivisionError):
        divide(from_coeffs([1]), from_coeffs([0, 0]))  # zero denominator
    with pytest.raises(DivisionError):
        divide(from_coeffs([1, 0]), from_coeffs([2, 0]))  # non-exact step


def test_mul_commutative_associative_distributive():
    rng = random.Random(4)
    for _ in range(40):
        f, g, h = (_random_series(rng) for _ in range(3))
        assert mul(f, g) == mul(g, f)
        assert first_mismatch(mul(mul(f, g), h), mul(f, mul(g, h))) is None
        assert first_mismatch(mul(f, add(g, h)), add(mul(f, g), mul(f, h))) is None


def test_divide_round_trips_mul():
    rng = random.Random(5)
    for _ in range(40):
        q = _random_series(rng, order=16, low=0)
        den_tail = tuple(rng.randint(-9, 9) for _ in range(15))
        den = LaurentSeries(0, (rng.choice((1, -1)),) + den_tail)
        back = divide(mul(q, den), den)
        assert first_mismatch(back, q) is None


def test_compose_power_laws():
    f = sequence_series(preset("stern"), 0, 12)
    assert compose_power(f, 1) == f
    assert compose_power(compose_power(f, 2), 2) == compose_power(f, 4)
    assert compose_power(f, 4).order == 48


def test_truncate_and_scale():
    f = sequence_series(preset("stern"), 0, 10)
    assert truncate(f, 4).coeffs == (0, 1, 1, 2)
    assert scale(f, -2).coefficient(3) == -4
    assert sub(f, f).valuation() is None


def test_check_carlitz():
    assert check_named("carlitz", order=1024).holds


def test_check_sum_s_no_negative_residue():
    report = check_named("sum_s", e_max=4, order=256)
    assert report.holds
    for residues in report.artifacts["negative_exponent_residues"].values():
        assert not any(residues)


def test_check_coons_lemma8_degree_15_polynomial():
    report = check_named("coons_lemma8", e_max=3)
    assert report.holds
    # at the top level both sides are X * (products), with coefficients
    # s(1..8) followed by the reflected s(7..1)
    s = STERN_TERMS
    expected = [0] + s[1:9] + [s[7 - i] for i in range(7)]
    lhs = monomial(1, 18)
    for i in range(3):
        factor = [0] * (2**(i + 1) + 1)
        factor[0] = 1
        factor[2**i] += 1
        factor[2**(i + 1)] += 1
        lhs = mul(lhs, from_coeffs(factor, order=18))
    assert [lhs.coefficient(j) for j in range(16)] == expected


def test_check_bconj1_artifacts():
    report = check_named("bconj1", e_max=5, order=256)
    assert report.holds
    assert report.artifacts["u_prefix"][:4] == (1, 0, -2, 0)


def test_check_bconj2_bconj3():
    assert check_named("bconj2", e_max=5, order=128).holds
    assert check_named("bconj3", e_max=5, order=128).holds


def test_check_machine_lines():
    report = check_named("bconj1", e_max=2, order=64)
    lines = report.machine_lines()
    assert lines[0] == "check=bconj1 e=0 holds=true order=64"
    assert len(lines) == 3


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        check_named("bogus")


def test_leveled_checks_reject_too_small_orders():
    with pytest.raises(RangeError):
        check_named("sum_s", e_max=8, order=64)
    with pytest.raises(RangeError):
        check_named("bconj1", e_max=8, order=64)


def test_first_mismatch_reports_smallest_exponent():
    f = from_coeffs([1, 2, 3])
    g = from_coeffs([1, 2, 4, 9])
    assert first_mismatch(f, g) == 2
    assert first_mismatch(f, from_coeffs([1, 2, 3, 7])) is None
