"""Binomials and truncated series, checked against independent oracles."""

import random

import pytest

from quadchow import TruncatedSeries, binom_exact, binom_mod2


def product_loop_binom(a, k):
    """Independent oracle: numerator product divided by k! at the end."""
    num = 1
    for i in range(k):
        num *= a - i
    den = 1
    for i in range(1, k + 1):
        den *= i
    assert num % den == 0
    return num // den


def test_binom_exact_examples():
    assert binom_exact(13, 5) == 1287
    assert binom_exact(13, 5) % 2 == 1
    for k in (-7, -1, 0, 3, 100):
        assert binom_exact(k, 0) == 1
    assert binom_exact(-9, 3) == -165
    assert binom_exact(-9, 3) == product_loop_binom(-9, 3)


def test_binom_exact_matches_product_loop():
    for a in range(-20, 21):
        for k in range(0, 12):
            assert binom_exact(a, k) == product_loop_binom(a, k), (a, k)


def test_binom_exact_rejects_negative_lower():
    with pytest.raises(ValueError):
        binom_exact(5, -1)


def test_pascal_recurrence():
    for a in range(-15, 16):
        for k in range(1, 12):
            assert binom_exact(a, k) == binom_exact(a - 1, k) + binom_exact(a - 1, k - 1)


def test_reflection_identity():
    for a in range(1, 15):
        for k in range(0, 12):
            assert binom_exact(-a, k) == (-1) ** k * binom_exact(a + k - 1, k)


def test_binom_mod2_examples():
    assert binom_mod2(5, 2) == 0  # binom(5,2) = 10
    for t in range(1, 7):
        d = 2**t - 1
        for i in range(d + 1):
            assert binom_mod2(d, i) == 1
    assert binom_mod2(-5, 1) == 1  # binom(-5,1) = -5


def test_lucas_agrees_with_exact_oracle():
    for a in range(0, 65):
        for k in range(0, 65):
            assert binom_mod2(a, k) == binom_exact(a, k) % 2, (a, k)
    for a in range(-33, 0):
        for k in range(0, 33):
            assert binom_mod2(a, k) == binom_exact(a, k) % 2, (a, k)


def test_series_mul_examples():
    s1 = TruncatedSeries.from_list(2, [1, 1])
    s2 = TruncatedSeries.from_list(2, [1, -1])
    assert (s1 * s2).coeffs == (1, 0, -1)
    s = TruncatedSeries.from_list(1, [1, 1])
    assert (s * s).coeffs == (1, 2)
    a = TruncatedSeries.from_list(2, [1, 2])
    b = TruncatedSeries.from_list(2, [1, -5, 15])
    assert (a * b).coeffs == (1, -3, 5)


def test_series_mul_rejects_mismatched_bounds():
    with pytest.raises(ValueError):
        TruncatedSeries.from_list(2, [1]).mul(TruncatedSeries.from_list(3, [1]))


def test_series_inverse_examples():
    one = TruncatedSeries.one(4)
    assert one.inverse() == one
    geo = TruncatedSeries.from_list(3, [1, 1]).inverse()
    assert geo.coeffs == (1, -1, 1, -1)
    fifth = TruncatedSeries.from_list(2, [1, 1]).pow(5).inverse()
    assert fifth.coeffs == (1, -5, 15)
    assert fifth.coeffs == tuple(binom_exact(-5, i) for i in range(3))


def test_series_inverse_requires_unit_constant():
    with pytest.raises(ValueError):
        TruncatedSeries.from_list(2, [2, 1]).inverse()


def test_random_unit_series_roundtrip():
    rng = random.Random(17)
    for _ in range(100):
        bound = rng.randint(0, 16)
        coeffs = [1] + [rng.randint(-9, 9) for _ in range(bound)]
        s = TruncatedSeries.from_list(bound, coeffs)
        assert s.mul(s.inverse()) == TruncatedSeries.one(bound)
