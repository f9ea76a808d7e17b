"""Substitution sequence, stochastic combs, and exact limit laws."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homometry import (
    RandomSpec,
    WeightedComb,
    bernoulli_comb,
    bernoullise,
    entropy,
    rs_fixed_point,
    rs_substitute,
    theoretical_autocorr,
)


def rs_sign_oracle(n: int) -> int:
    """Digit-pair oracle for the two-sided chain, independent of substitution.

    For n >= 0 the sign is (-1)^(number of overlapping 11 pairs in binary n).
    The left half satisfies s(-1-k) = -(-1)^k s(k), giving the closed form
    below for n < 0.
    """
    if n >= 0:
        return -1 if (n & (n >> 1)).bit_count() % 2 else 1
    k = -n - 1
    return -1 if (k + (k & (k >> 1)).bit_count()) % 2 == 0 else 1


def test_substitution_images():
    assert rs_substitute("a") == "ac"
    assert rs_substitute("b") == "dc"
    assert rs_substitute("c") == "ab"
    assert rs_substitute("d") == "db"
    assert rs_substitute("ba") == "dcac"
    assert rs_substitute("") == ""
    with pytest.raises(ValueError):
        rs_substitute("ax")


def test_fixed_point_first_signs():
    comb = rs_fixed_point(8)
    assert comb.lo == -8 and comb.hi == 8
    assert list(comb.weights[8:16]) == [1, 1, 1, -1, 1, 1, -1, 1]
    assert comb.weight_at(-1) == -1


def test_fixed_point_matches_oracle_both_sides():
    n = 1 << 12
    comb = rs_fixed_point(n)
    expected = np.array([rs_sign_oracle(i) for i in range(-n, n)], dtype=np.int8)
    assert np.array_equal(comb.weights, expected)


def test_fixed_point_is_prefix_consistent():
    small = rs_fixed_point(64)
    large = rs_fixed_point(128)
    assert np.array_equal(large.weights[64:192], small.weights)


def test_fixed_point_is_deterministic():
    a = rs_fixed_point(256)
    b = rs_fixed_point(256)
    assert np.array_equal(a.weights, b.weights)


def test_bernoulli_endpoints():
    n = 512
    assert np.all(bernoulli_comb(RandomSpec(1.0, seed=7), n).weights == 1)
    assert np.all(bernoulli_comb(RandomSpec(0.0, seed=7), n).weights == -1)


def test_bernoulli_mean_near_zero():
    n = 1 << 20
    comb = bernoulli_comb(RandomSpec(0.5, seed=42), n)
    mean = comb.weights.astype(np.float64).mean()
    assert abs(mean) <= 3.0 / math.sqrt(2 * n)


def test_bernoulli_is_a_pure_function_of_seed_and_index():
    small = bernoulli_comb(RandomSpec(0.3, seed=5), 64)
    large = bernoulli_comb(RandomSpec(0.3, seed=5), 256)
    assert np.array_equal(large.weights[192:320], small.weights)
    again = bernoulli_comb(RandomSpec(0.3, seed=5), 64)
    assert np.array_equal(small.weights, again.weights)
    other = bernoulli_comb(RandomSpec(0.3, seed=6), 64)
    assert not np.array_equal(small.weights, other.weights)


def test_bernoullise_endpoints():
    base = rs_fixed_point(256)
    kept = bernoullise(base, RandomSpec(1.0, seed=3))
    assert np.array_equal(kept.weights, base.weights)
    flipped = bernoullise(base, RandomSpec(0.0, seed=3))
    assert np.array_equal(flipped.weights, -base.weights)


def test_bernoullise_requires_binary_weights():
    comb = WeightedComb(np.array([0.5, 1.0, -1.0]), lo=0)
    with pytest.raises(ValueError):
        bernoullise(comb, RandomSpec(0.5, seed=1))


def test_random_spec_validation():
    with pytest.raises(ValueError):
        RandomSpec(1.5, seed=0)


@given(
    st.integers(min_value=1, max_value=200),
    st.integers(min_value=-8, max_value=8).filter(lambda m: m != 0),
    st.randoms(use_true_random=False),
)
@settings(max_examples=100, deadline=None)
def test_sign_pair_splitting_identity(length, m, rnd):
    # decomposing the lag sum by the sign pair of the deterministic factors
    # recombines exactly: an integer identity, no averaging involved
    s = np.array([rnd.choice((-1, 1)) for _ in range(length)], dtype=np.int64)
    y = np.array([rnd.choice((-1, 1)) for _ in range(length)], dtype=np.int64)
    z = s * y
    k = abs(m)
    if k >= length:
        return
    zz = int(np.dot(z[k:], z[:-k]))
    si, sj = s[k:], s[:-k]
    yy = y[k:] * y[:-k]
    plus_plus = int(yy[(si == 1) & (sj == 1)].sum())
    minus_minus = int(yy[(si == -1) & (sj == -1)].sum())
    plus_minus = int(yy[(si == 1) & (sj == -1)].sum())
    minus_plus = int(yy[(si == -1) & (sj == 1)].sum())
    assert zz == plus_plus + minus_minus - plus_minus - minus_plus


def test_theoretical_autocorr():
    assert theoretical_autocorr("bernoulli", 0, p=0.1) == 1.0
    assert theoretical_autocorr("bernoulli", 3, p=0.5) == 0.0
    assert theoretical_autocorr("bernoulli", 2, p=0.75) == pytest.approx(0.25)
    assert theoretical_autocorr("rs", 7) == 0.0
    assert theoretical_autocorr("rs", 0) == 1.0
    assert theoretical_autocorr("bernoullised", 5, p=0.75) == 0.0
    eta = lambda m: 0.5 if m == 5 else 0.0
    assert theoretical_autocorr("bernoullised", 5, p=0.75, eta=eta) == pytest.approx(0.125)
    with pytest.raises(ValueError):
        theoretical_autocorr("bernoulli", 1)
    with pytest.raises(ValueError):
        theoretical_autocorr("nope", 1, p=0.5)


def test_entropy_function():
    assert entropy(0.0) == 0.0
    assert entropy(1.0) == 0.0
    assert entropy(0.5) == pytest.approx(math.log(2), abs=1e-15)
    assert entropy(0.25) == pytest.approx(0.562335, abs=1e-6)
    assert entropy(0.25) == entropy(0.75)
    with pytest.raises(ValueError):
        entropy(-0.1)
    with pytest.raises(ValueError):
        entropy(1.1)


def test_weighted_comb_window_access():
    comb = rs_fixed_point(4)
    assert len(comb) == 8
    assert comb.is_binary()
    with pytest.raises(IndexError):
        comb.weight_at(4)
    with pytest.raises(IndexError):
        comb.weight_at(-5)
