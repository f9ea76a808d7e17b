"""Product combs: exact factorisation and rank-k sign flips."""

import math

import numpy as np
import pytest

from homometry import (
    MATERIALISE_CAP,
    RandomSpec,
    bernoulli_comb,
    bernoullise,
    block_entropy,
    brute_force_autocorr,
    empirical_autocorr,
    product_autocorr,
    product_comb,
    rank_k_bernoullise,
    rs_fixed_point,
)


def test_single_factor_product_is_the_factor():
    base = rs_fixed_point(64)
    prod = product_comb([base])
    assert np.array_equal(prod.weights, base.weights)
    assert prod.los == (-64,)


def test_weights_factorise():
    rs = rs_fixed_point(16)
    prod = product_comb([rs, rs])
    # weight at (3, 6) is the product of the 1-d signs at 3 and 6
    w = prod.weights[3 - prod.los[0], 6 - prod.los[1]]
    assert w == rs.weight_at(3) * rs.weight_at(6) == 1
    assert rs.weight_at(3) == -1 and rs.weight_at(6) == -1


def test_all_ones_product():
    ones = bernoulli_comb(RandomSpec(1.0, seed=0), 8)
    prod = product_comb([ones, ones])
    assert np.all(prod.weights == 1)


def test_empty_factor_list_rejected():
    with pytest.raises(ValueError):
        product_comb([])


def test_materialisation_cap():
    big = rs_fixed_point(1 << 13)  # 2^14 per axis, 2^28 total
    with pytest.raises(ValueError, match="cap"):
        product_comb([big, big])
    # the factorised path still works at any size
    assert product_autocorr([big, big], (1, 0)) == pytest.approx(
        empirical_autocorr(big, 1).value * empirical_autocorr(big, 0).value
    )
    assert (1 << 28) > MATERIALISE_CAP


def test_brute_force_equals_factorised_exactly():
    # power-of-two windows make both divisions exact, so the comparison is
    # bit-for-bit, not approximate
    rs = rs_fixed_point(128)
    prod = product_comb([rs, rs])
    for m in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 3), (-5, 7), (16, -9)]:
        assert brute_force_autocorr(prod, m) == product_autocorr([rs, rs], m)


def test_brute_force_mixed_factors():
    rs = rs_fixed_point(128)
    coin = bernoulli_comb(RandomSpec(0.75, seed=5), 128)
    prod = product_comb([rs, coin])
    for m in [(1, 0), (3, 2), (0, 4)]:
        assert brute_force_autocorr(prod, m) == product_autocorr([rs, coin], m)


def test_product_autocorr_at_zero(bernoulli_builder):
    coin = bernoulli_builder(0.5, seed=8, n=256)
    assert product_autocorr([coin, coin], (0, 0)) == 1.0


def test_bernoulli_times_ones_factor_law():
    coin = bernoulli_comb(RandomSpec(0.75, seed=12), 1 << 19)
    ones = bernoulli_comb(RandomSpec(1.0, seed=0), 1 << 19)
    value = product_autocorr([coin, ones], (2, 3))
    sigma = 3.0 / math.sqrt(len(coin))
    assert abs(value - 0.25) <= sigma


def test_rank_zero_is_identity():
    prod = product_comb([rs_fixed_point(32), rs_fixed_point(32)])
    same = rank_k_bernoullise(prod, 0, RandomSpec(0.5, seed=1))
    assert np.array_equal(same.weights, prod.weights)


def test_rank_one_in_one_dimension_matches_bernoullise():
    base = rs_fixed_point(512)
    spec = RandomSpec(0.3, seed=44)
    via_tensor = rank_k_bernoullise(product_comb([base]), 1, spec)
    via_sequence = bernoullise(base, spec)
    assert np.array_equal(via_tensor.weights, via_sequence.weights)


def test_rank_out_of_range():
    prod = product_comb([rs_fixed_point(8), rs_fixed_point(8)])
    with pytest.raises(ValueError):
        rank_k_bernoullise(prod, 3, RandomSpec(0.5, seed=0))


def test_rank_one_kills_correlations_but_keeps_one_axis_deterministic():
    rs = rs_fixed_point(1 << 11)
    short = rs_fixed_point(1 << 5)
    prod = product_comb([rs, short])
    flipped = rank_k_bernoullise(prod, 1, RandomSpec(0.5, seed=2))
    sigma = 3.0 / math.sqrt(flipped.weights.size)
    for m in [(1, 0), (2, 2), (5, 3), (1, 7)]:
        assert abs(brute_force_autocorr(flipped, m)) <= sigma
    # when the flipped coordinate does not shift, the flips cancel in pairs
    # and the lag reduces exactly to the deterministic per-axis estimate
    assert brute_force_autocorr(flipped, (0, 1)) == empirical_autocorr(short, 1).value
    # along the second axis each line is still (a global sign times) the
    # deterministic factor
    line = flipped.line(1, (7,))
    assert np.array_equal(np.abs(line.weights), np.abs(short.weights))
    sign = line.weights[0] * short.weights[0]
    assert np.array_equal(line.weights, sign * short.weights)


def test_line_extraction_and_validation():
    prod = product_comb([rs_fixed_point(8), rs_fixed_point(4)])
    line0 = prod.line(0, (1,))
    assert line0.lo == -8 and len(line0) == 16
    expected = prod.weights[:, 1 - prod.los[1]]
    assert np.array_equal(line0.weights, expected)
    with pytest.raises(IndexError):
        prod.line(0, (99,))
    with pytest.raises(ValueError):
        prod.line(2, (0,))
    with pytest.raises(ValueError):
        prod.line(0, (0, 0))


def test_rank_one_per_axis_entropies():
    # long axis bernoullised: entropy like a fair coin; short axis lines
    # stay deterministic: entropy like the substitution sequence
    long_rs = rs_fixed_point(1 << 16)
    short_rs = rs_fixed_point(1 << 6)

    box_a = rank_k_bernoullise(product_comb([long_rs, short_rs]), 1, RandomSpec(0.5, seed=3))
    noisy_line = box_a.line(0, (5,))
    assert block_entropy(noisy_line, 10) == pytest.approx(math.log(2), rel=0.05)

    box_b = rank_k_bernoullise(product_comb([short_rs, long_rs]), 1, RandomSpec(0.5, seed=3))
    clean_line = box_b.line(1, (5,))
    assert block_entropy(clean_line, 10) <= 0.18
