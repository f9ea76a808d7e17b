"""Covariogram closed form against geometry oracles."""

import numpy as np
import pytest

from homometry import (
    Polyomino,
    canonical_polyominoes,
    covariogram,
    covariogram_grid,
    covariogram_oracle,
    covariogram_scaled,
    indicator_ft,
)
from homometry.covariogram import support_box

P1, P2 = canonical_polyominoes()
UNIT = Polyomino.from_cells([(0, 0)])


def test_value_at_origin_is_area():
    assert covariogram(P1, (0.0, 0.0)) == 15.0
    assert covariogram(P2, (0.0, 0.0)) == 15.0
    assert covariogram(UNIT, (0.0, 0.0)) == 1.0


def test_far_translates_do_not_overlap():
    assert covariogram(P1, (100.0, 0.0)) == 0.0
    assert covariogram(P1, (0.0, -50.0)) == 0.0


def test_windows_share_the_covariogram():
    xs = np.linspace(-6, 6, 25)
    g1 = covariogram_grid(P1, xs, xs)
    g2 = covariogram_grid(P2, xs, xs)
    assert np.abs(g1 - g2).max() <= 1e-12


def test_central_symmetry_and_maximum():
    rng = np.random.default_rng(5)
    for _ in range(50):
        x = rng.uniform(-6, 6, 2)
        v = covariogram(P1, x)
        assert v == pytest.approx(covariogram(P1, -x), abs=1e-12)
        assert v <= 15.0


def test_support_is_contained_in_difference_box():
    lo_x, hi_x, lo_y, hi_y = support_box(P1)
    assert (lo_x, hi_x, lo_y, hi_y) == (-5.0, 5.0, -6.0, 6.0)
    for x in [(5.5, 0.0), (0.0, 6.5), (-5.1, -6.1)]:
        assert covariogram(P1, x) == 0.0


def test_grid_matches_pointwise():
    xs = np.array([-1.5, 0.0, 2.25])
    ys = np.array([0.5, 3.0])
    grid = covariogram_grid(P1, xs, ys)
    for i, xv in enumerate(xs):
        for j, yv in enumerate(ys):
            assert grid[i, j] == pytest.approx(covariogram(P1, (xv, yv)), abs=1e-12)


def test_scaling():
    assert covariogram_scaled(P1, 1.0, (0.3, -0.7)) == pytest.approx(covariogram(P1, (0.3, -0.7)))
    assert covariogram_scaled(P1, 2.0, (0.0, 0.0)) == pytest.approx(60.0)
    with pytest.raises(ValueError, match="degenerate scaling"):
        covariogram_scaled(P1, 0.0, (1.0, 1.0))


def test_scaled_windows_stay_homometric():
    rng = np.random.default_rng(11)
    for alpha in (0.5, 1.7, np.sqrt(2.0)):
        for _ in range(25):
            x = rng.uniform(-10, 10, 2)
            v1 = covariogram_scaled(P1, alpha, x)
            v2 = covariogram_scaled(P2, alpha, x)
            assert abs(v1 - v2) <= 1e-12


def test_indicator_ft_examples():
    assert indicator_ft(P1, (0.0, 0.0)) == pytest.approx(15.0 + 0.0j)
    assert abs(indicator_ft(P1, (1.0, 0.0))) == pytest.approx(0.0, abs=1e-12)
    assert abs(indicator_ft(UNIT, (0.0, 1.0))) == pytest.approx(0.0, abs=1e-12)


def test_squared_modulus_agrees_between_windows():
    rng = np.random.default_rng(3)
    for _ in range(100):
        k = rng.uniform(-4, 4, 2)
        m1 = abs(indicator_ft(P1, k)) ** 2
        m2 = abs(indicator_ft(P2, k)) ** 2
        assert m1 == pytest.approx(m2, abs=1e-10)


def test_amplitudes_themselves_differ():
    diffs = []
    rng = np.random.default_rng(4)
    for _ in range(50):
        k = rng.uniform(-2, 2, 2)
        diffs.append(abs(indicator_ft(P1, k) - indicator_ft(P2, k)))
    assert max(diffs) > 0.5


def test_oracle_exact_cases():
    assert covariogram_oracle(P1, (0.0, 0.0), 64) == 15.0
    assert covariogram_oracle(UNIT, (0.5, 0.0), 256) == pytest.approx(0.5, abs=0.02)


def test_oracle_agrees_with_closed_form():
    rng = np.random.default_rng(777)
    lo_x, hi_x, lo_y, hi_y = support_box(P1)
    for _ in range(10):
        x = rng.uniform([lo_x, lo_y], [hi_x, hi_y])
        closed = covariogram(P1, x)
        approx = covariogram_oracle(P1, x, 256)
        assert abs(closed - approx) <= 0.05


def test_oracle_resolution_validation():
    with pytest.raises(ValueError):
        covariogram_oracle(P1, (0.0, 0.0), 8)


def test_fourier_identity_by_riemann_sum():
    # integral of |ft|^2 over a large box approximates cov(0); the error is
    # dominated by the 1/|k|^2 tail outside the box
    k = np.arange(-16, 16, 1 / 16) + 1 / 32
    kx, ky = np.meshgrid(k, k, indexing="ij")
    envelope = (np.sinc(kx) * np.sinc(ky)) ** 2
    from homometry.covariogram import _diff_arrays

    zs, mult = _diff_arrays(P1)
    acc = np.zeros_like(kx)
    for (zx, zy), m in zip(zs, mult):
        acc += m * np.cos(2 * np.pi * (kx * zx + ky * zy))
    integral = float((envelope * acc).sum()) / 16**2
    assert integral == pytest.approx(15.0, abs=0.15)


def test_polyomino_validation():
    with pytest.raises(ValueError):
        Polyomino.from_cells([])
