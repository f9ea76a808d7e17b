"""Shared fixtures: model-set patches and long combs are expensive, build once."""

import pytest

from homometry import (
    RandomSpec,
    SchemeConfig,
    bernoulli_comb,
    bernoullise,
    canonical_polyominoes,
    generate_model_set,
    rs_fixed_point,
)

RS_HALF_LENGTH = 1 << 20


@pytest.fixture(scope="session")
def schemes():
    p1, p2 = canonical_polyominoes()
    return SchemeConfig(p1), SchemeConfig(p2)


@pytest.fixture(scope="session")
def patch_families(schemes):
    s1, s2 = schemes
    radii = (40.0, 50.0, 60.0)
    return (
        {r: generate_model_set(s1, r) for r in radii},
        {r: generate_model_set(s2, r) for r in radii},
    )


@pytest.fixture(scope="session")
def rs_comb():
    return rs_fixed_point(RS_HALF_LENGTH)


@pytest.fixture(scope="session")
def bernoullised_rs(rs_comb):
    def build(p: float, seed: int):
        return bernoullise(rs_comb, RandomSpec(p, seed))

    return build


@pytest.fixture(scope="session")
def bernoulli_builder():
    def build(p: float, seed: int, n: int = RS_HALF_LENGTH):
        return bernoulli_comb(RandomSpec(p, seed), n)

    return build
