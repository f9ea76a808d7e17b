"""Homometric structures and their verification.

Distinct structures can share identical second-order statistics: finite
point sets with equal difference multisets, polyominoes with equal
covariograms, planar model sets with equal diffraction intensities, and
stochastic sign sequences with equal autocorrelation but different entropy.
This package constructs the canonical examples of each kind and verifies
the coincidences both exactly and statistically.
"""

__version__ = "0.1.0"

from .pointsets import (
    DifferenceMultiset,
    FinitePointSet,
    IntPoint,
    are_homometric,
    canonical_pair,
    difference_multiset,
    transform,
)
from .covariogram import (
    Polyomino,
    canonical_polyominoes,
    covariogram,
    covariogram_grid,
    covariogram_oracle,
    covariogram_scaled,
    indicator_ft,
)
from .octagonal import (
    DEFAULT_WINDOW_SHIFT,
    SINGULAR,
    AdditivityWitness,
    Cyc8,
    HalfCyc8,
    ModelSetPatch,
    SchemeConfig,
    ThreePointWitness,
    WitnessNotFound,
    additivity_witness,
    amplitude_ratio,
    autocorr_coefficient,
    diffraction_amplitude,
    diffraction_intensity,
    embed_internal,
    embed_physical,
    find_three_point_witness,
    generate_model_set,
    lattice_density,
    mld_witness,
    phase,
    star,
    three_point_correlation,
)
from .sequences import (
    RandomSpec,
    WeightedComb,
    bernoulli_comb,
    bernoullise,
    entropy,
    rs_fixed_point,
    rs_substitute,
    theoretical_autocorr,
)
from .estimators import (
    AutocorrEstimate,
    PeriodogramBin,
    block_entropy,
    empirical_autocorr,
    periodogram,
    periodogram_average,
    periodogram_grid,
)
from .tensor import (
    MATERIALISE_CAP,
    GridComb,
    ProductComb,
    brute_force_autocorr,
    product_autocorr,
    product_comb,
    rank_k_bernoullise,
)

__all__ = [name for name in dir() if not name.startswith("_")]
