"""Finite-size estimators shared by all combs.

These check limit statements at desk scale: empirical autocorrelation
coefficients against their exact limits, periodograms against diffraction
densities, and block entropies against entropy rates.

Conventions.  Autocorrelation sums are normalised by the window length (the
2N+1 of a symmetric odd window), so a ±1 comb has coefficient exactly 1 at
lag 0 and the full-grid periodogram average reproduces it exactly
(Parseval).  Indices outside the window contribute 0, giving an O(m/N) edge
bias at lag m.  The periodogram is |sum w_n e^{-2πikn}|² / length; Bragg
components show up as bins growing linearly with the window, absolutely
continuous components as O(1) bins, so tests compare bin averages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sequences import WeightedComb


@dataclass(frozen=True)
class AutocorrEstimate:
    m: int
    value: float
    N: int


@dataclass(frozen=True)
class PeriodogramBin:
    k: float
    value: float


def empirical_autocorr(comb: WeightedComb, m: int) -> AutocorrEstimate:
    """Windowed autocorrelation sum at integer lag m, zero-padded outside."""
    m = int(m)
    length = len(comb)
    if abs(m) >= length:
        raise ValueError(f"lag {m} outside window of length {length}")
    w = comb.weights.astype(np.float64)
    k = abs(m)
    total = float(np.dot(w[k:], w[: length - k])) if k else float(np.dot(w, w))
    return AutocorrEstimate(m=m, value=total / length, N=length // 2)


def autocorr_sweep(comb: WeightedComb, lags) -> list[AutocorrEstimate]:
    return [empirical_autocorr(comb, m) for m in lags]


def periodogram(comb: WeightedComb, k: float) -> PeriodogramBin:
    """Intensity density estimate |sum_n w_n e^{-2πikn}|² / window length."""
    idx = comb.indices
    amp = np.exp(-2j * np.pi * float(k) * idx) @ comb.weights.astype(np.float64)
    return PeriodogramBin(k=float(k), value=float(abs(amp) ** 2 / len(comb)))


def periodogram_grid(comb: WeightedComb, nbins: int) -> np.ndarray:
    """Periodogram at the nbins frequencies j/nbins, j = 0..nbins-1.

    Because e^{-2πi j n / nbins} depends on n only mod nbins, weights are
    folded into nbins residue bins and a single FFT gives exactly the
    pointwise values.
    """
    if nbins < 1:
        raise ValueError("nbins must be positive")
    folded = np.zeros(nbins, dtype=np.float64)
    np.add.at(folded, np.mod(comb.indices, nbins), comb.weights.astype(np.float64))
    return np.abs(np.fft.fft(folded)) ** 2 / len(comb)


def periodogram_average(comb: WeightedComb, nbins: int = 512) -> float:
    """Mean periodogram over the uniform nbins frequency grid on [0, 1)."""
    return float(periodogram_grid(comb, nbins).mean())


def _block_counts(weights: np.ndarray, L: int) -> np.ndarray:
    bits = (weights > 0).astype(np.int64)
    kernel = (1 << np.arange(L, dtype=np.int64))
    codes = np.convolve(bits, kernel, mode="valid")
    _, counts = np.unique(codes, return_counts=True)
    return counts


def _plugin_entropy(counts: np.ndarray) -> float:
    freq = counts / counts.sum()
    return float(-(freq * np.log(freq)).sum())


def block_entropy(comb: WeightedComb, L: int) -> float:
    """Entropy-rate estimate from overlapping length-L sign blocks (nats).

    Returns the conditional block entropy H_L - H_{L-1}, i.e. the entropy
    of the L-th symbol given the preceding L-1.  For i.i.d. fair signs this
    is ln 2 at every L; for a deterministic sequence of linear block-count
    growth it decays towards 0.  Requires a window of at least 100 * 2^L
    samples so most admissible blocks are observed.
    """
    L = int(L)
    if not 1 <= L <= 20:
        raise ValueError("block length must lie in 1..20")
    if len(comb) < (1 << L) * 100:
        raise ValueError(
            f"window too short for L={L}: need at least {(1 << L) * 100} samples"
        )
    if not comb.is_binary():
        raise ValueError("block entropy expects a binary (±1) comb")
    h_L = _plugin_entropy(_block_counts(comb.weights, L))
    if L == 1:
        return h_L
    return h_L - _plugin_entropy(_block_counts(comb.weights, L - 1))
