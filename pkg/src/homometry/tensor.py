"""Product combs on Z^d and rank-k Bernoullisation.

A product comb carries the weight  prod_l U^(l)_{x_l}  at the point x, so
its autocorrelation factorises into the 1-d autocorrelations of the
factors; the brute-force d-dimensional sum over matching zero-padded
windows equals the product of per-axis sums exactly (it is a separable
integer identity).  Rank-k Bernoullisation flips signs with an i.i.d.
family indexed by the first k coordinates only, which randomises those
axes while leaving cross-sections along the remaining axes deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .estimators import empirical_autocorr
from .rng import signs_at
from .sequences import RandomSpec, WeightedComb

#: Largest number of weights that will be materialised as a dense array.
MATERIALISE_CAP = 1 << 24


@dataclass(frozen=True, eq=False)
class GridComb:
    """Dense ±1 weights on a box prod_l [lo_l, lo_l + shape_l) in Z^d."""

    weights: np.ndarray
    los: tuple[int, ...]

    def __post_init__(self):
        w = np.asarray(self.weights)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "los", tuple(int(v) for v in self.los))
        if w.ndim != len(self.los):
            raise ValueError("one origin offset required per axis")
        w.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.weights.ndim

    def line(self, axis: int, at: tuple[int, ...]) -> WeightedComb:
        """Extract the 1-d comb along ``axis`` through the lattice point ``at``.

        ``at`` gives the fixed lattice coordinates of the other axes, in
        axis order with ``axis`` omitted.
        """
        if not 0 <= axis < self.dim:
            raise ValueError(f"axis {axis} out of range for dimension {self.dim}")
        if len(at) != self.dim - 1:
            raise ValueError("need one fixed coordinate per remaining axis")
        index: list = []
        others = [ax for ax in range(self.dim) if ax != axis]
        for ax, coord in zip(others, at):
            offset = int(coord) - self.los[ax]
            if not 0 <= offset < self.weights.shape[ax]:
                raise IndexError(f"coordinate {coord} outside axis-{ax} window")
            index.append(offset)
        slicer = list(index)
        slicer.insert(axis, slice(None))
        return WeightedComb(np.ascontiguousarray(self.weights[tuple(slicer)]), lo=self.los[axis])


@dataclass(frozen=True, eq=False)
class ProductComb(GridComb):
    """GridComb whose weights factorise over per-axis combs by construction."""

    factors: tuple[WeightedComb, ...] = ()


def product_comb(factors) -> ProductComb:
    """Materialise the tensor-product comb of 1-d binary factors.

    Boxes beyond :data:`MATERIALISE_CAP` weights refuse to materialise;
    use :func:`product_autocorr`, which stays factorised, at any size.
    """
    factors = tuple(factors)
    if not factors:
        raise ValueError("at least one factor required")
    for f in factors:
        if not f.is_binary():
            raise ValueError("product combs require binary (±1) factors")
    total = math.prod(len(f) for f in factors)
    if total > MATERIALISE_CAP:
        raise ValueError(
            f"box of {total} weights exceeds materialisation cap {MATERIALISE_CAP}; "
            "use product_autocorr for lazy evaluation"
        )
    weights = reduce(np.multiply.outer, (f.weights for f in factors))
    return ProductComb(weights.astype(np.int8), tuple(f.lo for f in factors), factors)


def product_autocorr(factors, m) -> float:
    """Factorised autocorrelation: product of per-axis estimates at lag m."""
    factors = tuple(factors)
    m = tuple(int(v) for v in m)
    if len(m) != len(factors):
        raise ValueError("one lag component required per factor")
    value = 1.0
    for f, lag in zip(factors, m):
        value *= empirical_autocorr(f, lag).value
    return value


def _shifted_sum(weights: np.ndarray, m: tuple[int, ...]) -> int:
    """Exact integer sum of w[x] * w[x - m] over the box, zero-padded."""
    src = []
    dst = []
    for lag, size in zip(m, weights.shape):
        if abs(lag) >= size:
            return 0
        if lag >= 0:
            src.append(slice(lag, size))
            dst.append(slice(0, size - lag))
        else:
            src.append(slice(0, size + lag))
            dst.append(slice(-lag, size))
    a = weights[tuple(src)].astype(np.int64)
    b = weights[tuple(dst)].astype(np.int64)
    return int((a * b).sum())


def brute_force_autocorr(comb: GridComb, m) -> float:
    """Direct d-dimensional autocorrelation of materialised weights at lag m."""
    m = tuple(int(v) for v in m)
    if len(m) != comb.dim:
        raise ValueError("one lag component required per axis")
    return _shifted_sum(comb.weights, m) / comb.weights.size


def rank_k_bernoullise(base: GridComb, k: int, spec: RandomSpec) -> GridComb:
    """Flip signs with an i.i.d. ±1 family indexed by the first k coordinates.

    k = 0 is the identity; k = d flips every site independently.  With the
    same seed, k = d = 1 coincides with 1-d Bernoullisation of the single
    factor.  Intermediate k randomises the leading axes while every line
    along a trailing axis stays deterministic up to one overall sign.
    """
    if not 0 <= k <= base.dim:
        raise ValueError(f"rank {k} out of range 0..{base.dim}")
    if k == 0:
        return GridComb(base.weights, base.los)
    lead_shape = base.weights.shape[:k]
    # open grids broadcast inside the hash, so only the final array is dense
    axes = []
    for axis, (lo, size) in enumerate(zip(base.los, lead_shape)):
        shape = [1] * k
        shape[axis] = size
        axes.append(np.arange(lo, lo + size, dtype=np.int64).reshape(shape))
    flips = np.broadcast_to(signs_at(spec.seed, spec.p, *axes), lead_shape)
    flips = flips.reshape(lead_shape + (1,) * (base.dim - k))
    return GridComb((base.weights * flips).astype(np.int8), base.los)
