"""Counter-based random number generation.

Every random weight in this package is a pure function of ``(seed, index)``,
where the index may be a lattice point in any dimension.  This makes window
extension, re-runs and per-index parallel generation reproducible: drawing a
value never consumes hidden generator state.

The mixer is SplitMix64, applied once to the seed and then once per index
coordinate (xor-folded in).  Output quality is more than sufficient for the
statistical assertions made here, and the function is trivially vectorised.
"""

from __future__ import annotations

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MULT1 = np.uint64(0xBF58476D1CE4E5B9)
_MULT2 = np.uint64(0x94D049BB133111EB)


def _mix(v):
    """SplitMix64 finaliser (operates on uint64 scalars or arrays)."""
    with np.errstate(over="ignore"):
        v = v + _GOLDEN
        v = (v ^ (v >> np.uint64(30))) * _MULT1
        v = (v ^ (v >> np.uint64(27))) * _MULT2
        return v ^ (v >> np.uint64(31))


def _as_u64(indices) -> np.ndarray:
    arr = np.asarray(indices, dtype=np.int64)
    return arr.view(np.uint64)


def uniform_at(seed: int, *index_coords) -> np.ndarray:
    """Uniform [0, 1) variates addressed by lattice index.

    ``index_coords`` are one or more equal-shaped integer arrays, one per
    coordinate of the index.  A single coordinate reproduces the 1-d stream;
    multi-coordinate indices fold coordinates in order, so the d-dimensional
    family restricted to one axis is again a counter-based 1-d family.
    """
    if not index_coords:
        raise ValueError("at least one index coordinate required")
    state = _mix(np.uint64(int(seed) & 0xFFFFFFFFFFFFFFFF))
    for coords in index_coords:
        state = _mix(_as_u64(coords) ^ state)
    return (state >> np.uint64(11)).astype(np.float64) * 2.0**-53


def signs_at(seed: int, p: float, *index_coords) -> np.ndarray:
    """+1 with probability ``p``, else -1, indexed like :func:`uniform_at`.

    ``p = 1`` gives all +1 and ``p = 0`` all -1 exactly, since uniforms
    live in the half-open unit interval.
    """
    u = uniform_at(seed, *index_coords)
    return np.where(u < p, 1, -1).astype(np.int8)
