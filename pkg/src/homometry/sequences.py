"""Binary Dirac combs on Z: Rudin-Shapiro, Bernoulli, and Bernoullisation.

The Rudin-Shapiro chain is built from the four-letter substitution

    a -> ac,  b -> dc,  c -> ab,  d -> db

by iterating its square on the two-sided seed b.a and projecting letters to
signs (a, c -> +1; b, d -> -1).  It is deterministic with entropy 0, yet its
off-zero autocorrelations vanish in the limit, like a fair coin's.

Bernoullisation interpolates: flip each deterministic sign independently
with probability 1-p.  Off-zero autocorrelation coefficients scale by
(2p-1)^2, so a sequence with vanishing off-zero autocorrelation keeps the
same second-order statistics for every p while its entropy varies.

Randomness is counter-based (see :mod:`.rng`): the weight at index m is a
pure function of (seed, m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .rng import signs_at

SUBSTITUTION = {"a": "ac", "b": "dc", "c": "ab", "d": "db"}
LETTER_SIGN = {"a": 1, "b": -1, "c": 1, "d": -1}

_CODE = {ch: i for i, ch in enumerate("abcd")}
_SQUARED_IMAGES = None  # built lazily: (4, 4) int8 letter codes of sigma^2


@dataclass(frozen=True)
class RandomSpec:
    """Probability of +1 and the reproducibility seed."""

    p: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"probability p must lie in [0, 1], got {self.p}")


@dataclass(frozen=True, eq=False)
class WeightedComb:
    """Real weights on a contiguous window [lo, lo + len) of Z."""

    weights: np.ndarray
    lo: int

    def __post_init__(self):
        w = np.asarray(self.weights)
        object.__setattr__(self, "weights", w)
        w.setflags(write=False)

    @property
    def hi(self) -> int:
        return self.lo + len(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.lo, self.hi)

    def weight_at(self, i: int) -> float:
        if not self.lo <= i < self.hi:
            raise IndexError(f"index {i} outside window [{self.lo}, {self.hi})")
        return float(self.weights[i - self.lo])

    def is_binary(self) -> bool:
        return bool(np.all(np.abs(self.weights) == 1))


def rs_substitute(word: str) -> str:
    """One substitution step, images concatenated left to right."""
    try:
        return "".join(SUBSTITUTION[ch] for ch in word)
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} outside alphabet abcd") from None


def _squared_images() -> np.ndarray:
    global _SQUARED_IMAGES
    if _SQUARED_IMAGES is None:
        imgs = np.zeros((4, 4), dtype=np.int8)
        for ch, code in _CODE.items():
            imgs[code] = [_CODE[x] for x in rs_substitute(SUBSTITUTION[ch])]
        _SQUARED_IMAGES = imgs
    return _SQUARED_IMAGES


def _iterate_squared(seed_letter: str, min_len: int) -> np.ndarray:
    imgs = _squared_images()
    word = np.array([_CODE[seed_letter]], dtype=np.int8)
    while len(word) < min_len:
        word = imgs[word].reshape(-1)
    return word


def rs_fixed_point(n: int) -> WeightedComb:
    """Rudin-Shapiro ±1 weights on [-n, n).

    The right half extends the letter a (the squared substitution starts
    its image with a), the left half extends b (image ends with b); both
    halves are prefixes/suffixes of every later iterate, so the window is a
    restriction of the bi-infinite fixed point.
    """
    if n < 1:
        raise ValueError("window half-length must be at least 1")
    sign_of = np.array([LETTER_SIGN[ch] for ch in "abcd"], dtype=np.int8)
    right = _iterate_squared("a", n)[:n]
    left = _iterate_squared("b", n)[-n:]
    return WeightedComb(sign_of[np.concatenate([left, right])], lo=-n)


def bernoulli_comb(spec: RandomSpec, n: int) -> WeightedComb:
    """i.i.d. ±1 weights on [-n, n): +1 with probability p, keyed by index."""
    if n < 1:
        raise ValueError("window half-length must be at least 1")
    idx = np.arange(-n, n, dtype=np.int64)
    return WeightedComb(signs_at(spec.seed, spec.p, idx), lo=-n)


def bernoullise(comb: WeightedComb, spec: RandomSpec) -> WeightedComb:
    """Multiply each weight by an independent ±1 that is +1 with probability p.

    p = 1 returns the comb unchanged and p = 0 its negation, exactly.
    """
    if not comb.is_binary():
        raise ValueError("bernoullisation expects a binary (±1) comb")
    flips = signs_at(spec.seed, spec.p, comb.indices)
    return WeightedComb((comb.weights * flips).astype(np.int8), lo=comb.lo)


def theoretical_autocorr(
    kind: str,
    m: int,
    p: float | None = None,
    eta: Callable[[int], float] | None = None,
) -> float:
    """Limit autocorrelation coefficient at integer lag m.

    kind "bernoulli": (2p-1)^2 off zero.  kind "rs": 0 off zero.  kind
    "bernoullised": (2p-1)^2 * eta(m) with eta the base sequence's
    coefficient function (defaults to the Rudin-Shapiro one).
    """
    m = int(m)
    if m == 0:
        return 1.0
    if kind == "rs":
        return 0.0
    if p is None:
        raise ValueError(f"kind {kind!r} requires p")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    factor = (2.0 * p - 1.0) ** 2
    if kind == "bernoulli":
        return factor
    if kind == "bernoullised":
        base = eta if eta is not None else (lambda lag: 0.0 if lag else 1.0)
        return factor * base(m)
    raise ValueError(f"unknown kind {kind!r}")


def entropy(p: float) -> float:
    """Binary entropy -p ln p - (1-p) ln(1-p), with 0 ln 0 = 0."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    acc = 0.0
    for q in (p, 1.0 - p):
        if q > 0.0:
            acc -= q * math.log(q)
    return acc
