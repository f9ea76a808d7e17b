"""One diffraction image, every entropy between 0 and ln 2.

The Rudin-Shapiro sign sequence is deterministic (entropy 0) yet has the
flat diffraction of a fair coin.  Randomly flipping each sign with
probability 1-p scales off-zero autocorrelations by (2p-1)^2, which is 0
in this case for every p: one isospectral family sweeping the whole
entropy range.
"""

import math

import numpy as np

from homometry import (
    RandomSpec,
    bernoulli_comb,
    bernoullise,
    block_entropy,
    empirical_autocorr,
    entropy,
    periodogram_average,
    rs_fixed_point,
)

n = 1 << 20
rs = rs_fixed_point(n)
print("Rudin-Shapiro signs at 0..15:",
      "".join("+" if v > 0 else "-" for v in rs.weights[n:n + 16]))

print("\nempirical autocorrelations at N=2^20 (limit value 0):")
for m in (1, 2, 5, 16):
    print(f"  rs, lag {m}: {empirical_autocorr(rs, m).value:+.2e}")

coin = bernoulli_comb(RandomSpec(0.5, seed=1), n)
print(f"  fair coin, lag 1: {empirical_autocorr(coin, m=1).value:+.2e}")

print("\nbiased coin matches its law (2p-1)^2:")
for p in (0.25, 0.75):
    c = bernoulli_comb(RandomSpec(p, seed=2), n)
    print(f"  p={p}: lag-2 estimate {empirical_autocorr(c, 2).value:+.4f} "
          f"vs {(2 * p - 1) ** 2:.4f}")

print("\nbernoullised Rudin-Shapiro: same spectrum, growing disorder")
print(f"{'p':>5} {'pg average':>11} {'block entropy':>14} {'flip entropy':>13}")
for p in (1.0, 0.9, 0.75, 0.5):
    z = bernoullise(rs, RandomSpec(p, seed=2))
    avg = periodogram_average(z, 512)
    h = block_entropy(z, 10)
    print(f"{p:5.2f} {avg:11.4f} {h:14.4f} {entropy(p):13.4f}")
print(f"{'':>5} {'(flat = 1)':>11} {'(0 .. ln2)':>14} {'ln2 = %.4f' % math.log(2):>13}")
