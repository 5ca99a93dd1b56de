"""Spectral views of a harmonic signal and the coarse frequency start.

Compares the plain periodogram I(lambda) with the harmonic criterion
Q_N(lambda), and shows why the grid initializer defaults to the harmonic
sum: when one harmonic dominates, the plain periodogram peaks at that
harmonic instead of the fundamental.
"""

import math

import numpy as np

from fundfreq import (
    HarmonicModel,
    LinearProcessSpec,
    fourier_grid,
    fourier_grid_init,
    harmonic_criterion_qn,
    periodogram,
    synthesize,
)
from fundfreq.montecarlo import MODEL1

sig = synthesize(MODEL1, n=500, noise=LinearProcessSpec((1.0, 0.5), 0.25), seed=3)

# Periodogram peaks appear at every harmonic j * 0.25.
lams = np.linspace(0.05, 1.2, 1200)
i_vals = np.array([periodogram(sig, lam) for lam in lams])
for j in range(1, 5):
    near = (lams > 0.25 * j - 0.04) & (lams < 0.25 * j + 0.04)
    peak = lams[near][np.argmax(i_vals[near])]
    print(f"periodogram peak near harmonic {j}: {peak:.4f} (true {0.25 * j})")

# The harmonic criterion concentrates all four peaks at the fundamental.
grid = fourier_grid(sig.n, 4)
q_vals = [harmonic_criterion_qn(sig, float(lam), 4) for lam in grid]
print(f"\nQ_N argmax over the Fourier grid: {grid[int(np.argmax(q_vals))]:.6f}")
print("grid initializer (harmonic_sum):", f"{fourier_grid_init(sig, 4):.6f}")
print("grid spacing 2*pi/n =", f"{2 * math.pi / sig.n:.6f}")

# A dominant second harmonic fools the plain periodogram but not Q_N.
lam = 2 * math.pi * 12 / 256
tricky = synthesize(HarmonicModel(2, lam, ((0.1, 0.0), (5.0, 0.0))), 256)
print(f"\ndominant-2nd-harmonic example (true lambda {lam:.4f}):")
print(f"  init with harmonic criterion: {fourier_grid_init(tricky, 2):.4f}")
print(f"  init with plain periodogram : {fourier_grid_init(tricky, 2, 'plain'):.4f}"
      f"  <- locks onto 2*lambda = {2 * lam:.4f}")
