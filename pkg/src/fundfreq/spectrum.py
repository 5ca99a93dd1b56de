"""Periodogram, harmonic criterion, and the coarse Fourier-grid initializer."""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .signal import Signal

__all__ = [
    "periodogram",
    "harmonic_criterion_qn",
    "fourier_grid",
    "fourier_grid_init",
]


def periodogram(signal: Signal, lam: float) -> float:
    """Classical periodogram I(lam) = (1/n) |sum_t y(t) exp(-i lam t)|^2."""
    if not (0.0 < lam < math.pi):
        raise DomainError(f"lambda must lie in (0, pi), got {lam}")
    y = signal.samples
    n = y.size
    if n < 2:
        raise DomainError("periodogram needs n >= 2")
    t = np.arange(1, n + 1)
    z = y @ np.exp(-1j * lam * t)
    return float(abs(z) ** 2) / n


def harmonic_criterion_qn(signal: Signal, lam: float, p: int) -> float:
    """Harmonic periodogram sum Q_N(lam) = sum_j |(1/n) sum_t y(t) e^{i t j lam}|^2.

    For p = 1 this equals I(lam)/n.  Its maximizer over (0, pi/p) is the
    approximate least squares estimate of the fundamental frequency.
    """
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    if not (0.0 < lam < math.pi / p):
        raise DomainError(
            f"need 0 < j*lambda < pi for all j <= p; got lambda = {lam}, p = {p}"
        )
    y = signal.samples
    n = y.size
    t = np.arange(1, n + 1)
    total = 0.0
    for j in range(1, p + 1):
        z = y @ np.exp(1j * (j * lam) * t)
        total += float(abs(z) ** 2)
    return total / n**2


def fourier_grid(n: int, p: int) -> np.ndarray:
    """Fourier frequencies 2*pi*k/n, k = 1..floor(n/2), restricted to (0, pi/p)."""
    ks = np.arange(1, n // 2 + 1)
    lams = 2.0 * math.pi * ks / n
    return lams[lams < math.pi / p]


def fourier_grid_init(signal: Signal, p: int, mode: str = "harmonic_sum") -> float:
    """Coarse initializer: argmax over the Fourier grid restricted to (0, pi/p).

    ``mode="plain"`` maximizes the periodogram I; ``mode="harmonic_sum"``
    (default) maximizes Q_N, which cannot lock onto a bare harmonic of the
    fundamental the way a plain periodogram can.  The result is exactly a
    grid point; ties break toward the smaller frequency.
    """
    if mode not in ("plain", "harmonic_sum"):
        raise DomainError(f"unknown init mode {mode!r}")
    n = signal.n
    if n < 10 * p:
        raise DomainError(f"need n >= 10*p = {10 * p}, got n = {n}")
    grid = fourier_grid(n, p)
    if grid.size == 0:
        raise DomainError(f"no Fourier frequency lies in (0, pi/{p}) for n = {n}")
    best_lam = None
    best_val = -math.inf
    for lam in grid:
        if mode == "plain":
            val = periodogram(signal, float(lam))
        else:
            val = harmonic_criterion_qn(signal, float(lam), p)
        if val > best_val:  # strict: ties keep the earlier (smaller) frequency
            best_val = val
            best_lam = float(lam)
    return best_lam
