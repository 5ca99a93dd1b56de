"""Amplitude recovery at a fixed frequency estimate, residuals, and the ACF."""

from __future__ import annotations

import math

import numpy as np

from .criterion import compute_moments
from .errors import DegenerateFrequencyError, DomainError
from .signal import Signal

__all__ = ["lse_linear", "alse_linear", "residuals", "sample_acf"]


def lse_linear(
    signal: Signal, lambda_hat: float, p: int, joint: bool = False
) -> list[tuple[float, float]]:
    """Least squares amplitudes (A_j, B_j) at frequencies j*lambda_hat.

    By default each harmonic is solved from its own 2x2 normal equations,
    mirroring the per-harmonic decomposition of the criterion; the
    cross-harmonic design moments X_j'X_k are O(1) rather than O(n), so the
    decoupled solve carries an O(1/n) leakage error.  ``joint=True`` solves
    the full 2p-column system instead, which recovers noiseless amplitudes
    to rounding accuracy.
    """
    _check(p, lambda_hat)
    if joint:
        y = signal.samples
        t = np.arange(1, signal.n + 1, dtype=float)
        cols = []
        for j in range(1, p + 1):
            cols.append(np.cos(j * lambda_hat * t))
            cols.append(np.sin(j * lambda_hat * t))
        x = np.column_stack(cols)
        try:
            theta = np.linalg.solve(x.T @ x, x.T @ y)
        except np.linalg.LinAlgError as exc:
            raise DegenerateFrequencyError(str(exc)) from exc
        return [(float(theta[2 * i]), float(theta[2 * i + 1])) for i in range(p)]
    out = []
    for j in range(1, p + 1):
        mom = compute_moments(signal, j, lambda_hat)
        ab = mom.inverse_xx() @ mom.v_xy
        out.append((float(ab[0]), float(ab[1])))
    return out


def alse_linear(signal: Signal, lambda_hat: float, p: int) -> list[tuple[float, float]]:
    """Approximate LS amplitudes: (2/n) correlations with the design columns."""
    _check(p, lambda_hat)
    y = signal.samples
    n = signal.n
    t = np.arange(1, n + 1, dtype=float)
    out = []
    for j in range(1, p + 1):
        a = 2.0 / n * float(y @ np.cos(j * lambda_hat * t))
        b = 2.0 / n * float(y @ np.sin(j * lambda_hat * t))
        out.append((a, b))
    return out


def residuals(
    signal: Signal, lambda_hat: float, amplitudes: list[tuple[float, float]]
) -> np.ndarray:
    """y(t) minus the fitted harmonic sum at lambda_hat."""
    y = signal.samples
    t = np.arange(1, signal.n + 1, dtype=float)
    fit = np.zeros_like(y)
    for j, (a, b) in enumerate(amplitudes, start=1):
        fit += a * np.cos(j * lambda_hat * t) + b * np.sin(j * lambda_hat * t)
    return y - fit


def sample_acf(series, max_lag: int) -> np.ndarray:
    """Sample autocorrelations r_0..r_max_lag (biased covariance convention).

    The divide-by-n convention keeps the implied covariance sequence
    positive semidefinite.  A constant series has no ACF.
    """
    x = np.asarray(series, dtype=float)
    n = x.size
    if not (0 < max_lag < n):
        raise DomainError(f"need 0 < max_lag < n, got max_lag={max_lag}, n={n}")
    xc = x - x.mean()
    denom = float(xc @ xc)
    if denom == 0.0:
        raise DomainError("ACF undefined for a constant series")
    out = np.empty(max_lag + 1)
    out[0] = 1.0
    for k in range(1, max_lag + 1):
        out[k] = float(xc[:-k] @ xc[k:]) / denom
    return out


def _check(p: int, lam: float) -> None:
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    if not (0.0 < lam < math.pi / p):
        raise DomainError(f"lambda_hat must lie in (0, pi/{p}), got {lam}")
