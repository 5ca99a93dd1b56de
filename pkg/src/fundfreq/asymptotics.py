"""Closed-form asymptotic variances of the frequency estimators.

With beta* = sum_j j^2 (A_j^2 + B_j^2), the noise-spectrum weights
c(j) = |sum_k a(k) exp(-i j k lambda)|^2 and delta_G = sum_j j^2
(A_j^2 + B_j^2) c(j), the limiting distributions give per-observation
variances at sample size n:

    var_lse = 24 sigma^2 delta_G / (beta*^2 n^3)
    var_mnr =  6 sigma^2 delta_G / (beta*^2 n^3)

These divide the limiting variances of n^{3/2}(lambda_hat - lambda) by
n^3, so they compare directly against Monte Carlo variances of lambda_hat.
The mnr/lse ratio is exactly 1/4 for every model and noise spectrum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .signal import HarmonicModel, LinearProcessSpec

__all__ = ["AsymptoticReport", "spectral_weight_c", "asymptotic_variances"]


@dataclass(frozen=True)
class AsymptoticReport:
    """Variance report for one (model, noise, n) configuration."""

    n: int
    sigma2: float
    beta_star: float
    delta_g: float
    c_weights: tuple[float, ...]
    var_lse: float
    var_mnr: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "sigma2": self.sigma2,
            "beta_star": self.beta_star,
            "delta_g": self.delta_g,
            "c_weights": list(self.c_weights),
            "var_lse": self.var_lse,
            "var_mnr": self.var_mnr,
        }


def spectral_weight_c(spec: LinearProcessSpec, j: int, lam: float) -> float:
    """c(j) = |sum_k a(k) exp(-i j k lambda)|^2 (i.i.d. noise gives 1)."""
    if j < 1:
        raise DomainError(f"j must be >= 1, got {j}")
    if not (0.0 < j * lam < math.pi):
        raise DomainError(f"need 0 < j*lambda < pi, got {j * lam}")
    z = sum(a * cmath.exp(-1j * j * k * lam) for k, a in enumerate(spec.coeffs))
    return abs(z) ** 2


def asymptotic_variances(
    model: HarmonicModel, spec: LinearProcessSpec, n: int
) -> AsymptoticReport:
    """Populate an :class:`AsymptoticReport` by direct summation over j."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    power = model.power_per_harmonic
    beta_star = 0.0
    delta_g = 0.0
    weights = []
    for j in range(1, model.p + 1):
        cj = spectral_weight_c(spec, j, model.lam)
        weights.append(cj)
        beta_star += j * j * power[j - 1]
        delta_g += j * j * power[j - 1] * cj
    base = spec.sigma2 * delta_g / (beta_star**2 * float(n) ** 3)
    return AsymptoticReport(
        n=n,
        sigma2=spec.sigma2,
        beta_star=beta_star,
        delta_g=delta_g,
        c_weights=tuple(weights),
        var_lse=24.0 * base,
        var_mnr=6.0 * base,
    )
