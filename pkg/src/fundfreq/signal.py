"""Harmonic signal model and synthetic data generation.

The observation model is

    y(t) = sum_{j=1..p} [A_j cos(j*lambda*t) + B_j sin(j*lambda*t)] + e(t),
    t = 1..n,

where ``lambda`` is the fundamental angular frequency (radians per sample,
0 < lambda < pi/p) and e(t) is a stationary finite-order linear process
e(t) = sum_k a(k) eps(t-k) driven by i.i.d. Gaussian innovations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "HarmonicModel",
    "Signal",
    "LinearProcessSpec",
    "synthesize",
    "generate_linear_process",
    "mean_correct",
    "polar_to_cartesian",
    "cartesian_to_polar",
    "read_signal",
    "write_signal",
]


@dataclass(frozen=True)
class HarmonicModel:
    """True or estimated parameters of a p-harmonic signal.

    Parameters
    ----------
    p : int
        Number of harmonics, >= 1.
    lam : float
        Fundamental frequency in radians per sample, 0 < lam < pi/p.
    amplitudes : tuple of (A_j, B_j) pairs
        Cosine/sine amplitudes for harmonics j = 1..p.  No pair may be
        identically (0, 0).
    """

    p: int
    lam: float
    amplitudes: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if self.p < 1:
            raise DomainError(f"p must be >= 1, got {self.p}")
        if len(self.amplitudes) != self.p:
            raise DomainError(
                f"expected {self.p} amplitude pairs, got {len(self.amplitudes)}"
            )
        if not (0.0 < self.lam < math.pi / self.p):
            raise DomainError(
                f"lambda must lie in (0, pi/p) = (0, {math.pi / self.p:.6g}), got {self.lam}"
            )
        amps = tuple((float(a), float(b)) for a, b in self.amplitudes)
        object.__setattr__(self, "amplitudes", amps)
        for j, (a, b) in enumerate(amps, start=1):
            if not (math.isfinite(a) and math.isfinite(b)):
                raise DomainError(f"amplitudes of harmonic {j} are not finite")
            if a * a + b * b == 0.0:
                raise DomainError(f"harmonic {j} has zero amplitude")

    @property
    def a(self) -> np.ndarray:
        """Cosine amplitudes A_1..A_p."""
        return np.array([ab[0] for ab in self.amplitudes])

    @property
    def b(self) -> np.ndarray:
        """Sine amplitudes B_1..B_p."""
        return np.array([ab[1] for ab in self.amplitudes])

    @property
    def power_per_harmonic(self) -> np.ndarray:
        """A_j^2 + B_j^2 for j = 1..p."""
        return self.a**2 + self.b**2


@dataclass(frozen=True)
class Signal:
    """A finite sample y(1..n) with optional sampling-rate metadata."""

    samples: np.ndarray
    sample_rate: float | None = None

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or samples.size < 1:
            raise DomainError("samples must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(samples)):
            raise DomainError("samples must all be finite")
        if self.sample_rate is not None and not self.sample_rate > 0:
            raise DomainError(f"sample_rate must be positive, got {self.sample_rate}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def n(self) -> int:
        return self.samples.size


@dataclass(frozen=True)
class LinearProcessSpec:
    """Finite moving-average representation of the noise process.

    ``coeffs`` are a(0..q); ``sigma2`` is the innovation variance.  The
    process variance is sigma2 * sum(a(k)^2).
    """

    coeffs: tuple[float, ...] = (1.0,)
    sigma2: float = 1.0

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) == 0:
            raise DomainError("coeffs must be nonempty")
        if not all(math.isfinite(c) for c in coeffs):
            raise DomainError("coeffs must all be finite")
        if not (self.sigma2 > 0 and math.isfinite(self.sigma2)):
            raise DomainError(f"sigma2 must be positive and finite, got {self.sigma2}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "sigma2", float(self.sigma2))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def process_variance(self) -> float:
        """Stationary variance sigma2 * sum a(k)^2."""
        return self.sigma2 * sum(c * c for c in self.coeffs)


IID = LinearProcessSpec((1.0,), 1.0)


def harmonic_sum(model: HarmonicModel, t: np.ndarray) -> np.ndarray:
    """Deterministic part sum_j A_j cos(j lam t) + B_j sin(j lam t)."""
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    for j, (a, b) in enumerate(model.amplitudes, start=1):
        out += a * np.cos(j * model.lam * t) + b * np.sin(j * model.lam * t)
    return out


def generate_linear_process(spec: LinearProcessSpec, n: int, seed: int) -> np.ndarray:
    """Draw e(1..n) with e(t) = sum_k a(k) eps(t-k), eps ~ N(0, sigma2) i.i.d.

    A burn-in of q = len(coeffs)-1 pre-samples makes e(1) use a full
    innovation history, so the output is stationary from the first sample.
    Deterministic in ``seed``.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    q = spec.order
    rng = np.random.default_rng(seed)
    eps = rng.normal(0.0, math.sqrt(spec.sigma2), size=n + q)
    # e[t] = sum_k a(k) eps[t-k]; with eps covering times 1-q..n this is the
    # 'full' convolution sliced to drop the q ramp-up samples.
    e = np.convolve(eps, np.asarray(spec.coeffs))[q : q + n]
    return e


def synthesize(
    model: HarmonicModel,
    n: int,
    noise: LinearProcessSpec | None = None,
    seed: int = 0,
    sample_rate: float | None = None,
) -> Signal:
    """Generate y(1..n) from the harmonic model, optionally plus noise.

    Identical (model, n, noise, seed) always yield bit-identical samples.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    t = np.arange(1, n + 1, dtype=float)
    y = harmonic_sum(model, t)
    if noise is not None:
        y = y + generate_linear_process(noise, n, seed)
    return Signal(y, sample_rate=sample_rate)


def mean_correct(signal: Signal) -> Signal:
    """Subtract the arithmetic mean from every sample."""
    return Signal(signal.samples - signal.samples.mean(), signal.sample_rate)


def polar_to_cartesian(rho: float, phi: float) -> tuple[float, float]:
    """Map amplitude/phase (rho, phi) to (A, B) = (rho cos phi, -rho sin phi)."""
    if not rho > 0:
        raise DomainError(f"rho must be positive, got {rho}")
    return rho * math.cos(phi), -rho * math.sin(phi)


def cartesian_to_polar(a: float, b: float) -> tuple[float, float]:
    """Inverse of :func:`polar_to_cartesian`; phi is returned in (-pi, pi]."""
    rho = math.hypot(a, b)
    if rho == 0.0:
        raise DomainError("(A, B) = (0, 0) has no polar representation")
    return rho, math.atan2(-b, a)


def write_signal(signal: Signal, path: str, column: str = "y") -> None:
    """Write a signal to ``path``.

    ``.csv`` paths get a one-column CSV with a named header; anything else
    is plain text, one sample per line, with an optional
    ``# sample_rate=<Hz>`` header comment.
    """
    lines = []
    if str(path).endswith(".csv"):
        if signal.sample_rate is not None:
            lines.append(f"# sample_rate={signal.sample_rate!r}")
        lines.append(column)
    elif signal.sample_rate is not None:
        lines.append(f"# sample_rate={signal.sample_rate!r}")
    lines.extend(repr(float(v)) for v in signal.samples)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_signal(path: str, column: str = "y") -> Signal:
    """Read a signal written by :func:`write_signal` (text or CSV)."""
    sample_rate = None
    rows: list[str] = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if body.startswith("sample_rate="):
                    sample_rate = float(body.split("=", 1)[1])
                continue
            rows.append(line)
    if not rows:
        raise DomainError(f"{path}: no data rows")
    if str(path).endswith(".csv"):
        header = [c.strip() for c in rows[0].split(",")]
        if column in header:
            idx = header.index(column)
            data = rows[1:]
        elif len(header) == 1 and _is_number(header[0]):
            idx, data = 0, rows
        else:
            raise DomainError(f"{path}: column {column!r} not found in header {header}")
        values = [float(r.split(",")[idx]) for r in data]
    else:
        values = [float(r) for r in rows]
    return Signal(np.array(values), sample_rate=sample_rate)


def _is_number(s: str) -> bool:
    try:
        float(s)
        return True
    except ValueError:
        return False
