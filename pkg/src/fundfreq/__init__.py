"""Fundamental frequency estimation for harmonic signals in correlated noise.

The package synthesizes p-harmonic signals with stationary moving-average
noise, estimates the fundamental frequency with a step-reduced (factor 1/4)
Newton-Raphson refinement of the harmonic projection criterion, recovers
amplitudes, evaluates closed-form asymptotic variances for both the least
squares and the reduced-step estimators, and reproduces simulation tables
with a deterministic Monte Carlo harness.
"""

from .asymptotics import AsymptoticReport, asymptotic_variances, spectral_weight_c
from .criterion import HarmonicDesignMoments, compute_moments, g, g_derivatives, r_j
from .errors import (
    BoundaryError,
    CurvatureError,
    DegenerateFrequencyError,
    DomainError,
    FundfreqError,
)
from .linear import alse_linear, lse_linear, residuals, sample_acf
from .mnr import EstimationTrace, MnrConfig, TraceRecord, estimate_fundamental, mnr_step
from .montecarlo import (
    MA1_NOISE_COEFFS,
    MODEL1,
    MODEL2,
    ExperimentSpec,
    SummaryRow,
    replication_seed,
    run_experiment,
    summary_csv_lines,
)
from .signal import (
    HarmonicModel,
    LinearProcessSpec,
    Signal,
    cartesian_to_polar,
    generate_linear_process,
    mean_correct,
    polar_to_cartesian,
    read_signal,
    synthesize,
    write_signal,
)
from .spectrum import fourier_grid, fourier_grid_init, harmonic_criterion_qn, periodogram

__version__ = "0.1.0"

__all__ = [
    "AsymptoticReport",
    "BoundaryError",
    "CurvatureError",
    "DegenerateFrequencyError",
    "DomainError",
    "EstimationTrace",
    "ExperimentSpec",
    "FundfreqError",
    "HarmonicDesignMoments",
    "HarmonicModel",
    "LinearProcessSpec",
    "MA1_NOISE_COEFFS",
    "MODEL1",
    "MODEL2",
    "MnrConfig",
    "Signal",
    "SummaryRow",
    "TraceRecord",
    "alse_linear",
    "asymptotic_variances",
    "cartesian_to_polar",
    "compute_moments",
    "estimate_fundamental",
    "fourier_grid",
    "fourier_grid_init",
    "g",
    "g_derivatives",
    "generate_linear_process",
    "harmonic_criterion_qn",
    "lse_linear",
    "mean_correct",
    "mnr_step",
    "periodogram",
    "polar_to_cartesian",
    "r_j",
    "read_signal",
    "replication_seed",
    "residuals",
    "run_experiment",
    "sample_acf",
    "spectral_weight_c",
    "summary_csv_lines",
    "synthesize",
    "write_signal",
]
