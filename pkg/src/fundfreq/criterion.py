"""Projection criterion R_j, its sum g, and analytic first/second derivatives.

For harmonic j at trial frequency ``lam`` the design matrix is

    X_j = [cos(j lam t), sin(j lam t)],  t = 1..n,

and the criterion is the projection norm R_j = Y'X_j (X_j'X_j)^{-1} X_j'Y.
Estimation maximizes g(lam) = sum_j R_j(lam).

Derivatives never materialize an n x 2 matrix beyond the trig columns:
with D = diag(j, 2j, .., nj) and the 2x2 exchange matrix E = [[0,1],[-1,0]],
the frequency derivatives of the design are dX/dlam = D X E and
d2X/dlam2 = -D^2 X, so every term of g' and g'' contracts to products of
six per-harmonic moment blocks (three 2x2 matrices, three 2-vectors).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFrequencyError, DomainError
from .signal import Signal

__all__ = [
    "HarmonicDesignMoments",
    "compute_moments",
    "r_j",
    "g",
    "g_derivatives",
    "g_with_derivatives",
    "EXCHANGE",
]

# Antisymmetric exchange matrix: rotates (cos, sin) columns into their
# frequency derivatives.
EXCHANGE = np.array([[0.0, 1.0], [-1.0, 0.0]])

# Relative determinant floor for the 2x2 normal equations, scaled by n^2
# (det(X'X) ~ n^2/4 away from degenerate frequencies).
_DET_FLOOR = 1e-10


@dataclass(frozen=True)
class HarmonicDesignMoments:
    """Per-harmonic moment blocks for fixed (j, lam, n).

    Attributes
    ----------
    m_xx : 2x2 ndarray
        X'X (symmetric positive semidefinite).
    m_xdx : 2x2 ndarray
        X'DX (symmetric; D carries one factor of j*t).
    m_xd2x : 2x2 ndarray
        X'D^2X (symmetric).
    v_xy, v_dxy, v_d2xy : 2-vectors
        X'Y, X'DY, X'D^2Y.
    """

    j: int
    lam: float
    n: int
    m_xx: np.ndarray
    m_xdx: np.ndarray
    m_xd2x: np.ndarray
    v_xy: np.ndarray
    v_dxy: np.ndarray
    v_d2xy: np.ndarray

    def inverse_xx(self) -> np.ndarray:
        """Exact 2x2 inverse of m_xx, guarded against degeneracy."""
        m = self.m_xx
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if not math.isfinite(det) or abs(det) < _DET_FLOOR * self.n**2:
            raise DegenerateFrequencyError(
                f"X'X singular at j={self.j}, lambda={self.lam:.6g} "
                f"(det={det:.3e}, floor={_DET_FLOOR * self.n ** 2:.3e})"
            )
        return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]]) / det


def compute_moments(signal: Signal, j: int, lam: float) -> HarmonicDesignMoments:
    """Accumulate the six moment blocks by direct O(n) trigonometric sums."""
    if j < 1:
        raise DomainError(f"j must be >= 1, got {j}")
    if not (0.0 < j * lam < math.pi):
        raise DomainError(f"need 0 < j*lambda < pi, got j={j}, lambda={lam}")
    y = signal.samples
    n = y.size
    t = np.arange(1, n + 1, dtype=float)
    c = np.cos((j * lam) * t)
    s = np.sin((j * lam) * t)
    d = j * t
    dc = d * c
    ds = d * s
    cs = c @ s
    dcs = dc @ s
    d2cs = dc @ ds
    m_xx = np.array([[c @ c, cs], [cs, s @ s]])
    m_xdx = np.array([[dc @ c, dcs], [dcs, ds @ s]])
    m_xd2x = np.array([[dc @ dc, d2cs], [d2cs, ds @ ds]])
    v_xy = np.array([c @ y, s @ y])
    v_dxy = np.array([dc @ y, ds @ y])
    v_d2xy = np.array([(d * dc) @ y, (d * ds) @ y])
    return HarmonicDesignMoments(j, lam, n, m_xx, m_xdx, m_xd2x, v_xy, v_dxy, v_d2xy)


def r_j(signal: Signal, j: int, lam: float) -> float:
    """Projection norm of Y onto the two columns of X_j; always >= 0."""
    mom = compute_moments(signal, j, lam)
    minv = mom.inverse_xx()
    u = mom.v_xy
    return float(u @ minv @ u)


def g(signal: Signal, p: int, lam: float) -> float:
    """Criterion g(lam) = sum_{j=1..p} R_j(lam)."""
    _check_p_lam(p, lam)
    return sum(r_j(signal, j, lam) for j in range(1, p + 1))


def g_derivatives(signal: Signal, p: int, lam: float) -> tuple[float, float]:
    """Analytic (g'(lam), g''(lam)) assembled from exact moment blocks.

    The nine second-derivative terms of each R_j are contracted to 2x2
    algebra via dX/dlam = D X E and d2X/dlam2 = -D^2 X; no approximation
    of (X'X)^{-1} is involved, so the values match finite differences of
    :func:`g` to rounding accuracy.
    """
    return g_with_derivatives(signal, p, lam)[1:]


def g_with_derivatives(signal: Signal, p: int, lam: float) -> tuple[float, float, float]:
    """(g, g', g'') in one pass over the per-harmonic moment blocks."""
    _check_p_lam(p, lam)
    e = EXCHANGE
    gv = 0.0
    gp = 0.0
    gpp = 0.0
    for j in range(1, p + 1):
        mom = compute_moments(signal, j, lam)
        minv = mom.inverse_xx()
        u = mom.v_xy          # X'Y
        w = mom.v_dxy         # X'DY
        z = mom.v_d2xy        # X'D^2Y
        pm = mom.m_xdx        # X'DX
        q2 = mom.m_xd2x       # X'D^2X

        we = w @ e            # row Y'(dX)
        ew = e.T @ w          # col (dX)'Y
        ep = e.T @ pm         # (dX)'X
        s = ep + pm @ e       # d(X'X)/dlam
        minv_u = minv @ u

        # (1/2) R'_j = Y'(dX) M^{-1} X'Y - Y'X M^{-1} (dX)'X M^{-1} X'Y
        half_rp = we @ minv_u - minv_u @ (ep @ minv_u)

        t1 = -(z @ minv_u)                                 # Y'(d2X) M^{-1} X'Y
        t2 = -(we @ minv @ s @ minv_u)
        t3 = we @ minv @ ew                                # Y'(dX) M^{-1} (dX)'Y
        t4 = -(we @ minv @ ep @ minv_u)
        t5 = minv_u @ (s @ minv @ ep @ minv_u)
        t6 = minv_u @ (q2 @ minv_u)                        # -Y'X M^{-1}(d2X)'X M^{-1}X'Y
        t7 = -(minv_u @ (e.T @ q2 @ e) @ minv_u)           # (dX)'(dX) term
        t8 = minv_u @ (ep @ minv @ s @ minv_u)
        t9 = -(minv_u @ (ep @ minv @ ew))
        half_rpp = t1 + t2 + t3 + t4 + t5 + t6 + t7 + t8 + t9

        gv += u @ minv_u
        gp += 2.0 * half_rp
        gpp += 2.0 * half_rpp
    return float(gv), float(gp), float(gpp)


def _check_p_lam(p: int, lam: float) -> None:
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    if not (0.0 < lam < math.pi / p):
        raise DomainError(f"lambda must lie in (0, pi/{p}), got {lam}")
