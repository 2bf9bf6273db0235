"""Weyl matrices of the point-interaction triplet and the matrices around it.

Energies use the branch of ``sqrt(z)`` with positive imaginary part, cut
along ``[0, inf)``. On that branch ``i sqrt(-kappa^2) = -kappa``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure
from .geometry import PointConfig

__all__ = [
    "sqrt_branch",
    "weyl_matrix",
    "weyl_matrix_kappa",
    "weyl_boundary",
    "weyl_zero",
    "weyl_imag",
    "TripletMatrices",
    "triplet_matrices",
    "krein_coupling",
]


def _on_cut(z: complex) -> bool:
    return z.imag == 0.0 and z.real >= 0.0


def sqrt_branch(z: complex) -> complex:
    """``sqrt(z)`` with ``Im sqrt(z) > 0`` for ``z`` off ``[0, inf)``."""
    z = complex(z)
    if _on_cut(z):
        raise ValueError(f"z={z} lies on the cut [0, inf); use weyl_boundary for t + i0")
    w = np.sqrt(z)
    return -w if w.imag < 0 else w


def _offdiag(cfg: PointConfig, k: complex) -> np.ndarray:
    # exp(i k d_jk) / d_jk off the diagonal, 0 on it
    d = cfg.distances
    out = np.zeros(d.shape, dtype=complex)
    off = ~np.eye(cfg.m, dtype=bool)
    out[off] = np.exp(1j * k * d[off]) / d[off]
    return out


def weyl_matrix(cfg: PointConfig, z: complex) -> np.ndarray:
    """``M(z)``: diagonal ``i sqrt(z)``, off-diagonal ``exp(i sqrt(z) d)/d``."""
    k = sqrt_branch(z)
    out = _offdiag(cfg, k)
    out[np.diag_indices(cfg.m)] = 1j * k
    return out


def weyl_matrix_kappa(cfg: PointConfig, kappa: float) -> np.ndarray:
    """Real form of ``M(-kappa^2)`` for ``kappa > 0``."""
    d = cfg.distances
    with np.errstate(divide="ignore"):
        out = np.where(d > 0, np.exp(-kappa * d) / np.where(d > 0, d, 1.0), 0.0)
    out[np.diag_indices(cfg.m)] = -kappa
    return out


def weyl_boundary(cfg: PointConfig, t: float) -> np.ndarray:
    """Boundary value ``M(t + i0)`` for ``t > 0``."""
    if not t > 0:
        raise ValueError("boundary values need t > 0")
    k = float(np.sqrt(t))
    out = _offdiag(cfg, k)
    out[np.diag_indices(cfg.m)] = 1j * k
    return out


def weyl_zero(cfg: PointConfig) -> np.ndarray:
    """``M(0)``: ``1/d_jk`` off the diagonal, zero diagonal."""
    d = cfg.distances
    out = np.zeros_like(d)
    off = ~np.eye(cfg.m, dtype=bool)
    out[off] = 1.0 / d[off]
    return out


def weyl_imag(cfg: PointConfig, t: float) -> np.ndarray:
    """``M_I(t) = Im M(t + i0) = sqrt(t) (sin(sqrt(t) d_jk) / (sqrt(t) d_jk))``."""
    if not t > 0:
        raise ValueError("M_I(t) needs t > 0")
    k = float(np.sqrt(t))
    return k * np.sinc(k * cfg.distances / np.pi)


@dataclass(frozen=True)
class TripletMatrices:
    T0: np.ndarray
    T1: np.ndarray


def triplet_matrices(cfg: PointConfig) -> TripletMatrices:
    """``T0 = M(-1)`` and ``T1 = (exp(-d_jk)/2)``.

    ``4 pi T1 = (2 pi exp(-d_jk))`` is the Gram matrix of the defect functions
    ``exp(-|x - x_j|)/|x - x_j|``.
    """
    t0 = weyl_matrix_kappa(cfg, 1.0)
    t1 = 0.5 * np.exp(-cfg.distances)
    return TripletMatrices(t0, t1)


def krein_coupling(cfg: PointConfig, max_cond: float = 1e12) -> np.ndarray:
    """``T1^{-1} (M(0) - T0)``, the map ``xi_0 -> xi_1`` of the Krein extension."""
    tm = triplet_matrices(cfg)
    cond = np.linalg.cond(tm.T1)
    if not cond < max_cond:
        raise NumericalFailure(f"T1 is ill-conditioned (condition number {cond:.3e})")
    return np.linalg.solve(tm.T1, weyl_zero(cfg) - tm.T0)
