"""Radial positive definite functions and their Gram matrices on point sets.

A radial function ``f`` here is one of

* ``OmegaKernel(n, r)``: ``t -> Omega_n(r t)``,
* ``Bernstein(tau)``: ``t -> sum_i w_i exp(-s_i t)`` (completely monotone),
* ``Schoenberg(n, nu)``: ``t -> sum_i w_i Omega_n(s_i t)``,
* ``ExpDecay(a)``: ``t -> exp(-a t)``.

Representing measures are discrete, so every integral over them is a sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .geometry import PointConfig, RealSequence, interaction_sums
from .special import omega_kernel

__all__ = [
    "DiscreteMeasure",
    "OmegaKernel",
    "Bernstein",
    "Schoenberg",
    "ExpDecay",
    "RadialFunction",
    "GramReport",
    "ProfileEntry",
    "InvertibilityCertificate",
    "LineIdentity",
    "eval_radial",
    "gram_matrix",
    "schur_bound",
    "strong_pd_profile",
    "omega3_invertibility_certificate",
    "bernstein_moment",
    "line_identity",
    "line_identity_residual",
]


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finite positive measure ``sum_i w_i delta_{s_i}`` on ``(0, inf)``."""

    s: np.ndarray
    w: np.ndarray

    def __post_init__(self) -> None:
        s = np.array(self.s, dtype=float).reshape(-1)
        w = np.array(self.w, dtype=float).reshape(-1)
        if s.shape != w.shape or s.size == 0:
            raise ValueError("need matching, nonempty atom locations and weights")
        if not (np.all(np.isfinite(s)) and np.all(np.isfinite(w))):
            raise ValueError("atoms must be finite")
        if np.any(s <= 0):
            raise ValueError("atom locations must be strictly positive")
        if len(np.unique(s)) != len(s):
            raise ValueError("atom locations must be pairwise distinct")
        if np.any(w < 0):
            raise ValueError("atom weights must be nonnegative")
        s.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "w", w)

    @classmethod
    def from_atoms(cls, atoms: Sequence[tuple[float, float]]) -> "DiscreteMeasure":
        s, w = zip(*atoms) if atoms else ((), ())
        return cls(np.array(s), np.array(w))

    @property
    def mass(self) -> float:
        return float(self.w.sum())


@dataclass(frozen=True)
class OmegaKernel:
    n: int
    r: float = 1.0

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 1:
            raise ValueError("n must be an integer >= 1")
        if not self.r > 0:
            raise ValueError("r must be positive")

    def __call__(self, t):
        return omega_kernel(self.n, self.r * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class Bernstein:
    tau: DiscreteMeasure

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return np.exp(-np.multiply.outer(t, self.tau.s)) @ self.tau.w


@dataclass(frozen=True)
class Schoenberg:
    n: int
    nu: DiscreteMeasure

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 1:
            raise ValueError("n must be an integer >= 1")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return omega_kernel(self.n, np.multiply.outer(t, self.nu.s)) @ self.nu.w


@dataclass(frozen=True)
class ExpDecay:
    a: float

    def __post_init__(self) -> None:
        if not self.a > 0:
            raise ValueError("decay rate a must be positive")

    def __call__(self, t):
        return np.exp(-self.a * np.asarray(t, dtype=float))


RadialFunction = Union[OmegaKernel, Bernstein, Schoenberg, ExpDecay]


def eval_radial(f: RadialFunction, t):
    """Evaluate ``f`` at ``t >= 0`` (scalar or array)."""
    if np.any(np.asarray(t) < 0):
        raise ValueError("radial functions are evaluated at t >= 0")
    out = f(t)
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class GramReport:
    m: int
    matrix: np.ndarray
    lambda_min: float
    lambda_max: float
    condition_number: float
    schur_bound: float
    determinant: float


def schur_bound(matrix) -> float:
    """Largest absolute column sum, an upper bound for the spectral norm."""
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("schur_bound needs a square matrix")
    return float(np.abs(a).sum(axis=0).max())


def _gram(f: RadialFunction, cfg: PointConfig) -> np.ndarray:
    g = np.asarray(f(cfg.distances), dtype=float)
    return 0.5 * (g + g.T)


def gram_matrix(f: RadialFunction, cfg: PointConfig) -> GramReport:
    """``Gr_X(f) = (f(|x_k - x_j|))`` with its spectral diagnostics."""
    g = _gram(f, cfg)
    ev = np.linalg.eigvalsh(g)
    lo, hi = float(ev[0]), float(ev[-1])
    cond = abs(hi) / abs(lo) if lo != 0 else np.inf
    sign, logdet = np.linalg.slogdet(g)
    return GramReport(
        m=cfg.m,
        matrix=g,
        lambda_min=lo,
        lambda_max=hi,
        condition_number=float(cond),
        schur_bound=schur_bound(g),
        determinant=float(sign * np.exp(logdet)),
    )


@dataclass(frozen=True)
class ProfileEntry:
    m: int
    lambda_min: float
    determinant: float


def strong_pd_profile(f: RadialFunction, cfg: PointConfig) -> list[ProfileEntry]:
    """Smallest eigenvalue and determinant of every leading Gram block.

    By interlacing the ``lambda_min`` column is non-increasing; its last
    value is the best lower-bound constant available on this truncation.
    """
    g = _gram(f, cfg)
    out = []
    for k in range(1, cfg.m + 1):
        block = g[:k, :k]
        out.append(
            ProfileEntry(k, float(np.linalg.eigvalsh(block)[0]), float(np.linalg.det(block)))
        )
    return out


@dataclass(frozen=True)
class InvertibilityCertificate:
    K: float
    certified: bool
    norm_bound: float | None = None
    inv_norm_bound: float | None = None


def omega3_invertibility_certificate(cfg: PointConfig, r: float) -> InvertibilityCertificate:
    """Bounds for ``(sin(r d_jk)/(r d_jk))`` when ``K/r < 1``, ``K = C1``.

    Off-diagonal entries are bounded by ``1/(r d_jk)``, so the Schur test
    gives ``||A - I|| <= K/r`` and hence both bounds.
    """
    if not r > 0:
        raise ValueError("r must be positive")
    k = interaction_sums(cfg).C1
    q = k / r
    if q < 1.0:
        return InvertibilityCertificate(k, True, 1.0 + q, 1.0 / (1.0 - q))
    return InvertibilityCertificate(k, False)


def bernstein_moment(tau: DiscreteMeasure) -> float:
    """``sum_i w_i (s_i + s_i^-3)``."""
    return float(np.sum(tau.w * (tau.s + tau.s**-3.0)))


@dataclass(frozen=True)
class LineIdentity:
    lhs: complex
    rhs: float
    residual: float


def line_identity(
    seq: RealSequence, r: float, xi: Sequence[complex], nodes: int = 64
) -> LineIdentity:
    """Both sides of the collinear ``Omega_3`` exponential-sum identity.

    ``sum_{k,j} xi_k conj(xi_j) Omega_3(r |l_k - l_j|)`` against
    ``(1/(2r)) int_{-r}^{r} |sum_k xi_k exp(i l_k t)|^2 dt``, the integral
    by Gauss-Legendre quadrature with ``nodes`` points.
    """
    if not r > 0:
        raise ValueError("r must be positive")
    lam = np.asarray(seq.lambdas, dtype=float)
    xi = np.asarray(xi, dtype=complex).reshape(-1)
    if xi.shape != lam.shape:
        raise ValueError(f"xi has length {xi.size}, sequence has {lam.size}")
    k3 = omega_kernel(3, r * np.abs(lam[:, None] - lam[None, :]))
    lhs = complex(xi @ k3 @ xi.conj())
    x, w = np.polynomial.legendre.leggauss(nodes)
    t = r * x
    amp = np.exp(1j * np.outer(t, lam)) @ xi
    rhs = float(0.5 * np.sum(w * np.abs(amp) ** 2))  # (1/2r) * r * sum
    return LineIdentity(lhs, rhs, float(abs(lhs - rhs)))


def line_identity_residual(
    seq: RealSequence, r: float, xi: Sequence[complex], nodes: int = 64
) -> float:
    return line_identity(seq, r, xi, nodes).residual
