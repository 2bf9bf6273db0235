"""Point configurations in R^3 and the scalar functionals built from them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "PointConfig",
    "RealSequence",
    "InteractionSums",
    "DensityWindow",
    "as_point",
    "min_separation",
    "interaction_sums",
    "tail_row_sums",
    "upper_density_estimate",
    "collinear_config",
]


def as_point(x: Iterable[float]) -> np.ndarray:
    """Coerce ``x`` to a finite length-3 float array."""
    p = np.asarray(x, dtype=float).reshape(-1)
    if p.shape != (3,):
        raise ValueError(f"a point needs 3 coordinates, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise ValueError("point coordinates must be finite")
    return p


@dataclass(frozen=True)
class PointConfig:
    """An ordered set of pairwise-distinct points ``x_1, ..., x_m`` in R^3.

    The dense distance matrix is computed once at construction.
    """

    points: np.ndarray
    distances: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pts = np.array(self.points, dtype=float)
        if pts.ndim == 1 and pts.size == 3:
            pts = pts.reshape(1, 3)
        if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 1:
            raise ValueError(f"points must have shape (m, 3) with m >= 1, got {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("point coordinates must be finite")
        diff = pts[:, None, :] - pts[None, :, :]
        d = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
        off = ~np.eye(len(pts), dtype=bool)
        if np.any(d[off] == 0.0):
            j, k = np.argwhere((d == 0.0) & off)[0]
            raise ValueError(f"points {j} and {k} coincide")
        pts.setflags(write=False)
        d.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "distances", d)

    @property
    def m(self) -> int:
        return self.points.shape[0]

    def __len__(self) -> int:
        return self.m

    def truncate(self, m: int) -> "PointConfig":
        """Keep the first ``m`` points."""
        if not 1 <= m <= self.m:
            raise ValueError(f"truncation size must be in [1, {self.m}], got {m}")
        return PointConfig(self.points[:m])

    def distances_to(self, x: Sequence[float]) -> np.ndarray:
        """Distances ``|x - x_j|`` for every point of the configuration."""
        return np.linalg.norm(self.points - as_point(x), axis=1)


@dataclass(frozen=True)
class RealSequence:
    """A finite sequence of pairwise-distinct reals."""

    lambdas: np.ndarray

    def __post_init__(self) -> None:
        lam = np.array(self.lambdas, dtype=float).reshape(-1)
        if not np.all(np.isfinite(lam)):
            raise ValueError("sequence entries must be finite")
        if len(np.unique(lam)) != len(lam):
            raise ValueError("sequence entries must be pairwise distinct")
        lam.setflags(write=False)
        object.__setattr__(self, "lambdas", lam)

    def __len__(self) -> int:
        return len(self.lambdas)


@dataclass(frozen=True)
class InteractionSums:
    C1: float
    C2: float
    bari_sum: float


@dataclass(frozen=True)
class DensityWindow:
    r: float
    n_r: int
    ratio: float


def min_separation(cfg: PointConfig) -> float:
    """Smallest pairwise distance; ``inf`` for a single point."""
    if cfg.m == 1:
        return math.inf
    d = cfg.distances
    return float(d[np.triu_indices(cfg.m, 1)].min())


def _inverse_distances(cfg: PointConfig, power: float = 1.0) -> np.ndarray:
    d = cfg.distances
    out = np.zeros_like(d)
    off = ~np.eye(cfg.m, dtype=bool)
    out[off] = d[off] ** -power
    return out


def interaction_sums(cfg: PointConfig) -> InteractionSums:
    """Row-sup of ``1/d``, total of ``1/d^2`` and the Bari sum ``sum e^{-2d}``.

    The two totals run over ordered pairs ``j != k``.
    """
    if cfg.m == 1:
        return InteractionSums(0.0, 0.0, 0.0)
    inv = _inverse_distances(cfg)
    off = ~np.eye(cfg.m, dtype=bool)
    c1 = float(inv.sum(axis=1).max())
    c2 = float((inv**2).sum())
    bari = float(np.exp(-2.0 * cfg.distances[off]).sum())
    return InteractionSums(c1, c2, bari)


def tail_row_sums(cfg: PointConfig, p: int) -> float:
    """``sup_j sum_{k >= p, k != j} 1/|x_k - x_j|`` (0-based ``p``).

    Finite-truncation proxy for the vanishing-tail condition attached to the
    ``(C1^2, inf)`` window; watch how it shrinks as ``p`` grows.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    inv = _inverse_distances(cfg)
    if p >= cfg.m:
        return 0.0
    return float(inv[:, p:].sum(axis=1).max())


def upper_density_estimate(
    seq: RealSequence, window_lengths: Sequence[float]
) -> list[DensityWindow]:
    """Windowed estimates ``n(r)/r`` of the upper density of ``seq``.

    ``n(r)`` is the largest number of entries inside a closed interval of
    length ``r``. These are finite-data estimates, not the limit itself.
    """
    if len(seq) == 0:
        raise ValueError("empty sequence")
    rs = np.asarray(window_lengths, dtype=float)
    if rs.size == 0 or np.any(rs <= 0) or np.any(np.diff(rs) <= 0):
        raise ValueError("window lengths must be positive and strictly increasing")
    lam = np.sort(seq.lambdas)
    out = []
    for r in rs:
        # window anchored at each point's left end; closed interval [l, l + r]
        hi = np.searchsorted(lam, lam + r, side="right")
        n_r = int((hi - np.arange(len(lam))).max())
        out.append(DensityWindow(float(r), n_r, n_r / float(r)))
    return out


def collinear_config(seq: RealSequence) -> PointConfig:
    """Embed ``lambda_k`` as the points ``(0, 0, lambda_k)``."""
    lam = np.asarray(seq.lambdas, dtype=float)
    if len(lam) == 0:
        raise ValueError("empty sequence")
    pts = np.zeros((len(lam), 3))
    pts[:, 2] = lam
    return PointConfig(pts)
