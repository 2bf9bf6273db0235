"""Bessel-type kernels ``Omega_n`` without a special-function dependency.

``Omega_n(t) = Gamma(n/2) (2/t)^nu J_nu(t)`` with ``nu = (n - 2)/2``, i.e. the
spherical average of ``exp(i <u, x>)`` over the unit sphere of R^n at
``|x| = t``.

Evaluation strategy:

* ``n = 1, 3``: closed forms ``cos t`` and ``sin t / t``.
* ``t <= SERIES_SWITCH`` (or ``nu >= t``): the alternating power series,
  truncated once a term drops below ``1e-16`` of the partial sum.
* otherwise: Hankel asymptotic expansion for ``J_0, J_1`` (integer order) or
  the elementary ``J_{-1/2}, J_{1/2}`` (half-integer order), followed by
  upward recurrence, which is stable while ``nu < t``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NumericalFailure

__all__ = ["SERIES_SWITCH", "bessel_j0", "bessel_j", "omega_kernel"]

SERIES_SWITCH = 12.0
MAX_SERIES_TERMS = 200


def _omega_series(n: int, t: float) -> float:
    # sum_p (-t^2/4)^p Gamma(n/2) / (p! Gamma(n/2 + p)), first term 1
    half = 0.5 * n
    x = -0.25 * t * t
    term = 1.0
    total = 1.0
    for p in range(MAX_SERIES_TERMS):
        term *= x / ((p + 1) * (half + p))
        total += term
        if not math.isfinite(total):
            break
        if abs(term) <= 1e-16 * abs(total) or term == 0.0:
            return total
    raise NumericalFailure(
        f"Omega_{n} series did not converge (overflow or more than {MAX_SERIES_TERMS} terms) at t={t}"
    )


def _hankel(nu: float, t: float) -> float:
    """``J_nu(t)`` from the Hankel expansion, summed to its smallest term."""
    mu = 4.0 * nu * nu
    p = 1.0
    q = 0.0
    c = 1.0
    prev = math.inf
    for k in range(1, 60):
        c *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * t)
        if abs(c) >= prev:
            break
        prev = abs(c)
        if k % 2 == 0:
            p += c if k % 4 == 0 else -c
        else:
            q += c if k % 4 == 1 else -c
        if abs(c) < 1e-17:
            break
    chi = t - (0.5 * nu + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * t)) * (p * math.cos(chi) - q * math.sin(chi))


def _bessel_series(nu: float, t: float) -> float:
    # (t/2)^nu / Gamma(nu+1) * Omega_{2nu+2}(t)
    return (0.5 * t) ** nu / math.gamma(nu + 1.0) * _omega_series(int(round(2 * nu + 2)), t)


def bessel_j(nu: float, t: float) -> float:
    """``J_nu(t)`` for ``t >= 0`` and ``nu`` an integer or half-integer ``>= -1/2``."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    twice = 2.0 * nu
    if abs(twice - round(twice)) > 1e-12 or nu < -0.5:
        raise ValueError("order must be an integer or half-integer >= -1/2")
    if t == 0.0:
        return 1.0 if nu == 0 else 0.0
    if t <= SERIES_SWITCH or nu >= t:
        if nu == -0.5:
            return math.sqrt(2.0 / (math.pi * t)) * math.cos(t)
        return _bessel_series(nu, t)
    if float(nu).is_integer():
        lo, hi, order = _hankel(0.0, t), _hankel(1.0, t), 0.0
    else:
        s = math.sqrt(2.0 / (math.pi * t))
        lo, hi, order = s * math.cos(t), s * math.sin(t), -0.5
    if nu == order:
        return lo
    while order + 1.0 < nu:
        lo, hi = hi, 2.0 * (order + 1.0) / t * hi - lo
        order += 1.0
    return hi


def bessel_j0(t: float) -> float:
    """``J_0(t)``: power series up to ``t = 12``, Hankel expansion beyond."""
    t = abs(float(t))
    if t <= SERIES_SWITCH:
        return _omega_series(2, t)
    return _hankel(0.0, t)


def _omega_scalar(n: int, t: float) -> float:
    if n == 1:
        return math.cos(t)
    if n == 3:
        return 1.0 if t == 0.0 else math.sin(t) / t
    if n == 2:
        return bessel_j0(t)
    if t <= SERIES_SWITCH:
        return _omega_series(n, t)
    nu = 0.5 * (n - 2)
    return math.gamma(0.5 * n) * (2.0 / t) ** nu * bessel_j(nu, t)


def omega_kernel(n: int, t):
    """Schoenberg kernel ``Omega_n(t)``; accepts scalars or arrays of ``t >= 0``."""
    if int(n) != n or n < 1:
        raise ValueError(f"dimension n must be an integer >= 1, got {n}")
    n = int(n)
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0) or not np.all(np.isfinite(arr)):
        raise ValueError("t must be finite and nonnegative")
    if arr.ndim == 0:
        return _omega_scalar(n, float(arr))
    if n == 1:
        return np.cos(arr)
    if n == 3:
        return np.sinc(arr / np.pi)
    flat = np.array([_omega_scalar(n, float(v)) for v in arr.ravel()])
    return flat.reshape(arr.shape)
