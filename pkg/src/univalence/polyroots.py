"""Polynomial helpers in ascending coefficient order (``c[k]`` multiplies ``z**k``).

Root finding uses Aberth-Ehrlich simultaneous iteration started from a fixed
circle, so results are deterministic; a stalled run falls back to the
eigenvalues of the companion matrix.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as P

__all__ = [
    "trim",
    "polyval",
    "polyder",
    "roots",
    "polish",
    "rational_derivative",
]


def trim(c, tol: float = 0.0) -> np.ndarray:
    """Drop vanishing top-degree coefficients (relative to the largest one)."""
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    if c.size == 0:
        return np.zeros(1, dtype=complex)
    scale = np.max(np.abs(c))
    if scale == 0:
        return np.zeros(1, dtype=complex)
    nz = np.flatnonzero(np.abs(c) > tol * scale)
    return c[: nz[-1] + 1]


def polyval(c, z):
    z = np.asarray(z, dtype=complex)
    out = np.zeros_like(z)
    for a in np.asarray(c, dtype=complex)[::-1]:
        out = out * z + a
    return out if out.ndim else complex(out)


def polyder(c, m: int = 1) -> np.ndarray:
    c = np.asarray(c, dtype=complex)
    if len(c) <= m:
        return np.zeros(1, dtype=complex)
    return P.polyder(c, m)


def _companion_roots(c: np.ndarray) -> np.ndarray:
    return np.linalg.eigvals(P.polycompanion(c)) if len(c) > 2 else np.array([-c[0] / c[1]])


def _aberth(c: np.ndarray, tol: float, maxiter: int):
    d = len(c) - 1
    dc = P.polyder(c)
    # circle through the geometric mean root modulus, angles offset off the axes
    radius = abs(c[0] / c[-1]) ** (1.0 / d)
    if radius == 0 or not np.isfinite(radius):
        radius = 1.0
    z = radius * np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.4))
    for _ in range(maxiter):
        pz = polyval(c, z)
        dpz = polyval(dc, z)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            corr = ratio / (1.0 - ratio * inv.sum(axis=1))
        if not np.all(np.isfinite(corr)):
            return None
        z = z - corr
        if np.all(np.abs(corr) <= tol * np.maximum(1.0, np.abs(z))):
            return z
    return None


def _plausible(c: np.ndarray, z: np.ndarray) -> bool:
    """Backward-error and root-sum checks; Aberth can collapse onto one root when
    the root moduli span many orders of magnitude."""
    az = np.abs(z)
    with np.errstate(over="ignore", invalid="ignore"):
        pw = np.abs(c)[None, :] * az[:, None] ** np.arange(len(c))[None, :]
        if not np.all(np.abs(polyval(c, z)) <= 1e-8 * pw.sum(axis=1)):
            return False
    s = -c[-2] / c[-1]
    return abs(np.sum(z) - s) <= 1e-8 * max(np.sum(az), abs(s), 1e-300)


def polish(c, z, steps: int = 3):
    """A few Newton steps on each root estimate."""
    c = np.asarray(c, dtype=complex)
    dc = polyder(c)
    z = np.array(z, dtype=complex)
    for _ in range(steps):
        d = polyval(dc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(d != 0, polyval(c, z) / d, 0.0)
        step = np.where(np.isfinite(step), step, 0.0)
        cand = z - step
        better = np.abs(polyval(c, cand)) <= np.abs(polyval(c, z))
        z = np.where(better, cand, z)
    return z


def roots(c, tol: float = 1e-12, maxiter: int = 200) -> np.ndarray:
    """All complex roots of the polynomial with ascending coefficients ``c``.

    Coefficients below ``1e-250`` of the largest are dropped first, so roots of
    modulus beyond roughly ``1e250`` are not reported.
    """
    c = trim(c, 1e-250)
    if len(c) <= 1:
        return np.zeros(0, dtype=complex)
    # exact zero roots are split off so the iteration never starts at a fixed point
    nz = np.flatnonzero(c)
    k = nz[0]
    zeros = np.zeros(k, dtype=complex)
    c = c[k:]
    if len(c) == 1:
        return zeros
    if len(c) == 2:
        return np.concatenate([zeros, [-c[0] / c[1]]])
    # roots far outside the unit circle may overflow intermediate powers harmlessly
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        z = _aberth(c, tol, maxiter)
        if z is None or not _plausible(c, z):
            z = _companion_roots(c)
        return np.concatenate([zeros, polish(c, z)])


def rational_derivative(num, den, m: int = 1):
    """Numerator and denominator polynomials of the ``m``-th derivative of ``num/den``.

    Uses ``(N_k / D**(k+1))' = (N_k' D - (k+1) N_k D') / D**(k+2)``.
    """
    num = np.asarray(num, dtype=complex)
    den = np.asarray(den, dtype=complex)
    dden = polyder(den)
    out_den = den
    for k in range(m):
        num = P.polysub(P.polymul(polyder(num), den), (k + 1) * P.polymul(num, dden))
        out_den = P.polymul(out_den, den)
    return trim(num), trim(out_den)
