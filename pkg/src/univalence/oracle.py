"""Brute-force injectivity evidence on a dense polar grid.

For every grid point ``z1`` the value ``w = f(z1)`` is pulled back through
the rational form: all solutions of ``P(z) - w Q(z) = 0`` are preimages of
``w``.  Another preimage inside the scanned region is a collision witness.
Interior zeros of ``f'`` are located separately from the numerator of the
derivative.

A clean scan is evidence of univalence, not a proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from . import polyroots
from .errors import DegenerateDerivative
from .model import MeroFunction

NO_WITNESS = "NoWitnessFound"
WITNESS = "Witness"
CRITICAL_POINT = "CriticalPoint"
DISCLAIMER = "grid evidence only; a clean scan does not prove univalence"


@dataclass(frozen=True)
class OracleConfig:
    n_r: int = 160
    n_theta: int = 480
    r_max: float = 0.985
    delta_sep: float = 1e-3
    eps_rel: float = 1e-7
    rho_excl: Optional[float] = None  # default 0.04 (1 - p) + 0.01
    chunk: int = 8192

    def exclusion(self, p: float) -> float:
        return self.rho_excl if self.rho_excl is not None else 0.04 * (1.0 - p) + 0.01


@dataclass(frozen=True)
class InjectivityReport:
    verdict: str
    witness: Optional[Tuple[complex, complex, float]] = None
    critical_point: Optional[Tuple[complex, float]] = None
    grid: dict = field(default_factory=dict)
    excluded: float = 0.0
    note: str = DISCLAIMER

    @property
    def clean(self) -> bool:
        return self.verdict == NO_WITNESS


def derivative_numerator(f: MeroFunction) -> np.ndarray:
    """``P'Q - PQ'`` for ``f = P/Q``."""
    return polyroots.trim(P.polysub(P.polymul(polyroots.polyder(f.num), f.den),
                                    P.polymul(f.num, polyroots.polyder(f.den))))


def critical_points(f: MeroFunction) -> List[complex]:
    """Zeros of ``f'`` with modulus below ``1 - 1e-9``, Newton-polished."""
    num = derivative_numerator(f)
    scale = max(np.max(np.abs(f.num)), np.max(np.abs(f.den))) ** 2
    if np.max(np.abs(num)) <= 1e-14 * scale:
        raise DegenerateDerivative("f' vanishes identically")
    r = polyroots.polish(num, polyroots.roots(num), steps=6)
    inside = r[np.abs(r) < 1.0 - 1e-9]
    # rounding residue off the real axis
    inside = np.where(np.abs(inside.imag) < 1e-14 * np.maximum(1.0, np.abs(inside)), inside.real + 0j, inside)
    return sorted((complex(z) for z in inside), key=lambda z: (-round(z.real, 12), round(z.imag, 12)))


def polar_grid(n_r: int, n_theta: int, r_max: float) -> np.ndarray:
    r = r_max * np.arange(1, n_r + 1) / n_r
    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    return (r[:, None] * np.exp(1j * theta[None, :])).ravel()


def _batched_roots(coeffs: np.ndarray) -> np.ndarray:
    """Roots of each row (ascending coefficients, common degree ``d``); NaN where degenerate."""
    m, n = coeffs.shape
    d = n - 1
    lead = coeffs[:, -1]
    scale = np.max(np.abs(coeffs), axis=1)
    ok = np.abs(lead) > 1e-13 * scale
    out = np.full((m, d), np.nan + 0j)
    if d == 0 or not np.any(ok):
        return out
    c = coeffs[ok] / lead[ok, None]
    comp = np.zeros((c.shape[0], d, d), dtype=complex)
    if d > 1:
        comp[:, np.arange(1, d), np.arange(d - 1)] = 1.0
    comp[:, :, -1] = -c[:, :d]
    out[ok] = np.linalg.eigvals(comp)
    return out


def _newton_preimage(f: MeroFunction, z: complex, w: complex, steps: int = 8) -> complex:
    for _ in range(steps):
        d = complex(f.derivative(z))
        if d == 0 or not np.isfinite(d):
            break
        z = z - (complex(f(z)) - w) / d
    return z


def injectivity_scan(f: MeroFunction, cfg: OracleConfig = OracleConfig()) -> InjectivityReport:
    p = f.pole
    excl = cfg.exclusion(p)
    grid = {"n_r": cfg.n_r, "n_theta": cfg.n_theta, "r_max": cfg.r_max,
            "delta_sep": cfg.delta_sep, "eps_rel": cfg.eps_rel}

    crit = [z for z in critical_points(f) if abs(z - p) > excl]
    if crit:
        z0 = crit[0]
        return InjectivityReport(CRITICAL_POINT, critical_point=(z0, float(abs(f.derivative(z0)))),
                                 grid=grid, excluded=excl)

    z = polar_grid(cfg.n_r, cfg.n_theta, cfg.r_max)
    z = z[np.abs(z - p) >= excl]
    num, den = f.num, f.den
    deg = max(len(num), len(den))
    pn = np.zeros(deg, dtype=complex)
    pn[: len(num)] = num
    qd = np.zeros(deg, dtype=complex)
    qd[: len(den)] = den

    def admissible(c):
        return (np.abs(c) <= cfg.r_max) & (np.abs(c - p) >= excl)

    for start in range(0, len(z), cfg.chunk):
        z1 = z[start : start + cfg.chunk]
        w = f(z1)
        pre = _batched_roots(pn[None, :] - w[:, None] * qd[None, :])
        cand = np.isfinite(pre) & (np.abs(pre - z1[:, None]) >= cfg.delta_sep) & admissible(pre)
        for i, j in zip(*np.nonzero(cand)):
            z2 = _newton_preimage(f, complex(pre[i, j]), complex(w[i]))
            gap = abs(complex(f(z2)) - complex(w[i]))
            if (gap <= cfg.eps_rel * max(1.0, abs(w[i])) and abs(z2 - z1[i]) >= cfg.delta_sep
                    and admissible(np.array(z2))):
                return InjectivityReport(WITNESS, witness=(complex(z1[i]), complex(z2), float(gap)),
                                         grid=grid, excluded=excl)
    return InjectivityReport(NO_WITNESS, grid=grid, excluded=excl)
