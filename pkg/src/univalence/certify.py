"""Univalence and class-membership certifiers.

Each certifier runs the same three stages:

1. a coefficient sum of ``z/f`` plus a rigorous tail majorant; when it stays
   at or below the threshold the bound holds on the whole open disk
   (``CertifiedDisk``);
2. a sampled search for the supremum of the relevant quantity; a point where
   it reaches the threshold refutes the criterion (``Refuted``), after the
   witness value has been confirmed either through the series error radius or
   by direct rational evaluation;
3. otherwise the sampled supremum either sits clearly below the threshold up
   to ``r_max`` (``CertifiedSampled``) or the run is ``Inconclusive``.

Thresholds: ``lam`` for the U-operator class, ``lam * mu`` with
``mu = ((1-p)/(1+p))**2`` for the older class, ``2*lam`` for the second
derivative of ``z/f`` and ``1`` for the n-th derivative criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Union

import numpy as np

from .errors import BadOrder
from .model import MeroFunction, _check_lambda, derivative_series, u_operator, z_over_f
from .series import DEFAULT_ORDER, PowerSeries, error_radius, weighted_tail_sum

# equality with the threshold counts as a pass; this only absorbs rounding
EQUALITY_SLACK = 1e-12
INCONCLUSIVE_BAND = 1e-9
GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class Verdict(str, Enum):
    CERTIFIED_DISK = "CertifiedDisk"
    CERTIFIED_SAMPLED = "CertifiedSampled"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CertifyConfig:
    order: int = DEFAULT_ORDER
    r_max: float = 0.999
    n_radii: int = 24
    n_angles: int = 720
    tol_rel: float = 1e-6

    def __post_init__(self):
        if not 0.0 < self.r_max < 1.0:
            raise ValueError(f"r_max must lie in (0, 1), got {self.r_max}")
        if self.n_radii < 1 or self.n_angles < 8 or self.order < 4:
            raise ValueError("grid sizes and series order are too small")


@dataclass(frozen=True)
class CertificateResult:
    """Outcome of one criterion.

    ``value`` is the decisive quantity: the coefficient sum for
    ``CertifiedDisk``, the sampled supremum otherwise, or the confirmed value
    at ``witness`` for ``Refuted``.  ``margin = threshold - value``.
    """

    verdict: Verdict
    method: str
    threshold: float
    value: float
    witness: Optional[complex] = None
    r_max: Optional[float] = None

    @property
    def margin(self) -> float:
        return self.threshold - self.value

    @property
    def certified(self) -> bool:
        return self.verdict in (Verdict.CERTIFIED_DISK, Verdict.CERTIFIED_SAMPLED)


@dataclass(frozen=True)
class SupEstimate:
    radii: np.ndarray
    max_per_radius: np.ndarray
    argmax: complex
    extrapolated: Optional[float] = None
    monotone_violation: float = 0.0

    @property
    def value(self) -> float:
        return float(np.max(self.max_per_radius))

    @property
    def monotone(self) -> bool:
        return self.monotone_violation <= 1e-10


Evaluable = Union[PowerSeries, Callable]


def _modulus(fun: Evaluable):
    return lambda z: np.abs(fun(z))


def _golden_max(g, lo: float, hi: float, tol: float = 1e-10):
    a, b = lo, hi
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    gc, gd = g(c), g(d)
    while b - a > tol:
        if gc >= gd:
            b, d, gd = d, c, gc
            c = b - GOLDEN * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + GOLDEN * (b - a)
            gd = g(d)
    t = 0.5 * (a + b)
    return float(g(t)), t


def circle_max(fun: Evaluable, r: float, n_angles: int = 720, top: int = 3):
    """Maximum of ``|fun|`` on ``|z| = r``: grid scan, then golden-section refinement.

    Returns ``(value, theta)``.
    """
    mod = _modulus(fun)
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    vals = mod(r * np.exp(1j * theta))
    h = 2 * np.pi / n_angles
    best = (float(np.max(vals)), float(theta[int(np.argmax(vals))]))
    for i in np.argsort(vals)[::-1][:top]:
        v, t = _golden_max(lambda s: float(mod(r * np.exp(1j * s))), theta[i] - h, theta[i] + h)
        if v > best[0]:
            best = (v, t % (2 * np.pi))
    return best


def sample_radii(r_max: float, n_radii: int) -> np.ndarray:
    """Radii ``r_max * (1 - 2**-(k+1))`` accumulating geometrically at ``r_max``."""
    if n_radii == 1:
        return np.array([r_max])
    k = np.arange(n_radii - 1)
    return np.append(r_max * (1.0 - 0.5 ** (k + 1)), r_max)


def sup_modulus(s: Evaluable, r_max: float = 0.999, n_radii: int = 24, n_angles: int = 720) -> SupEstimate:
    """Estimate ``sup |s(z)|`` over ``|z| <= r_max`` on a radius-by-angle grid."""
    if not 0.0 < r_max < 1.0:
        raise ValueError(f"r_max must lie in (0, 1), got {r_max}")
    radii = sample_radii(r_max, n_radii)
    maxima = np.empty(len(radii))
    angles = np.empty(len(radii))
    for i, r in enumerate(radii):
        maxima[i], angles[i] = circle_max(s, r, n_angles)
    drops = maxima[:-1] - maxima[1:]
    violation = float(max(drops.max(), 0.0)) if len(drops) else 0.0
    k = int(np.argmax(maxima))
    extrapolated = None
    if len(radii) >= 3:
        # quadratic through the outermost radii, continued to r = 1
        coef = np.polyfit(radii[-3:] - radii[-1], maxima[-3:], 2)
        extrapolated = float(np.polyval(coef, 1.0 - radii[-1]))
    return SupEstimate(radii, maxima, complex(radii[k] * np.exp(1j * angles[k])), extrapolated, violation)


def onset_radius(s: Evaluable, level: float, r_hi: float = 0.999, n_angles: int = 720,
                 tol: float = 1e-6) -> Optional[float]:
    """Smallest radius whose circle maximum of ``|s|`` reaches ``level``.

    Bisection is valid because the maximum over ``|z| <= r`` is nondecreasing
    in ``r``.  Returns ``None`` when the level is never reached below ``r_hi``.
    """
    if circle_max(s, r_hi, n_angles)[0] < level:
        return None
    lo, hi = 0.0, r_hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if circle_max(s, mid, n_angles)[0] >= level:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _three_stage(method: str, threshold: float, rigorous: Optional[float], series: PowerSeries,
                 direct: Callable, cfg: CertifyConfig, offset: float = 0.0,
                 factor: float = 1.0) -> CertificateResult:
    """Shared decision procedure; the sampled quantity is ``offset + factor*|series|``."""
    if rigorous is not None and rigorous <= threshold + EQUALITY_SLACK * max(1.0, threshold):
        return CertificateResult(Verdict.CERTIFIED_DISK, method, threshold, rigorous)
    est = sup_modulus(series, cfg.r_max, cfg.n_radii, cfg.n_angles)
    value = offset + factor * est.value
    if value >= threshold:
        z0 = est.argmax
        lower = offset + factor * (abs(series(z0)) - error_radius(series, z0))
        if lower >= threshold:
            return CertificateResult(Verdict.REFUTED, method, threshold,
                                     offset + factor * abs(series(z0)), z0, cfg.r_max)
        confirmed = offset + factor * float(np.abs(direct(z0)))
        if confirmed >= threshold:
            return CertificateResult(Verdict.REFUTED, method, threshold, confirmed, z0, cfg.r_max)
        return CertificateResult(Verdict.INCONCLUSIVE, method, threshold, value, None, cfg.r_max)
    if value < threshold * (1.0 - cfg.tol_rel):
        return CertificateResult(Verdict.CERTIFIED_SAMPLED, method, threshold, value, None, cfg.r_max)
    return CertificateResult(Verdict.INCONCLUSIVE, method, threshold, value, None, cfg.r_max)


def mu(p: float) -> float:
    return ((1.0 - p) / (1.0 + p)) ** 2


def _weighted_sum(s: PowerSeries, weight: Callable[[int], float], start: int = 2):
    """``(truncated sum, tail majorant)`` of ``weight(n) |b_n|`` for ``n >= start``."""
    n = np.arange(start, s.order + 1)
    w = np.array([weight(k) for k in n], dtype=float)
    head = float(np.sum(w * np.abs(s.coeffs[start:])))
    return head, weighted_tail_sum(s.tail, s.order + 1, weight)


def _rigorous(head: float, tail: float) -> Optional[float]:
    return head + tail if math.isfinite(tail) else None


def _u_bound_certifier(f: MeroFunction, threshold: float, method: str, cfg: CertifyConfig) -> CertificateResult:
    s = z_over_f(f, cfg.order)
    rigorous = _rigorous(*_weighted_sum(s, lambda n: n - 1.0))
    return _three_stage(method, threshold, rigorous, u_operator(f, cfg.order), f.u, cfg)


def certify_vp(f: MeroFunction, lam: float = 1.0, cfg: CertifyConfig = CertifyConfig()) -> CertificateResult:
    """Decide ``|U_f| < lam`` on the disk; ``lam = 1`` is the univalence criterion."""
    lam = _check_lambda(lam)
    return _u_bound_certifier(f, lam, "vp", cfg)


def certify_thmB(f: MeroFunction, lam: float = 1.0, cfg: CertifyConfig = CertifyConfig()) -> CertificateResult:
    """Decide ``|U_f| < lam * mu(p)``, the older and stricter criterion."""
    lam = _check_lambda(lam)
    return _u_bound_certifier(f, lam * mu(f.pole), "thmB", cfg)


def certify_second_derivative(f: MeroFunction, lam: float = 1.0,
                              cfg: CertifyConfig = CertifyConfig()) -> CertificateResult:
    """Decide ``|(z/f)''| < 2 lam``; requires ``f`` nonvanishing off the origin."""
    lam = _check_lambda(lam)
    s = z_over_f(f, cfg.order)
    rigorous = _rigorous(*_weighted_sum(s, lambda n: n * (n - 1.0)))
    d2 = derivative_series(f, 2, cfg.order)
    return _three_stage("thm3", 2.0 * lam, rigorous, d2, lambda z: f.zf_derivative(z, 2), cfg)


def nth_head(s: PowerSeries, n: int) -> float:
    """``sum_{k=2}^{n-1} (k-1)|b_k|``, the coefficient part of the n-th derivative criterion."""
    k = np.arange(2, n)
    return float(np.sum((k - 1) * np.abs(s.coeffs[2:n])))


def certify_nth(f: MeroFunction, n: int, cfg: CertifyConfig = CertifyConfig()) -> CertificateResult:
    """Decide ``sum (k+1)/(k+2)! |alpha_k| + (n-1)/n! |(z/f)^(n)| <= 1``.

    With ``alpha_k = -(k+2)! b_{k+2}`` the first sum is ``sum_{k=2}^{n-1} (k-1)|b_k|``.
    The rigorous stage bounds the derivative by ``sum_{k>=n} k!/(k-n)! |b_k|``.
    """
    if n < 3:
        raise BadOrder(f"n must be at least 3, got {n}")
    order = max(cfg.order, n + 4)
    s = z_over_f(f, order)
    head = nth_head(s, n)
    body, tail = _weighted_sum(s, lambda k: math.comb(k, n), start=n)
    rigorous = _rigorous(head + (n - 1) * body, (n - 1) * tail)
    dn = derivative_series(f, n, order)
    factor = (n - 1) / math.factorial(n)
    return _three_stage(f"thm4_n{n}", 1.0, rigorous, dn, lambda z: f.zf_derivative(z, n), cfg,
                        offset=head, factor=factor)


@dataclass(frozen=True)
class CoefficientTest:
    name: str
    total: float
    threshold: float
    status: str  # "pass" | "fail" | "inconclusive"
    rigorous: bool
    truncated: float = field(default=0.0)

    @property
    def margin(self) -> float:
        return self.threshold - self.total


def _coefficient_status(head: float, tail: float, threshold: float):
    if math.isfinite(tail):
        total = head + tail
        ok = total <= threshold + EQUALITY_SLACK * max(1.0, threshold)
        return total, ("pass" if ok else "fail"), True
    if abs(head - threshold) <= INCONCLUSIVE_BAND:
        return head, "inconclusive", False
    return head, ("pass" if head < threshold else "fail"), False


def coefficient_tests(f: MeroFunction, lam: float = 1.0, n_for_iii: int = 3,
                      order: int = DEFAULT_ORDER) -> List[CoefficientTest]:
    """The three coefficient-sum sufficient conditions (i), (ii), (iii)."""
    lam = _check_lambda(lam)
    if n_for_iii < 2:
        raise BadOrder(f"test (iii) needs n >= 2, got {n_for_iii}")
    s = z_over_f(f, max(order, n_for_iii + 4))
    out = []
    head, tail = _weighted_sum(s, lambda n: n - 1.0)
    total, status, rig = _coefficient_status(head, tail, lam)
    out.append(CoefficientTest("thm5i", total, lam, status, rig, truncated=head))
    head, tail = _weighted_sum(s, lambda n: n * (n - 1.0))
    total, status, rig = _coefficient_status(head, tail, 2 * lam)
    out.append(CoefficientTest("thm5ii", total, 2 * lam, status, rig, truncated=head))
    n = n_for_iii
    first = float(np.sum((np.arange(2, n + 1) - 1) * np.abs(s.coeffs[2 : n + 1])))
    body, tail = _weighted_sum(s, lambda k: math.comb(k, n), start=n + 1)
    head = first + (n - 1) * body
    total, status, rig = _coefficient_status(head, (n - 1) * tail, lam)
    out.append(CoefficientTest("thm5iii", total, lam, status, rig, truncated=head))
    return out
