"""Named closed-form members and a claim-by-claim verifier.

Every builder returns a validated :class:`MeroFunction` in rational form,
assembled from closed-form numerator and denominator coefficients, so the
claim checks do not route through the series code they are meant to test.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List

import numpy as np
from numpy.polynomial import polynomial as P

from .certify import (
    CertifyConfig,
    Verdict,
    certify_nth,
    certify_second_derivative,
    certify_thmB,
    certify_vp,
    circle_max,
    onset_radius,
)
from .coeffs import a2_region_check, bn_report
from .errors import InvalidParameter
from .model import MeroFunction, _check_lambda, _check_p, derivative_series, from_rational, u_operator, z_over_f
from .oracle import OracleConfig, injectivity_scan

SERIES_TOL = 1e-10


def k_p_lambda(p: float, lam: float = 1.0) -> MeroFunction:
    """``-p z / ((z - p)(1 - lam p z))``, the extremal member with ``U = -lam z**2``."""
    p, lam = _check_p(p), _check_lambda(lam)
    return from_rational([0.0, -p], [-p, 1.0 + lam * p * p, -lam * p], p, name="k_p_lambda")


def k_p(p: float) -> MeroFunction:
    return k_p_lambda(p, 1.0)


def mobius(p: float) -> MeroFunction:
    """``z / (1 - z/p)``; ``U`` vanishes identically."""
    p = _check_p(p)
    return from_rational([0.0, 1.0], [1.0, -1.0 / p], p, name="mobius")


def f_a(p: float, a: complex = 0.9) -> MeroFunction:
    """``z / ((z - p)(a z - 1/p))`` with ``U = -a z**2``; univalent for ``|a| < 1``."""
    p = _check_p(p)
    a = complex(a)
    if not 0.0 < abs(a) < 1.0:
        raise InvalidParameter(f"need 0 < |a| < 1, got {a}")
    return from_rational([0.0, 1.0], P.polymul([-p, 1.0], [-1.0 / p, a]), p, name="f_a")


def g_bpw(p: float) -> MeroFunction:
    """``(z - 2p z**2/(1+p**2)) / ((1 - z/p)(1 - p z))``: univalent but ``sup |U| > 1``."""
    p = _check_p(p)
    c = 2.0 * p / (1.0 + p * p)
    return from_rational([0.0, 1.0, -c], [1.0, -(1.0 / p + p), 1.0], p, name="g_bpw")


def h_example(p: float) -> MeroFunction:
    """``2pz / ((p - z)(2 - p z (p + z)))`` with ``U = -z**3`` and ``(z/h)'' = 3z``."""
    p = _check_p(p)
    return from_rational([0.0, 2.0 * p], [2.0 * p, -(p**3 + 2.0), 0.0, p], p, name="h_example")


def _z_over_poly(p: float, zf: np.ndarray, name: str) -> MeroFunction:
    return from_rational([0.0, 1.0], zf, p, name=name)


def extremal_eq6(p: float, n: int, lam: float = 1.0) -> MeroFunction:
    """``z / (1 - (1/p + lam p**(n-1)/(n-1)) z + lam z**n/(n-1))``, sharp for ``|b_n|``."""
    p, lam = _check_p(p), _check_lambda(lam)
    if n < 2:
        raise InvalidParameter(f"need n >= 2, got {n}")
    zf = np.zeros(n + 1, dtype=complex)
    zf[0] = 1.0
    zf[1] = -(1.0 / p + lam * p ** (n - 1) / (n - 1))
    zf[n] += lam / (n - 1)
    return _z_over_poly(p, zf, "extremal_eq6")


def f_n_sharp(p: float, n: int) -> MeroFunction:
    """The ``lam = 1`` case of :func:`extremal_eq6`, for ``n >= 3``."""
    if n < 3:
        raise InvalidParameter(f"need n >= 3, got {n}")
    f = extremal_eq6(p, n, 1.0)
    return from_rational(f.num, f.den, p, name="f_n_sharp")


def f_a_interior(p: float, lam: float, a: complex) -> MeroFunction:
    """``z / (1 - (1 + lam a p**2) z / p + lam a z**2)``; ``a_2`` lies inside the disc."""
    p, lam = _check_p(p), _check_lambda(lam)
    a = complex(a)
    if abs(a) > 1.0:
        raise InvalidParameter(f"need |a| <= 1, got {a}")
    return _z_over_poly(p, np.array([1.0, -(1.0 + lam * a * p * p) / p, lam * a]), "f_a_interior")


def f_theta(p: float, lam: float, theta: float) -> MeroFunction:
    """Boundary case ``a = e^{i theta}`` of :func:`f_a_interior`."""
    f = f_a_interior(p, lam, cmath.exp(1j * theta))
    return from_rational(f.num, f.den, p, name="f_theta")


def twopole(p: float = 0.5) -> MeroFunction:
    """``z / ((1 - z)(1 - z/p))``: a non-univalent control (second pole on the circle)."""
    p = _check_p(p)
    return from_rational([0.0, 1.0], P.polymul([1.0, -1.0], [1.0, -1.0 / p]), p, name="twopole")


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    builder: Callable[..., MeroFunction]
    params: tuple
    description: str


GALLERY: Dict[str, GalleryEntry] = {
    e.name: e
    for e in [
        GalleryEntry("k_p_lambda", k_p_lambda, ("p", "lam"), "extremal kernel, U = -lam z^2"),
        GalleryEntry("k_p", k_p, ("p",), "kernel with lam = 1"),
        GalleryEntry("mobius", mobius, ("p",), "z/(1 - z/p), U = 0"),
        GalleryEntry("f_a", f_a, ("p", "a"), "U = -a z^2, univalent, outside the class for lam < |a|"),
        GalleryEntry("g_bpw", g_bpw, ("p",), "univalent, sup|U| > 1"),
        GalleryEntry("h_example", h_example, ("p",), "U = -z^3, (z/h)'' = 3z"),
        GalleryEntry("f_n_sharp", f_n_sharp, ("p", "n"), "equality in the n-th derivative criterion"),
        GalleryEntry("extremal_eq6", extremal_eq6, ("p", "n", "lam"), "|b_n| = lam/(n-1)"),
        GalleryEntry("f_theta", f_theta, ("p", "lam", "theta"), "a_2 on the boundary circle"),
        GalleryEntry("f_a_interior", f_a_interior, ("p", "lam", "a"), "a_2 inside the disc"),
        GalleryEntry("twopole", twopole, ("p",), "non-univalent control"),
    ]
}


def build(name: str, **params) -> MeroFunction:
    """Construct a gallery member; unknown names or parameters raise ``KeyError``/``TypeError``."""
    entry = GALLERY[name]
    unknown = set(params) - set(entry.params)
    if unknown:
        raise TypeError(f"{name} takes {entry.params}, got unexpected {sorted(unknown)}")
    return entry.builder(**params)


@dataclass(frozen=True)
class Claim:
    name: str
    passed: bool
    detail: str
    tolerance: float


@dataclass
class GalleryReport:
    p: float
    lam: float
    claims: List[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    @property
    def failures(self) -> List[Claim]:
        return [c for c in self.claims if not c.passed]


def _series_gap(got: np.ndarray, expected: dict) -> float:
    want = np.zeros(len(got), dtype=complex)
    for k, v in expected.items():
        want[k] = v
    return float(np.max(np.abs(got - want)))


def g_onset(p: float) -> float:
    """Radius where ``sup |U_g|`` reaches 1: ``(1 + p**2) / (1 + 2p - p**2)``."""
    return (1.0 + p * p) / (1.0 + 2.0 * p - p * p)


def verify_gallery(p: float = 0.5, lam: float = 0.5, cfg: CertifyConfig = CertifyConfig(),
                   oracle_cfg: OracleConfig = OracleConfig()) -> GalleryReport:
    """Re-check every statement made about the gallery members at ``(p, lam)``."""
    p, lam = _check_p(p), _check_lambda(lam)
    rep = GalleryReport(p, lam)

    def claim(name, ok, detail, tol=0.0):
        rep.claims.append(Claim(name, bool(ok), detail, tol))

    order = cfg.order
    k = k_p_lambda(p, lam)
    gap = _series_gap(u_operator(k, order).coeffs, {2: -lam})
    claim("U[k_p_lambda] = -lam z^2", gap <= SERIES_TOL, f"max coefficient gap {gap:.3g}", SERIES_TOL)

    h = h_example(p)
    gap = _series_gap(u_operator(h, order).coeffs, {3: -1.0})
    claim("U[h] = -z^3", gap <= SERIES_TOL, f"max coefficient gap {gap:.3g}", SERIES_TOL)
    gap = _series_gap(derivative_series(h, 2, order).coeffs, {1: 3.0})
    claim("(z/h)'' = 3z", gap <= SERIES_TOL, f"max coefficient gap {gap:.3g}", SERIES_TOL)

    a = 0.9
    fa = f_a(p, a)
    gap = _series_gap(u_operator(fa, order).coeffs, {2: -a})
    claim("U[f_a] = -a z^2 (a = 0.9)", gap <= SERIES_TOL, f"max coefficient gap {gap:.3g}", SERIES_TOL)

    kp = k_p(p)
    gap = _series_gap(derivative_series(kp, 1, order).coeffs, {0: -(1.0 / p + p), 1: 2.0})
    claim("(z/k_p)' = -(1/p + p) + 2z", gap <= SERIES_TOL, f"max coefficient gap {gap:.3g}", SERIES_TOL)
    gap = _series_gap(derivative_series(kp, 2, order).coeffs, {0: 2.0})
    claim("(z/k_p)'' = 2", gap <= SERIES_TOL, f"max coefficient gap {gap:.3g}", SERIES_TOL)

    r = certify_vp(k, lam, cfg)
    claim("k_p_lambda: |U| < lam on the disk", r.verdict is Verdict.CERTIFIED_DISK, f"{r.verdict} value {r.value:.12g}")
    r = certify_thmB(k, lam, cfg)
    claim("k_p_lambda: |U| < lam mu fails", r.verdict is Verdict.REFUTED, f"{r.verdict} value {r.value:.6g} vs {r.threshold:.6g}")

    if lam < 1.0:
        a_case = a if lam < a else 0.5 * (1.0 + lam)
        fa_case = f_a(p, a_case)
        r = certify_vp(fa_case, lam, cfg)
        claim(f"f_a (a = {a_case:g}) outside the lam-class", r.verdict is Verdict.REFUTED,
              f"{r.verdict} witness {r.witness}")
        o = injectivity_scan(fa_case, oracle_cfg)
        claim(f"f_a (a = {a_case:g}) injective on the grid", o.clean, o.verdict)

    g = g_bpw(p)
    r = certify_vp(g, 1.0, cfg)
    real_axis = r.witness is not None and abs(r.witness.imag) <= 1e-6
    claim("g: |U| < 1 fails, real-axis witness", r.verdict is Verdict.REFUTED and real_axis,
          f"{r.verdict} witness {r.witness} value {r.value:.6g}", 1e-6)
    target = g_onset(p)
    ug = u_operator(g, order)
    est = onset_radius(ug, 1.0, cfg.r_max, cfg.n_angles)
    claim("g: sup|U| reaches 1 at (1+p^2)/(1+2p-p^2)", est is not None and abs(est - target) <= 0.005,
          f"estimated {est} vs {target:.9g}", 0.005)
    inner = CertifyConfig(cfg.order, 0.98 * target, cfg.n_radii, cfg.n_angles, cfg.tol_rel)
    r = certify_vp(g, 1.0, inner)
    claim("g: |U| < 1 on |z| <= 0.98 R", r.verdict is Verdict.CERTIFIED_SAMPLED,
          f"{r.verdict} sup {r.value:.6g} up to r = {inner.r_max:.6g}")
    o = injectivity_scan(g, oracle_cfg)
    claim("g: injective on the grid", o.clean, o.verdict)

    r = certify_vp(h, 1.0, cfg)
    claim("h: sum (n-1)|b_n| = 1 certifies |U| < 1",
          r.verdict is Verdict.CERTIFIED_DISK and abs(r.value - 1.0) <= SERIES_TOL, f"{r.verdict} value {r.value:.12g}")
    r = certify_second_derivative(h, 1.0, cfg)
    claim("h: |(z/h)''| <= 2 fails", r.verdict is Verdict.REFUTED, f"{r.verdict} value {r.value:.9g}")
    est = onset_radius(derivative_series(h, 2, order), 2.0, cfg.r_max, cfg.n_angles)
    claim("h: |(z/h)''| > 2 exactly for |z| > 2/3", est is not None and abs(est - 2.0 / 3.0) <= 0.005,
          f"estimated {est}", 0.005)

    for n in range(3, 7):
        rk = certify_nth(kp, n, cfg)
        rn = certify_nth(f_n_sharp(p, n), n, cfg)
        ok = all(x.verdict is Verdict.CERTIFIED_DISK and abs(x.value - 1.0) <= SERIES_TOL for x in (rk, rn))
        claim(f"n = {n}: equality for k_p and f_n", ok,
              f"k_p {rk.verdict} {rk.value:.15g}; f_n {rn.verdict} {rn.value:.15g}", SERIES_TOL)

    gaps = []
    for theta in np.linspace(0.0, 2 * np.pi, 8, endpoint=False):
        chk = a2_region_check(f_theta(p, lam, theta), lam)
        gaps.append(abs(chk.offset - lam * p))
    claim("f_theta: |a_2 - 1/p| = lam p", max(gaps) <= SERIES_TOL, f"max gap {max(gaps):.3g}", SERIES_TOL)
    chk = a2_region_check(f_a_interior(p, lam, 0.5), lam)
    claim("f_a_interior: a_2 strictly inside the disc", chk.offset < lam * p, f"offset {chk.offset:.12g}")

    worst = 0.0
    for n in range(2, 7):
        e = extremal_eq6(p, n, lam)
        row = bn_report(e, lam, max(n, 2)).rows[n - 2]
        s = z_over_f(e, order).coeffs
        test_i = float(np.sum((np.arange(2, len(s)) - 1) * np.abs(s[2:])))
        worst = max(worst, abs(row.slack), abs(test_i - lam))
    claim("extremal: |b_n| = lam/(n-1) and sum (n-1)|b_n| = lam", worst <= 1e-12, f"max gap {worst:.3g}", 1e-12)

    same = [np.max(np.abs(np.asarray(f.den) / f.num[1] - np.pad(k.den / k.num[1], (0, len(f.den) - len(k.den)))))
            for f in (f_theta(p, lam, 0.0), extremal_eq6(p, 2, lam))]
    claim("f_theta(0) = extremal_eq6(n=2) = k_p_lambda", max(same) <= 1e-12, f"max gap {max(same):.3g}", 1e-12)
    return rep
