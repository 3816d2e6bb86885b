"""Meromorphic functions on the unit disk with one simple pole at ``p`` in (0, 1).

Every member is normalized ``f(0) = 0``, ``f'(0) = 1`` and is stored either as
a rational function ``P/Q`` or through the Taylor polynomial of ``z/f``.  The
reciprocal ``z/f`` is analytic in the disk and vanishes at the pole, which is
the form most of the package works with:

    z/f(z) = 1 + b_1 z + b_2 z**2 + ...
    U_f(z) = (z/f)**2 f'(z) - 1 = -z (z/f)' + (z/f) - 1 = -sum (n-1) b_n z**n
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from . import polyroots
from .errors import (
    ConsistencyError,
    DegeneratePole,
    ExtraPoleInDisk,
    InvalidLambda,
    InvalidParameter,
    NotNormalized,
    PoleMissingAtP,
    ZeroInDisk,
)
from .series import (
    DEFAULT_ORDER,
    EXACT,
    PowerSeries,
    Tail,
    differentiate,
    mul,
    reciprocal,
    shift,
)

# roots within this distance of the unit circle count as outside the open disk
BOUNDARY_TOL = 1e-8
POLE_TOL = 1e-10
SIMPLE_POLE_TOL = 1e-8
NORMALIZATION_TOL = 1e-10
N_BOUNDARY_SAMPLES = 4096
SHRINK = 0.99

__all__ = [
    "MeroFunction",
    "SchwarzSampler",
    "ExteriorReport",
    "from_rational",
    "from_z_over_f",
    "from_schwarz",
    "z_over_f",
    "u_operator",
    "derivative_series",
    "taylor_of_f",
    "exterior_transform_check",
]


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 < p < 1.0:
        raise InvalidParameter(f"pole must lie in (0, 1), got {p}")
    return p


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0.0 < lam <= 1.0:
        raise InvalidLambda(f"lambda must lie in (0, 1], got {lam}")
    return lam


def _interior(r: np.ndarray) -> np.ndarray:
    return r[np.abs(r) < 1.0 - BOUNDARY_TOL]


def _boundary_points(n: int = N_BOUNDARY_SAMPLES) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(n) / n)


@dataclass(frozen=True, eq=False)
class SchwarzSampler:
    """Polynomial self-map of the disk, ``w(z) = scale * sum poly[k] z**k``."""

    poly: np.ndarray
    scale: float = 1.0

    def __post_init__(self):
        poly = np.array(self.poly, dtype=complex).ravel()
        if poly.size == 0 or not np.all(np.isfinite(poly)):
            raise InvalidParameter("w needs finite coefficients")
        poly.setflags(write=False)
        object.__setattr__(self, "poly", poly)
        if not self.scale > 0:
            raise InvalidParameter("normalization must be positive")
        sup = self.sampled_sup()
        if sup > 1.0 + 1e-12:
            raise InvalidParameter(f"w is not bounded by 1 on the circle (sampled sup {sup:.6g})")

    @classmethod
    def normalized(cls, poly: Sequence[complex], shrink: float = SHRINK) -> "SchwarzSampler":
        """Scale ``poly`` so its sampled boundary maximum becomes ``shrink``."""
        poly = np.asarray(poly, dtype=complex)
        peak = float(np.max(np.abs(polyroots.polyval(poly, _boundary_points()))))
        return cls(poly, shrink / peak if peak > 0 else 1.0)

    @classmethod
    def random(cls, rng: np.random.Generator, degree: int) -> "SchwarzSampler":
        """Coefficients uniform in the complex unit square, then normalized."""
        c = rng.uniform(-1, 1, degree + 1) + 1j * rng.uniform(-1, 1, degree + 1)
        return cls.normalized(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self.scale * self.poly

    def sampled_sup(self) -> float:
        return float(np.max(np.abs(self(_boundary_points()))))

    def __call__(self, z):
        return polyroots.polyval(self.coeffs, z)


@dataclass(frozen=True, eq=False)
class MeroFunction:
    """Validated member of the class; build through the ``from_*`` constructors.

    ``num``/``den`` always hold a rational form ``f = num/den`` (for a member
    given through ``z/f = S`` that is ``z / S``).
    """

    pole: float
    residue: complex
    num: np.ndarray
    den: np.ndarray
    kind: str = "rational"
    schwarz: Optional[SchwarzSampler] = None
    lam: Optional[float] = None
    name: str = field(default="", compare=False)

    @property
    def zf_parts(self):
        """``(A, B)`` with ``z/f = A/B`` as polynomials."""
        return self.den, self.num[1:]

    @property
    def zf_polynomial(self) -> Optional[np.ndarray]:
        """Coefficients of ``z/f`` when it is a polynomial, else ``None``."""
        a, b = self.zf_parts
        b = polyroots.trim(b)
        if len(b) == 1:
            return a / b[0]
        return None

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            return polyroots.polyval(self.num, z) / polyroots.polyval(self.den, z)

    def derivative(self, z):
        n, d = polyroots.rational_derivative(self.num, self.den)
        z = np.asarray(z, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            return polyroots.polyval(n, z) / polyroots.polyval(d, z)

    def u(self, z):
        """``U_f(z) = z**2 f'(z) / f(z)**2 - 1`` from the rational form."""
        z = np.asarray(z, dtype=complex)
        pn, qn = self.num, self.den
        w = polyroots.polyval(
            np.polynomial.polynomial.polysub(
                np.polynomial.polynomial.polymul(polyroots.polyder(pn), qn),
                np.polynomial.polynomial.polymul(pn, polyroots.polyder(qn)),
            ),
            z,
        )
        # P = z * Pt, so z**2 / P**2 = 1 / Pt**2
        pt = polyroots.polyval(pn[1:], z)
        with np.errstate(divide="ignore", invalid="ignore"):
            return w / pt**2 - 1.0

    def zf_derivative(self, z, m: int = 0):
        """``m``-th derivative of ``z/f`` evaluated directly from the rational form."""
        a, b = self.zf_parts
        n, d = polyroots.rational_derivative(a, b, m) if m else (a, b)
        z = np.asarray(z, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            return polyroots.polyval(n, z) / polyroots.polyval(d, z)

    def conjugate(self) -> "MeroFunction":
        w = None if self.schwarz is None else SchwarzSampler(np.conj(self.schwarz.poly), self.schwarz.scale)
        return replace(
            self,
            residue=complex(np.conj(self.residue)),
            num=np.conj(self.num),
            den=np.conj(self.den),
            schwarz=w,
        )


def _validate_pole(den: np.ndarray, num: np.ndarray, p: float) -> complex:
    scale = float(np.max(np.abs(den)))
    q_p = polyroots.polyval(den, p)
    dq_p = polyroots.polyval(polyroots.polyder(den), p)
    if abs(q_p) > POLE_TOL * scale:
        raise PoleMissingAtP(f"denominator does not vanish at p={p} (|Q(p)| = {abs(q_p):.3g})")
    if abs(dq_p) < SIMPLE_POLE_TOL * scale:
        raise DegeneratePole(f"pole at p={p} is not simple (|Q'(p)| = {abs(dq_p):.3g})")
    p_p = polyroots.polyval(num, p)
    if abs(p_p) <= POLE_TOL * float(np.max(np.abs(num))):
        raise PoleMissingAtP(f"numerator also vanishes at p={p}; singularity is removable")
    others = polyroots.roots(den)
    others = np.delete(others, np.argmin(np.abs(others - p)))
    extra = _interior(others)
    if extra.size:
        raise ExtraPoleInDisk(f"additional pole(s) in the disk at {np.round(extra, 10).tolist()}")
    return complex(p_p / dq_p)


def from_rational(num, den, p: float, check_nonvanishing: bool = False, name: str = "") -> MeroFunction:
    """Validate ``f = num/den`` (ascending coefficients) as a member with pole ``p``."""
    p = _check_p(p)
    num = polyroots.trim(num)
    den = polyroots.trim(den)
    if not (np.all(np.isfinite(num)) and np.all(np.isfinite(den))):
        raise NotNormalized("coefficients must be finite")
    if len(num) < 2 or den[0] == 0:
        raise NotNormalized("need f(0) = 0 and f'(0) = 1")
    if abs(num[0]) > NORMALIZATION_TOL * float(np.max(np.abs(num))):
        raise NotNormalized(f"f(0) = {num[0] / den[0]!r}, expected 0")
    num = num.copy()
    num[0] = 0.0
    fp0 = num[1] / den[0]
    if abs(fp0 - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"f'(0) = {fp0!r}, expected 1")
    residue = _validate_pole(den, num, p)
    if check_nonvanishing:
        _check_no_interior_zero(num)
    num.setflags(write=False)
    den = den.copy()
    den.setflags(write=False)
    return MeroFunction(p, residue, num, den, "rational", name=name)


def _check_no_interior_zero(num: np.ndarray) -> None:
    zeros = _interior(polyroots.roots(num[1:]))
    if zeros.size:
        raise ZeroInDisk(f"f vanishes in the punctured disk at {np.round(zeros, 10).tolist()}")


def from_z_over_f(b, p: float, schwarz: Optional[SchwarzSampler] = None, lam: Optional[float] = None,
                  name: str = "") -> MeroFunction:
    """Member given by the coefficients ``[1, b_1, b_2, ...]`` of the polynomial ``z/f``."""
    p = _check_p(p)
    s = polyroots.trim(b)
    if abs(s[0] - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"constant term of z/f is {s[0]!r}, expected 1")
    if len(s) < 2:
        raise PoleMissingAtP("z/f is constant, f has no pole")
    s = s.copy()
    s.setflags(write=False)
    num = np.array([0.0, 1.0], dtype=complex)
    num.setflags(write=False)
    _validate_pole(s, num, p)
    residue = complex(p / polyroots.polyval(polyroots.polyder(s), p))
    return MeroFunction(p, residue, num, s, "z_over_f", schwarz=schwarz, lam=lam, name=name)


def from_schwarz(w: SchwarzSampler, lam: float, p: float, name: str = "") -> MeroFunction:
    """Member with ``z/f = 1 - a_2 z + lam * z * int_0^z w``.

    ``a_2 = (1 + lam p int_0^p w) / p`` puts the zero of ``z/f`` at ``p``.
    Raises :class:`ExtraPoleInDisk` when ``z/f`` vanishes elsewhere in the disk.
    """
    lam = _check_lambda(lam)
    p = _check_p(p)
    wc = w.coeffs
    antider = np.concatenate([[0.0], wc / np.arange(1, len(wc) + 1)])
    a2 = (1.0 + lam * p * polyroots.polyval(antider, p)) / p
    s = np.zeros(len(antider) + 1, dtype=complex)
    s[0] = 1.0
    s[1] = -a2
    s[2:] = lam * antider[1:]
    return from_z_over_f(s, p, schwarz=w, lam=lam, name=name)


def _cauchy_tail(a: np.ndarray, b: np.ndarray, order: int) -> Optional[Tail]:
    """Geometric majorant for the Taylor coefficients of ``a/b``.

    On ``|z| = R`` below every root modulus of ``b``,
    ``|a/b| <= sum|a_k| R**k / (|b_lead| prod(|r_j| - R))``.
    """
    r = polyroots.roots(b)
    mods = np.abs(r) * (1.0 - 1e-9) - 1e-12
    rmin = float(mods.min())
    if rmin <= 1.0 + BOUNDARY_TOL:
        return None
    lead = abs(b[-1])
    best = None
    for t in np.linspace(0.05, 0.95, 19):
        R = 1.0 + t * (rmin - 1.0)
        m = float(np.sum(np.abs(a) * R ** np.arange(len(a)))) / (lead * np.prod(mods - R))
        score = math.log(m) - (order + 1) * math.log(R) if m > 0 else -math.inf
        if best is None or score < best[0]:
            best = (score, Tail(m, R))
    return best[1]


def z_over_f(f: MeroFunction, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor series ``1 + b_1 z + ...`` of ``z/f`` with a tail bound when one is available."""
    poly = f.zf_polynomial
    if poly is not None:
        return PowerSeries.polynomial(poly, order)
    a, b = f.zf_parts
    b = polyroots.trim(b)
    zeros = _interior(polyroots.roots(b))
    if zeros.size:
        raise ZeroInDisk(f"f vanishes in the punctured disk at {np.round(zeros, 10).tolist()}; z/f is not analytic")
    s = mul(PowerSeries.polynomial(a, order), reciprocal(PowerSeries.polynomial(b, order)))
    return PowerSeries(s.coeffs, _cauchy_tail(a, b, order))


def derivative_series(f: MeroFunction, m: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Series of the ``m``-th derivative of ``z/f``."""
    s = z_over_f(f, order)
    for _ in range(m):
        s = differentiate(s)
    return s


def u_operator(f: MeroFunction, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Series of ``U_f``, computed two ways and cross-checked coefficientwise."""
    s = z_over_f(f, order)
    via_ops = shift(differentiate(s)) * -1.0 + s - 1.0
    n = np.arange(s.order + 1)
    direct = -(n - 1) * s.coeffs
    direct[0] = 0.0
    tol = 1e-13 * np.maximum(1.0, n * np.abs(s.coeffs))
    bad = np.abs(via_ops.coeffs - direct) > tol
    if np.any(bad):
        k = int(np.flatnonzero(bad)[0])
        raise ConsistencyError(f"U_f coefficient {k}: {via_ops.coeffs[k]!r} vs {direct[k]!r}")
    return PowerSeries(direct, via_ops.tail)


def taylor_of_f(f: MeroFunction, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor coefficients ``a_0 = 0, a_1 = 1, a_2, ...`` of ``f``, valid for ``|z| < p``."""
    inv = reciprocal(z_over_f(f, order))
    a = np.concatenate([[0.0], inv.coeffs[:order]])
    return PowerSeries(a, None, radius=f.pole)


@dataclass(frozen=True)
class ExteriorReport:
    max_deviation: float
    pole_value: float
    argmax: complex
    samples: int


def exterior_transform_check(f: MeroFunction, samples: int = 100, seed: int = 0,
                             order: int = 256, step: float = 1e-6) -> ExteriorReport:
    """Compare ``F'(zeta) - 1`` against ``U_f(1/zeta)`` for ``F(zeta) = 1/f(1/zeta)``.

    ``F'`` is a central difference; ``U_f`` comes from its power series, so the
    two sides share nothing but the rational coefficients of ``f``.
    """
    rng = np.random.default_rng(seed)
    mod = rng.uniform(1.05, 10.0, samples)
    arg = rng.uniform(0.0, 2 * np.pi, samples)
    zeta = mod * np.exp(1j * arg)

    def F(x):
        z = 1.0 / x
        return polyroots.polyval(f.den, z) / polyroots.polyval(f.num, z)

    dF = (F(zeta + step) - F(zeta - step)) / (2 * step)
    u = u_operator(f, order)(1.0 / zeta)
    dev = np.abs(dF - 1.0 - u)
    k = int(np.argmax(dev))
    pole_value = abs(polyroots.polyval(f.den, f.pole) / polyroots.polyval(f.num, f.pole))
    return ExteriorReport(float(dev[k]), float(pole_value), complex(zeta[k]), samples)
