"""Coefficient analytics: sharp ``|b_n|`` bounds, the ``a_2`` disc and the ``a_n`` conjecture.

Random members are produced from polynomial Schwarz functions ``w`` through
:func:`univalence.model.from_schwarz`.  Seeding follows one contract
everywhere: a root ``SeedSequence(seed)`` spawns one child per trial, and a
trial redraws from its own child stream until the sample is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from . import polyroots
from .errors import ExtraPoleInDisk
from .model import MeroFunction, SchwarzSampler, _check_lambda, _check_p, from_schwarz, taylor_of_f, z_over_f
from .series import DEFAULT_ORDER

VIOLATION_TOL = 1e-8
MAX_DEGREE = 6
MAX_ATTEMPTS = 200


@dataclass(frozen=True)
class BnRow:
    n: int
    b: complex
    bound: float

    @property
    def slack(self) -> float:
        return self.bound - abs(self.b)


@dataclass(frozen=True)
class BnReport:
    rows: List[BnRow]

    @property
    def min_slack(self) -> float:
        return min(r.slack for r in self.rows)

    @property
    def violations(self) -> List[BnRow]:
        return [r for r in self.rows if r.slack < -VIOLATION_TOL]


def bn_report(f: MeroFunction, lam: float, n_max: int = 16, order: int = DEFAULT_ORDER) -> BnReport:
    """``|b_n|`` against ``lam/(n-1)`` for ``2 <= n <= n_max``."""
    lam = _check_lambda(lam)
    b = z_over_f(f, max(order, n_max)).coeffs
    return BnReport([BnRow(n, complex(b[n]), lam / (n - 1)) for n in range(2, n_max + 1)])


@dataclass(frozen=True)
class A2Check:
    a2: complex
    offset: float
    bound: float
    identity_error: Optional[float] = None

    @property
    def slack(self) -> float:
        return self.bound - self.offset

    @property
    def ok(self) -> bool:
        return self.offset <= self.bound + 1e-10


def a2_region_check(f: MeroFunction, lam: float) -> A2Check:
    """``|a_2 - 1/p|`` against ``lam p``.

    When ``f`` remembers the ``w`` it was built from, also reports how far
    ``a_2`` is from ``(1 + lam p int_0^p w) / p``.
    """
    lam = _check_lambda(lam)
    p = f.pole
    a2 = complex(-z_over_f(f, 4).coeffs[1])
    err = None
    if f.schwarz is not None and f.lam is not None:
        wc = f.schwarz.coeffs
        integral = polyroots.polyval(np.concatenate([[0.0], wc / np.arange(1, len(wc) + 1)]), p)
        err = abs(a2 - (1.0 + f.lam * p * integral) / p)
    return A2Check(a2, abs(a2 - 1.0 / p), lam * p, err)


def conjecture_bound(p: float, lam: float, n: int) -> float:
    """``(1 - lam**n p**(2n)) / (p**(n-1) (1 - lam p**2))``."""
    p = _check_p(p)
    lam = _check_lambda(lam)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return (1.0 - lam**n * p ** (2 * n)) / (p ** (n - 1) * (1.0 - lam * p * p))


def sample_members(p: float, lam: float, trials: int, seed: int,
                   w_degree: Optional[int] = None) -> Iterator[Tuple[int, SchwarzSampler, MeroFunction, int]]:
    """Yield ``(trial, w, f, rejected)`` for ``trials`` accepted random members."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    children = np.random.SeedSequence(seed).spawn(trials)
    for i, child in enumerate(children):
        rng = np.random.default_rng(child)
        for attempt in range(MAX_ATTEMPTS):
            deg = int(rng.integers(0, MAX_DEGREE + 1)) if w_degree is None else w_degree
            w = SchwarzSampler.random(rng, deg)
            try:
                f = from_schwarz(w, lam, p)
            except ExtraPoleInDisk:
                continue
            yield i, w, f, attempt
            break
        else:
            raise RuntimeError(f"trial {i}: no admissible sample in {MAX_ATTEMPTS} draws")


def _cplx(z) -> List[float]:
    return [float(np.real(z)), float(np.imag(z))]


@dataclass
class ScanReport:
    kind: str
    p: float
    lam: float
    trials: int
    seed: int
    w_degree: Optional[int]
    n_values: List[int]
    max_ratio: Dict[int, float] = field(default_factory=dict)
    argmax_trial: Dict[int, int] = field(default_factory=dict)
    argmax_w: Dict[int, List[List[float]]] = field(default_factory=dict)
    reference_ratio: Dict[int, float] = field(default_factory=dict)
    violations: List[dict] = field(default_factory=list)
    rejected: int = 0

    @property
    def violated(self) -> bool:
        return bool(self.violations)

    @property
    def overall_max(self) -> float:
        return max(self.max_ratio.values())

    def to_dict(self) -> dict:
        key = lambda d: {str(k): v for k, v in d.items()}
        return {
            "kind": self.kind,
            "p": self.p,
            "lambda": self.lam,
            "trials": self.trials,
            "seed": self.seed,
            "w_degree": self.w_degree,
            "n_values": self.n_values,
            "max_ratio": key(self.max_ratio),
            "argmax_trial": key(self.argmax_trial),
            "argmax_w": key(self.argmax_w),
            "reference_ratio": key(self.reference_ratio),
            "violations": self.violations,
            "rejected": self.rejected,
        }

    def csv_rows(self) -> List[list]:
        return [[n, self.max_ratio[n], self.argmax_trial[n], self.reference_ratio.get(n, "")]
                for n in self.n_values]


def _record(report: ScanReport, n: int, ratio: float, trial: int, w: SchwarzSampler):
    ratio = float(ratio)
    if ratio > report.max_ratio.get(n, -np.inf):
        report.max_ratio[n] = ratio
        report.argmax_trial[n] = trial
        report.argmax_w[n] = [_cplx(c) for c in w.coeffs]
    if ratio > 1.0 + VIOLATION_TOL:
        report.violations.append({"trial": trial, "n": n, "ratio": ratio,
                                  "w": [_cplx(c) for c in w.coeffs]})


def conjecture_scan(p: float, lam: float, n_range: Tuple[int, int] = (3, 8), trials: int = 500,
                    seed: int = 0, w_degree: Optional[int] = None) -> ScanReport:
    """Largest ``|a_n| / conjecture_bound`` over random members, per ``n``.

    ``n = 2`` is always included; there the bound is a theorem.  Ratios above
    ``1 + 1e-8`` are collected in ``violations`` and never discarded.
    """
    lo, hi = n_range
    n_values = sorted(set([2] + list(range(max(lo, 2), hi + 1))))
    order = max(hi + 1, 16)
    bounds = {n: conjecture_bound(p, lam, n) for n in n_values}
    report = ScanReport("conjecture", p, lam, trials, seed, w_degree, n_values)
    ref = taylor_of_f(from_schwarz(SchwarzSampler([1.0]), lam, p), order).coeffs
    report.reference_ratio = {n: float(abs(ref[n]) / bounds[n]) for n in n_values}
    for trial, w, f, rejected in sample_members(p, lam, trials, seed, w_degree):
        report.rejected += rejected
        a = taylor_of_f(f, order).coeffs
        for n in n_values:
            _record(report, n, abs(a[n]) / bounds[n], trial, w)
    return report


def bn_scan(p: float, lam: float, n_max: int = 16, trials: int = 100, seed: int = 0,
            w_degree: Optional[int] = None) -> ScanReport:
    """Largest ``|b_n| / (lam/(n-1))`` over random members."""
    n_values = list(range(2, n_max + 1))
    report = ScanReport("bn", p, lam, trials, seed, w_degree, n_values)
    for trial, w, f, rejected in sample_members(p, lam, trials, seed, w_degree):
        report.rejected += rejected
        for row in bn_report(f, lam, n_max).rows:
            _record(report, row.n, abs(row.b) / row.bound, trial, w)
    return report


def a2_scan(p: float, lam: float, trials: int = 100, seed: int = 0,
            w_degree: Optional[int] = None) -> ScanReport:
    """Largest ``|a_2 - 1/p| / (lam p)`` over random members (reported under ``n = 2``)."""
    report = ScanReport("a2", p, lam, trials, seed, w_degree, [2])
    for trial, w, f, rejected in sample_members(p, lam, trials, seed, w_degree):
        report.rejected += rejected
        chk = a2_region_check(f, lam)
        _record(report, 2, chk.offset / chk.bound, trial, w)
    return report
