"""Truncated complex power series with optional geometric tail bounds.

A :class:`PowerSeries` stores ``c_0 .. c_N`` (index ``n`` is the ``z**n``
coefficient).  Its optional :class:`Tail` ``(T, rho)`` asserts that every
dropped coefficient obeys ``|c_n| <= T * rho**(-n)`` for ``n > N``.  A tail
with ``T == 0`` marks an exact polynomial; ``tail is None`` means nothing is
known about the dropped part.

All values are immutable and every operation returns a new series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

DEFAULT_ORDER = 64
EPS_DIV = 1e-12

__all__ = [
    "DEFAULT_ORDER",
    "EPS_DIV",
    "NearZeroConstantTerm",
    "Tail",
    "PowerSeries",
    "add",
    "scale",
    "shift",
    "mul",
    "reciprocal",
    "differentiate",
    "integrate0",
    "evaluate",
    "error_radius",
    "weighted_tail_sum",
]


class NearZeroConstantTerm(ZeroDivisionError):
    """Raised when inverting a series whose constant term is (nearly) zero."""


@dataclass(frozen=True)
class Tail:
    """Majorant ``|c_n| <= bound * rate**(-n)`` for the dropped coefficients."""

    bound: float
    rate: float

    def __post_init__(self):
        object.__setattr__(self, "bound", float(self.bound))
        object.__setattr__(self, "rate", float(self.rate))
        if not (self.bound >= 0.0) or math.isnan(self.bound):
            raise ValueError(f"tail bound must be nonnegative, got {self.bound}")
        # rate == 1 is admitted: it still bounds the remainder inside the open disk
        if not (self.rate >= 1.0):
            raise ValueError(f"tail rate must be >= 1, got {self.rate}")

    @property
    def exact(self) -> bool:
        return self.bound == 0.0

    def coefficient_bound(self, n) -> np.ndarray:
        n = np.asarray(n, dtype=float)
        if self.exact:
            return np.zeros_like(n)
        return self.bound * self.rate ** (-n)


EXACT = Tail(0.0, math.inf)


def _as_coeffs(values) -> np.ndarray:
    arr = np.array(values, dtype=complex).ravel()
    if arr.size == 0:
        raise ValueError("a power series needs at least one coefficient")
    if not np.all(np.isfinite(arr)):
        raise ValueError("series coefficients must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PowerSeries:
    coeffs: np.ndarray
    tail: Optional[Tail] = None
    radius: Optional[float] = None  # known disk of validity, if not the unit disk

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs))

    @classmethod
    def polynomial(cls, coeffs: Sequence[complex], order: Optional[int] = None) -> "PowerSeries":
        """An exact polynomial, padded or truncated to ``order``.

        Truncation folds the dropped coefficients into a rigorous tail.
        """
        c = np.array(coeffs, dtype=complex).ravel()
        if order is None:
            order = max(len(c) - 1, 0)
        if len(c) <= order + 1:
            out = np.zeros(order + 1, dtype=complex)
            out[: len(c)] = c
            return cls(out, EXACT)
        return cls(c[: order + 1], _absorb(EXACT, c[order + 1 :], order + 1))

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls.polynomial([value], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return self.tail is not None and self.tail.exact

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, scale(_coerce(other, self.order), -1.0))

    def __rsub__(self, other):
        return add(_coerce(other, self.order), scale(self, -1.0))

    def __neg__(self):
        return scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __call__(self, z):
        return evaluate(self, z)

    def truncate(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return self
        dropped = self.coeffs[order + 1 :]
        tail = None if self.tail is None else _absorb(self.tail, dropped, order + 1)
        return PowerSeries(self.coeffs[: order + 1], tail, self.radius)

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        more = ", ..." if self.order >= 6 else ""
        return f"PowerSeries([{head}{more}], order={self.order}, tail={self.tail})"


def _coerce(x, order: int) -> PowerSeries:
    if isinstance(x, PowerSeries):
        return x
    return PowerSeries.constant(complex(x), order)


def _absorb(tail: Tail, dropped: np.ndarray, start: int) -> Tail:
    """Widen ``tail`` so it also covers ``dropped`` (indices ``start, start+1, ...``)."""
    dropped = np.asarray(dropped)
    nz = np.flatnonzero(dropped)
    if nz.size == 0:
        return tail
    rate = tail.rate if math.isfinite(tail.rate) else 2.0
    n = start + nz
    # log-space keeps rate**n finite for long drops
    logs = np.log(np.abs(dropped[nz])) + n * math.log(rate)
    extra = float(np.exp(logs.max()))
    return Tail(tail.bound + extra, rate)


def _combine_rate(*tails: Tail) -> float:
    return min(t.rate for t in tails)


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    coeffs = a.coeffs[: n + 1] + b.coeffs[: n + 1]
    if a.tail is None or b.tail is None:
        return PowerSeries(coeffs, None)
    ta, tb = a.truncate(n).tail, b.truncate(n).tail
    if ta.exact and tb.exact:
        return PowerSeries(coeffs, EXACT)
    rate = _combine_rate(ta, tb)
    # an exact summand has no decay constraint; reassert it at the common rate
    if ta.exact:
        tail = Tail(tb.bound, rate)
    elif tb.exact:
        tail = Tail(ta.bound, rate)
    else:
        tail = Tail(ta.bound + tb.bound, rate)
    return PowerSeries(coeffs, tail)


def scale(a: PowerSeries, c: complex) -> PowerSeries:
    c = complex(c)
    tail = None if a.tail is None else Tail(a.tail.bound * abs(c), a.tail.rate)
    return PowerSeries(a.coeffs * c, tail, a.radius)


def shift(a: PowerSeries, k: int = 1) -> PowerSeries:
    """Multiply by ``z**k``; the order grows by ``k``."""
    coeffs = np.concatenate([np.zeros(k, dtype=complex), a.coeffs])
    tail = a.tail
    if tail is not None and not tail.exact:
        tail = Tail(tail.bound * tail.rate**k, tail.rate)
    return PowerSeries(coeffs, tail, a.radius)


def _majorant(a: PowerSeries, r: float) -> float:
    """Upper bound for ``max |a(z)|`` on ``|z| = r`` including the tail."""
    n = np.arange(a.order + 1)
    m = float(np.sum(np.abs(a.coeffs) * r**n))
    t = a.tail
    if not t.exact:
        q = r / t.rate
        m += t.bound * q ** (a.order + 1) / (1.0 - q)
    return m


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the smaller order.

    The tail comes from a Cauchy estimate on a circle strictly inside both
    regions of convergence, so it covers every dropped product term.
    """
    n = min(a.order, b.order)
    full = np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])
    coeffs = full[: n + 1]
    if a.tail is None or b.tail is None:
        return PowerSeries(coeffs, None)
    a, b = a.truncate(n), b.truncate(n)
    if a.tail.exact and b.tail.exact:
        return PowerSeries(coeffs, _absorb(EXACT, full[n + 1 :], n + 1))
    rate = _combine_rate(*(t for t in (a.tail, b.tail) if not t.exact))
    if rate <= 1.0:
        return PowerSeries(coeffs, None)
    r = math.sqrt(rate)
    return PowerSeries(coeffs, Tail(_majorant(a, r) * _majorant(b, r), r))


def reciprocal(a: PowerSeries, eps_div: float = EPS_DIV) -> PowerSeries:
    """Series ``b`` with ``a*b = 1 + O(z**(N+1))``; the result carries no tail."""
    c = a.coeffs
    if abs(c[0]) <= eps_div:
        raise NearZeroConstantTerm(f"constant term {c[0]!r} is below {eps_div:g}")
    n = a.order
    b = np.zeros(n + 1, dtype=complex)
    b[0] = 1.0 / c[0]
    for k in range(1, n + 1):
        b[k] = -np.dot(c[1 : k + 1], b[k - 1 :: -1][:k]) / c[0]
    return PowerSeries(b, None)


def _max_weighted_geometric(start: int, q: float) -> float:
    """``max_{m >= start} (m+1) * q**m`` for ``0 < q < 1``."""
    m_star = -1.0 / math.log(q) - 1.0
    cands = {start, max(start, math.floor(m_star)), max(start, math.ceil(m_star))}
    return max((m + 1) * q**m for m in cands)


def differentiate(a: PowerSeries) -> PowerSeries:
    if a.order == 0:
        return PowerSeries([0.0], EXACT if a.exact else None)
    coeffs = a.coeffs[1:] * np.arange(1, a.order + 1)
    tail = a.tail
    if tail is not None and not tail.exact:
        if tail.rate <= 1.0:
            tail = None
        else:
            # (m+1)|c_{m+1}| <= T/rho * (m+1) (r/rho)**m * r**(-m), r = sqrt(rho)
            r = math.sqrt(tail.rate)
            k = _max_weighted_geometric(a.order, r / tail.rate)
            tail = Tail(tail.bound / tail.rate * k, r)
    return PowerSeries(coeffs, tail)


def integrate0(a: PowerSeries) -> PowerSeries:
    """Term-wise antiderivative vanishing at 0; the order grows by one."""
    coeffs = np.concatenate([[0.0], a.coeffs / np.arange(1, a.order + 2)])
    tail = a.tail
    if tail is not None and not tail.exact:
        tail = Tail(tail.bound * tail.rate, tail.rate)
    return PowerSeries(coeffs, tail)


def evaluate(a: PowerSeries, z):
    """Horner evaluation of the truncated polynomial (vectorized over ``z``)."""
    z = np.asarray(z, dtype=complex)
    out = np.zeros_like(z)
    for c in a.coeffs[::-1]:
        out = out * z + c
    return out if out.ndim else complex(out)


def error_radius(a: PowerSeries, z):
    """Guaranteed bound on ``|true value - evaluate(a, z)|``.

    Zero for exact polynomials, ``inf`` when the tail is unknown or ``|z|``
    lies outside the tail's circle of convergence.
    """
    az = np.abs(np.asarray(z, dtype=complex))
    t = a.tail
    if t is None:
        out = np.full_like(az, np.inf)
    elif t.exact:
        out = np.zeros_like(az)
    else:
        q = az / t.rate
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.where(q < 1.0, t.bound * q ** (a.order + 1) / (1.0 - q), np.inf)
    return out if out.ndim else float(out)


def weighted_tail_sum(tail: Optional[Tail], start: int, weight: Callable[[int], float]) -> float:
    """Rigorous bound on ``sum_{n >= start} weight(n) * T * rho**(-n)``.

    ``weight`` must be nonnegative with ``weight(n+1)/weight(n)`` eventually
    nonincreasing (polynomials and binomials in ``n`` qualify).
    """
    if tail is None:
        return math.inf
    if tail.exact:
        return 0.0
    x = 1.0 / tail.rate
    if x >= 1.0:
        return math.inf
    total = 0.0
    n = start
    log_x = math.log(x)
    while True:
        w = weight(n)
        term = math.exp(math.log(w) + n * log_x) if w > 0 else 0.0
        total += term
        w_next = weight(n + 1)
        ratio = (w_next / w) * x if w > 0 else x
        if ratio < 1.0 and n > start + 8 and term <= 1e-17 * max(total, 1e-300):
            total += term * ratio / (1.0 - ratio)
            break
        if n - start > 200000:
            return math.inf
        n += 1
    # a relative pad covers rounding in the summation above
    return tail.bound * total * (1.0 + 1e-12)
