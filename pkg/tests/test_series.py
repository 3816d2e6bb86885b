from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from univalence.series import (EXACT, NearZeroConstantTerm, PowerSeries, Tail, add, differentiate, error_radius,
                               evaluate, integrate0, mul, reciprocal, scale, shift, weighted_tail_sum)

cplx = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)
polys = st.lists(cplx, min_size=1, max_size=8)


def ps(c, order=10):
    return PowerSeries.polynomial(c, order)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    A, B, C = ps(a), ps(b), ps(c)
    np.testing.assert_allclose((A + B).coeffs, (B + A).coeffs)
    np.testing.assert_allclose((A * B).coeffs, (B * A).coeffs, atol=1e-9)
    np.testing.assert_allclose(((A * B) * C).coeffs, (A * (B * C)).coeffs, rtol=1e-9, atol=1e-7)
    np.testing.assert_allclose((A * (B + C)).coeffs, (A * B + A * C).coeffs, rtol=1e-9, atol=1e-7)


@given(polys)
def test_reciprocal_identity(a):
    a = [complex(1.0 + abs(a[0]))] + a[1:]
    A = ps(a, 12)
    prod = mul(A, reciprocal(A))
    want = np.zeros(13)
    want[0] = 1.0
    scale_ = max(1.0, float(np.max(np.abs(prod.coeffs))))
    assert np.max(np.abs(prod.coeffs - want)) <= 1e-9 * scale_ * 1e3


@given(polys)
def test_differentiate_undoes_integrate(a):
    A = ps(a, 9)
    np.testing.assert_allclose(differentiate(integrate0(A)).coeffs, A.coeffs, atol=1e-12)


def test_geometric_series_matches_closed_form():
    # 1/(1 - z/2) = sum (z/2)^n
    s = reciprocal(ps([1, -0.5], 30))
    np.testing.assert_allclose(s.coeffs, 0.5 ** np.arange(31), rtol=1e-14)


def test_reciprocal_rejects_small_constant():
    with pytest.raises(NearZeroConstantTerm):
        reciprocal(ps([1e-14, 1.0]))
    with pytest.raises(ZeroDivisionError):
        reciprocal(ps([0.0, 1.0]))


def test_truncation_folds_into_a_valid_tail():
    c = 0.7 ** np.arange(40)
    s = PowerSeries.polynomial(c, 10)
    assert not s.exact
    n = np.arange(11, 40)
    assert np.all(np.abs(c[11:]) <= s.tail.coefficient_bound(n) * (1 + 1e-12))


def test_tail_validation():
    with pytest.raises(ValueError):
        Tail(-1.0, 2.0)
    with pytest.raises(ValueError):
        Tail(1.0, 0.5)
    assert isinstance(Tail(1, 2).bound, float)
    assert EXACT.exact


def test_mul_tail_covers_true_product():
    # (1/(1-z/2))^2 = sum (n+1) (z/2)^n
    g = PowerSeries(0.5 ** np.arange(21), Tail(1.0, 2.0))
    sq = mul(g, g)
    n = np.arange(21, 200)
    true = (n + 1) * 0.5**n
    assert np.all(true <= sq.tail.coefficient_bound(n))
    np.testing.assert_allclose(sq.coeffs, (np.arange(21) + 1) * 0.5 ** np.arange(21))


def test_error_radius_bounds_evaluation_error():
    g = PowerSeries(0.5 ** np.arange(21), Tail(1.0, 2.0))
    z = np.array([0.3, 0.9j, -1.5, 1.2 + 0.5j])
    true = 1.0 / (1.0 - z / 2)
    assert np.all(np.abs(true - evaluate(g, z)) <= error_radius(g, z))
    assert error_radius(g, 3.0) == math.inf
    assert error_radius(ps([1, 2]), 0.9) == 0.0
    assert error_radius(PowerSeries([1.0]), 0.1) == math.inf


def test_weighted_tail_sum_against_direct_sum():
    t = Tail(2.0, 1.5)
    w = lambda n: n * (n - 1.0)
    direct = sum(w(n) * 2.0 * 1.5 ** (-n) for n in range(11, 2000))
    got = weighted_tail_sum(t, 11, w)
    assert direct <= got <= direct * (1 + 1e-6)
    assert weighted_tail_sum(None, 3, w) == math.inf
    assert weighted_tail_sum(EXACT, 3, w) == 0.0
    assert weighted_tail_sum(Tail(1.0, 1.0), 3, w) == math.inf


def test_shift_scale_add_mixed_tails():
    g = PowerSeries(0.5 ** np.arange(11), Tail(1.0, 2.0))
    s = shift(g, 2)
    assert s.order == 12 and s.coeffs[2] == 1.0
    n = np.arange(13, 60)
    assert np.all(0.5 ** (n - 2) <= s.tail.coefficient_bound(n))
    assert scale(g, -2).tail.bound == 2.0
    h = add(g, ps([1, 1], 10))
    assert h.tail.rate == 2.0
    assert add(g, PowerSeries([1.0] * 11)).tail is None


def test_immutable_coefficients():
    s = ps([1, 2, 3])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


def test_differentiate_order_zero():
    d = differentiate(PowerSeries.polynomial([3.0], 0))
    assert d.order == 0 and d.coeffs[0] == 0 and d.exact
