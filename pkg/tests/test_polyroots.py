from __future__ import annotations

import numpy as np
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from univalence import polyroots

cplx = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


@given(st.lists(cplx, min_size=1, max_size=7, unique=True))
def test_roots_recover_distinct_roots(rs):
    rs = np.array(rs)
    if len(rs) > 1:
        gaps = np.abs(rs[:, None] - rs[None, :]) + np.eye(len(rs))
        if gaps.min() < 1e-2:
            return
    c = np.polynomial.polynomial.polyfromroots(rs)
    got = polyroots.roots(c)
    assert len(got) == len(rs)
    for r in rs:
        assert np.min(np.abs(got - r)) < 1e-6 * max(1.0, abs(r))


def test_zero_roots_and_degenerate_inputs():
    got = np.sort_complex(polyroots.roots([0, 0, -1, 1]))
    np.testing.assert_allclose(got, [0, 0, 1], atol=1e-12)
    assert polyroots.roots([5.0]).size == 0
    np.testing.assert_allclose(polyroots.trim([1, 2, 0, 0]), [1, 2])


def test_rational_derivative_against_sympy():
    z = sp.symbols("z")
    num, den = [1, 2, -1], [1, -3, 2]
    expr = (1 + 2 * z - z**2) / (1 - 3 * z + 2 * z**2)
    for m in range(4):
        n_m, d_m = polyroots.rational_derivative(num, den, m)
        want = complex(sp.diff(expr, z, m).subs(z, sp.Rational(3, 10) + sp.I / 5))
        got = polyroots.polyval(n_m, 0.3 + 0.2j) / polyroots.polyval(d_m, 0.3 + 0.2j)
        assert abs(got - want) <= 1e-10 * max(1.0, abs(want))


def test_polyder_and_polyval():
    np.testing.assert_allclose(polyroots.polyder([1, 1, 1, 1], 2), [2, 6])
    assert polyroots.polyval([1, 0, 1], 2j) == -3
