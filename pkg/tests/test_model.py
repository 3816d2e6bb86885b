from __future__ import annotations

import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from univalence import gallery
from univalence.errors import (DegeneratePole, ExtraPoleInDisk, InvalidLambda, InvalidParameter, NotNormalized,
                               PoleMissingAtP, ZeroInDisk)
from univalence.model import (SchwarzSampler, derivative_series, exterior_transform_check, from_rational,
                              from_schwarz, from_z_over_f, taylor_of_f, u_operator, z_over_f)

Z = sp.symbols("z")


def sympy_series(expr, n):
    poly = sp.series(expr, Z, 0, n + 1).removeO()
    return np.array([complex(poly.coeff(Z, k)) for k in range(n + 1)])


def test_kernel_series_against_sympy():
    p = sp.Rational(1, 2)
    f = -p * Z / ((Z - p) * (1 - p * Z))
    k = gallery.k_p(0.5)
    np.testing.assert_allclose(z_over_f(k, 6).coeffs, sympy_series(sp.cancel(Z / f), 6), atol=1e-14)
    np.testing.assert_allclose(taylor_of_f(k, 8).coeffs, sympy_series(f, 8), atol=1e-12)
    np.testing.assert_allclose(taylor_of_f(k, 4).coeffs[:4], [0, 1, 2.5, 5.25])
    assert k.residue == pytest.approx(-1 / 3)


@pytest.mark.parametrize("name", ["g_bpw", "h_example", "twopole"])
def test_u_series_against_sympy(name):
    f = gallery.build(name, p=0.5)
    expr = sp.nsimplify(f.num[1].real) * Z + sum(sp.nsimplify(c.real) * Z**k for k, c in enumerate(f.num) if k > 1)
    den = sum(sp.nsimplify(c.real) * Z**k for k, c in enumerate(f.den))
    zf = sp.cancel(Z * den / expr)
    u = sp.cancel(-Z * sp.diff(zf, Z) + zf - 1)
    np.testing.assert_allclose(u_operator(f, 12).coeffs, sympy_series(u, 12), atol=1e-10)


def test_u_direct_matches_series():
    f = gallery.g_bpw(0.5)
    z = 0.6 * np.exp(1j * np.linspace(0, 6, 11))
    np.testing.assert_allclose(f.u(z), u_operator(f, 80)(z), atol=1e-12)


def test_twopole_values():
    f = gallery.twopole(0.5)
    np.testing.assert_allclose(u_operator(f, 8).coeffs, [0, 0, -2, 0, 0, 0, 0, 0, 0], atol=1e-14)
    assert f.residue == pytest.approx(-0.5)


def test_validation_errors():
    with pytest.raises(NotNormalized):
        from_rational([1, 1], [1, -2], 0.5)
    with pytest.raises(NotNormalized):
        from_rational([0, 2], [1, -2], 0.5)
    with pytest.raises(PoleMissingAtP):
        from_rational([0, 1], [1, -3], 0.5)
    with pytest.raises(DegeneratePole):
        from_rational([0, 1], [1, -4, 4], 0.5)
    with pytest.raises(ExtraPoleInDisk):
        from_rational([0, 1], np.polynomial.polynomial.polymul([1, -2], [1, 5]), 0.5)
    with pytest.raises(PoleMissingAtP):
        from_rational([0, 1, -2], [1, -2], 0.5)
    with pytest.raises(InvalidParameter):
        from_z_over_f([1, -2], 1.5)
    with pytest.raises(InvalidLambda):
        from_schwarz(SchwarzSampler([0.5]), 1.5, 0.5)
    with pytest.raises(InvalidParameter):
        SchwarzSampler([0.8, 0.5])


def test_zero_in_disk_raised_for_z_over_f():
    # f = z (1 - 3z) / (1 - 2z) vanishes at 1/3
    f = from_rational([0, 1, -3], [1, -2], 0.5)
    with pytest.raises(ZeroInDisk):
        z_over_f(f)
    with pytest.raises(ZeroInDisk):
        from_rational([0, 1, -3], [1, -2], 0.5, check_nonvanishing=True)


def test_derivative_series_of_h():
    d2 = derivative_series(gallery.h_example(0.5), 2, 10)
    np.testing.assert_allclose(d2.coeffs[:3], [0, 3, 0], atol=1e-14)


schwarz_polys = st.lists(st.complex_numbers(max_magnitude=1, allow_nan=False), min_size=1, max_size=5)


@given(schwarz_polys, st.floats(0.1, 0.9), st.floats(0.05, 1.0))
def test_from_schwarz_gives_bounded_u(poly, p, lam):
    if max(abs(c) for c in poly) < 1e-3:
        return
    w = SchwarzSampler.normalized(poly)
    try:
        f = from_schwarz(w, lam, p)
    except ExtraPoleInDisk:
        return
    # U_f = -lam z w(z) exactly
    u = u_operator(f, len(poly) + 3)
    np.testing.assert_allclose(u.coeffs[2 : len(poly) + 2], -lam * w.coeffs, atol=1e-12)
    z = 0.999 * np.exp(2j * np.pi * np.arange(256) / 256)
    assert np.max(np.abs(f.u(z))) <= lam + 1e-8


@given(st.lists(st.complex_numbers(max_magnitude=0.3, allow_nan=False), min_size=1, max_size=4),
       st.floats(0.2, 0.8))
def test_conjugation_closure(tail, p):
    # b_1 solved so that z/f vanishes at p
    b = np.concatenate([[1.0, 0.0], tail]).astype(complex)
    b[1] = -(1.0 + sum(c * p ** (k + 2) for k, c in enumerate(tail))) / p
    try:
        f = from_z_over_f(b, p)
    except (ExtraPoleInDisk, PoleMissingAtP):
        return
    g = f.conjugate()
    np.testing.assert_allclose(z_over_f(g, 8).coeffs, np.conj(z_over_f(f, 8).coeffs), atol=1e-14)
    assert g.pole == f.pole


def test_exterior_identity_kernel():
    rep = exterior_transform_check(gallery.k_p(0.5))
    assert rep.max_deviation < 1e-6 and rep.pole_value < 1e-10
