from __future__ import annotations


import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from univalence import gallery
from univalence.certify import (CertifyConfig, _three_stage, Verdict, certify_nth, certify_second_derivative, certify_thmB,
                                certify_vp, coefficient_tests, mu, onset_radius, sample_radii, sup_modulus)
from univalence.errors import BadOrder, ExtraPoleInDisk, ZeroInDisk
from univalence.model import derivative_series, from_rational, from_z_over_f, u_operator
from univalence.series import PowerSeries


def test_mu():
    assert mu(0.5) == pytest.approx(1 / 9)


def test_kernel_verdicts():
    k = gallery.k_p_lambda(0.5, 1.0)
    r = certify_vp(k, 1.0)
    assert r.verdict is Verdict.CERTIFIED_DISK and r.value == pytest.approx(1.0) and r.method == "vp"
    b = certify_thmB(k, 1.0)
    assert b.verdict is Verdict.REFUTED and b.threshold == pytest.approx(1 / 9)
    assert abs(b.witness) <= 0.999 + 1e-12
    assert certify_second_derivative(k, 1.0).verdict is Verdict.CERTIFIED_DISK


def test_g_refuted_on_real_axis():
    r = certify_vp(gallery.g_bpw(0.5), 1.0)
    assert r.verdict is Verdict.REFUTED
    assert abs(r.witness.imag) < 1e-6 and r.witness.real > 0.99
    assert r.margin < 0


def test_sup_estimate_monotone_for_h():
    u = u_operator(gallery.h_example(0.5))
    est = sup_modulus(u)
    assert est.monotone
    np.testing.assert_allclose(est.max_per_radius, est.radii**3, rtol=1e-9)
    assert est.value == pytest.approx(0.999**3, rel=1e-9)


def test_radii_layout():
    r = sample_radii(0.999, 24)
    assert np.all(np.diff(r) > 0) and r[-1] == 0.999


def test_onset_radius_h():
    d2 = derivative_series(gallery.h_example(0.5), 2)
    assert onset_radius(d2, 2.0) == pytest.approx(2 / 3, abs=1e-5)


def test_sampled_stage_used_without_tail():
    # a series with unknown tail falls through to sampling
    s = PowerSeries([0, 0, 0.25], None)
    res = _three_stage("demo", 1.0, None, s, s, CertifyConfig())
    assert res.verdict is Verdict.CERTIFIED_SAMPLED and res.r_max == 0.999


def test_nth_rejects_small_n():
    with pytest.raises(BadOrder):
        certify_nth(gallery.k_p(0.5), 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_nth_equality(n):
    assert certify_nth(gallery.k_p(0.5), n).value == pytest.approx(1.0, abs=1e-10)
    assert certify_nth(gallery.f_n_sharp(0.5, n), n).value == pytest.approx(1.0, abs=1e-10)


def test_coefficient_tests_h():
    t = {c.name: c for c in coefficient_tests(gallery.h_example(0.5), 1.0)}
    assert t["thm5i"].status == "pass" and t["thm5i"].rigorous
    assert t["thm5i"].total == pytest.approx(1.0)
    assert t["thm5ii"].status == "fail" and t["thm5ii"].total == pytest.approx(3.0)


def test_rigorous_tail_used_for_rational_zf():
    # z/f = (1 - 2z)/(1 - z/3) has an infinite series with a geometric tail
    f = from_rational([0, 1, -1 / 3], [1, -2], 0.5)
    tests = coefficient_tests(f, 1.0)
    assert all(t.rigorous for t in tests)
    # sum (n-1)|b_n| with b_n = (1/3 - 2) 3^{-(n-1)} for n >= 1
    want = sum((n - 1) * (5 / 3) * 3.0 ** (-(n - 1)) for n in range(2, 400))
    assert tests[0].total == pytest.approx(want, rel=1e-9)
    assert tests[0].total >= want * (1 - 1e-14)


def test_second_derivative_needs_nonvanishing():
    f = from_rational([0, 1, -3], [1, -2], 0.5)
    with pytest.raises(ZeroInDisk):
        certify_second_derivative(f)


def test_config_validation():
    with pytest.raises(ValueError):
        CertifyConfig(r_max=1.0)


CERTIFIED = (Verdict.CERTIFIED_DISK, Verdict.CERTIFIED_SAMPLED)
FAST = CertifyConfig(n_radii=8, n_angles=180)


def member(tail, p):
    b = np.concatenate([[1.0, 0.0], tail]).astype(complex)
    b[1] = -(1.0 + sum(c * p ** (k + 2) for k, c in enumerate(tail))) / p
    return from_z_over_f(b, p)


members = st.tuples(st.lists(st.complex_numbers(max_magnitude=0.6, allow_nan=False), min_size=1, max_size=4),
                    st.floats(0.15, 0.85))


@given(members, st.floats(0.2, 1.0))
def test_property_implications(mp, lam):
    try:
        f = member(*mp)
    except ExtraPoleInDisk:
        return
    t = {c.name: c for c in coefficient_tests(f, lam)}
    if t["thm5ii"].status == "pass":
        assert t["thm5i"].status == "pass"
    if certify_thmB(f, lam, FAST).verdict in CERTIFIED:
        assert certify_vp(f, lam, FAST).verdict in CERTIFIED


@given(members, st.floats(0.2, 1.0))
def test_property_soundness(mp, lam):
    try:
        f = member(*mp)
    except ExtraPoleInDisk:
        return
    z = 0.99 * np.sqrt(np.linspace(0.01, 1, 15))[:, None] * np.exp(2j * np.pi * np.arange(90) / 90)[None, :]
    if certify_vp(f, lam, FAST).verdict is Verdict.CERTIFIED_DISK:
        assert np.max(np.abs(f.u(z))) <= lam + 1e-9
    if certify_second_derivative(f, lam, FAST).verdict in CERTIFIED:
        # |(z/f)''| <= 2 lam gives |U_f(z)| <= lam |z|^2 <= lam |z|
        assert np.all(np.abs(f.u(z)) <= lam * np.abs(z) + 1e-8)
