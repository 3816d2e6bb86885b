from __future__ import annotations

import numpy as np
import pytest

from univalence import gallery
from univalence.errors import InvalidParameter
from univalence.model import u_operator, z_over_f


@pytest.mark.parametrize("name", sorted(gallery.GALLERY))
def test_every_entry_builds_and_normalizes(name):
    entry = gallery.GALLERY[name]
    defaults = {"p": 0.5, "lam": 0.5, "a": 0.5, "n": 3, "theta": 0.3}
    f = gallery.build(name, **{k: defaults[k] for k in entry.params})
    s = z_over_f(f, 8)
    assert s.coeffs[0] == pytest.approx(1.0)
    assert f.pole == 0.5


def test_unknown_parameter_rejected():
    with pytest.raises(TypeError):
        gallery.build("k_p", p=0.5, lam=1.0)
    with pytest.raises(KeyError):
        gallery.build("nope", p=0.5)


def test_parameter_domains():
    with pytest.raises(InvalidParameter):
        gallery.f_a(0.5, 1.2)
    with pytest.raises(InvalidParameter):
        gallery.f_n_sharp(0.5, 2)


def test_g_onset_closed_form():
    assert gallery.g_onset(0.5) == pytest.approx(5 / 7)


def test_extremal_coefficients():
    for n in range(2, 7):
        b = z_over_f(gallery.extremal_eq6(0.3, n, 0.7), n + 2).coeffs
        assert abs(b[n]) == pytest.approx(0.7 / (n - 1), abs=1e-12)


def test_f_theta_u():
    f = gallery.f_theta(0.4, 0.6, 1.1)
    u = u_operator(f, 6).coeffs
    np.testing.assert_allclose(u[2], -0.6 * np.exp(1.1j), atol=1e-14)


@pytest.mark.parametrize("p,lam", [(0.5, 0.5), (0.2, 0.25)])
def test_verify_gallery(p, lam):
    rep = gallery.verify_gallery(p, lam)
    assert rep.passed, [c.name for c in rep.failures]
    assert len(rep.claims) >= 20
