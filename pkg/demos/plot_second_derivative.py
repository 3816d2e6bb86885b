#!/usr/bin/env python
r"""
A sufficient condition that is not necessary
============================================

``h`` has ``U_h = -z^3`` so ``|U_h| < 1``, but ``(z/h)'' = 3z`` exceeds 2 once
``|z| > 2/3``.  The coefficient-sum test still certifies it.
"""
import numpy as np

from univalence import gallery
from univalence.certify import certify_second_derivative, certify_vp, coefficient_tests, onset_radius
from univalence.model import derivative_series, u_operator

h = gallery.h_example(0.5)
for t in coefficient_tests(h, 1.0):
    print(f"{t.name:8s} total {t.total:.6f} threshold {t.threshold} -> {t.status}")

print("\nvp:", certify_vp(h, 1.0).verdict)
r = certify_second_derivative(h, 1.0)
print(f"second derivative: {r.verdict}, sampled sup {r.value:.6f} at {r.witness:.4f}")
print("onset of |(z/h)''| > 2 at r = %.6f" % onset_radius(derivative_series(h, 2), 2.0))

# A coarse radial profile of both quantities.
d2 = derivative_series(h, 2)
u = u_operator(h)
for r in np.linspace(0.1, 0.999, 6):
    z = r * np.exp(2j * np.pi * np.arange(360) / 360)
    print(f"r = {r:.3f}  max|U| = {np.abs(u(z)).max():.4f}  max|(z/h)''| = {np.abs(d2(z)).max():.4f}")
