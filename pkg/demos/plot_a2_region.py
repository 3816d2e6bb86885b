#!/usr/bin/env python
r"""
Where the second coefficient can live
=====================================

For members built from a Schwarz function ``w``, ``a_2`` fills the closed disc
``|a_2 - 1/p| <= lam p``.  Boundary points come from ``w`` constant and
unimodular.
"""
import numpy as np

from univalence import gallery
from univalence.coeffs import a2_region_check, sample_members

p, lam = 0.3, 0.7
offsets = np.array([a2_region_check(f, lam).offset for _, _, f, _ in sample_members(p, lam, 300, seed=5)])
print(f"radius lam p = {lam * p:.4f}")
print(f"300 random members: max offset {offsets.max():.6f}, mean {offsets.mean():.6f}")

hist, edges = np.histogram(offsets / (lam * p), bins=10, range=(0, 1))
for count, lo in zip(hist, edges):
    print(f"  {lo:.1f}-{lo + 0.1:.1f} {'#' * int(count // 3)}")

for theta in np.linspace(0, 2 * np.pi, 5)[:-1]:
    chk = a2_region_check(gallery.f_theta(p, lam, theta), lam)
    print(f"theta = {theta:.3f}: a2 = {chk.a2:.6f}, offset {chk.offset:.12f}")
