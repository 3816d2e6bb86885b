#!/usr/bin/env python
r"""
Brute-force injectivity evidence
================================

Every grid value is pulled back through the rational form; a second preimage
in the disk is a collision.  A clean scan is evidence, not a proof.
"""
import time

from univalence import gallery
from univalence.oracle import OracleConfig, critical_points, injectivity_scan

for f in (gallery.k_p(0.5), gallery.f_a(0.5, 0.9), gallery.g_bpw(0.5), gallery.twopole(0.5)):
    t0 = time.perf_counter()
    rep = injectivity_scan(f)
    print(f"{f.name:10s} {rep.verdict:15s} ({time.perf_counter() - t0:.2f}s)", end="")
    if rep.critical_point:
        print(f"  f' = 0 at {rep.critical_point[0]:.10f}")
    else:
        print()

# Hide the critical point check to watch the preimage search find a collision.
import univalence.oracle as oracle
saved = oracle.critical_points
oracle.critical_points = lambda f: []
rep = oracle.injectivity_scan(gallery.twopole(0.5), OracleConfig(n_r=60, n_theta=180))
oracle.critical_points = saved
z1, z2, gap = rep.witness
print(f"\ncollision: f({z1:.4f}) = f({z2:.4f}) up to {gap:.1e}")
print("critical points of the two-pole map:", critical_points(gallery.twopole(0.5)))
