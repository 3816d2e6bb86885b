#!/usr/bin/env python
r"""
Probing the coefficient conjecture
==================================

The conjectured bound for ``|a_n|`` is attained by the kernel.  A seeded
random scan looks for members that beat it; none should appear.
"""
from univalence.coeffs import conjecture_bound, conjecture_scan

p, lam = 0.3, 0.7
for n in range(2, 9):
    print(f"n = {n}: bound {conjecture_bound(p, lam, n):.6f}")

rep = conjecture_scan(p, lam, (3, 8), trials=300, seed=7)
print(f"\n{rep.trials} members, {rep.rejected} rejected draws")
for n in rep.n_values:
    print(f"n = {n}: max ratio {rep.max_ratio[n]:.8f} (trial {rep.argmax_trial[n]}), "
          f"kernel ratio {rep.reference_ratio[n]:.12f}")
print("violations:", rep.violations or "none")
