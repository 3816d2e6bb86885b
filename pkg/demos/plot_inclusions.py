#!/usr/bin/env python
r"""
Old and new criteria side by side
=================================

The bound ``|U_f| < lam`` admits the kernel, while the older bound
``|U_f| < lam mu(p)`` does not.  A member can also be univalent without
satisfying either.
"""
from univalence import gallery
from univalence.certify import certify_thmB, certify_vp, mu, onset_radius
from univalence.model import u_operator
from univalence.oracle import injectivity_scan

p = 0.5
print("mu(p) =", mu(p))

k = gallery.k_p_lambda(p, 1.0)
for fn in (certify_vp, certify_thmB):
    r = fn(k, 1.0)
    print(f"kernel {r.method:5s} threshold {r.threshold:.4f} -> {r.verdict} (value {r.value:.4f})")

# f_a has U = -0.9 z^2: too large for lam = 0.5 yet still one-to-one.
fa = gallery.f_a(p, 0.9)
r = certify_vp(fa, 0.5)
print(f"\nf_a against lam = 0.5: {r.verdict}, witness {r.witness:.4f}")
print("oracle:", injectivity_scan(fa).verdict)

# g fails the criterion near the rim; the onset sits at (1 + p^2)/(1 + 2p - p^2).
g = gallery.g_bpw(p)
r = certify_vp(g, 1.0)
print(f"\ng: {r.verdict} at z = {r.witness}, |U| = {r.value:.3f}")
print("g: sup|U| reaches 1 at r = %.6f (closed form %.6f)" % (onset_radius(u_operator(g), 1.0), gallery.g_onset(p)))
