#!/usr/bin/env python
r"""
The U operator from a power series
==================================

A member ``f`` is stored as a rational function.  Its reciprocal ``z/f`` is
expanded as a truncated power series carrying a rigorous geometric tail, and
``U_f`` follows coefficient by coefficient.
"""
import numpy as np

from univalence import gallery
from univalence.model import exterior_transform_check, taylor_of_f, u_operator, z_over_f
from univalence.series import error_radius

# The kernel with pole 1/2.  z/f is a quadratic, so its series is exact.
k = gallery.k_p_lambda(0.5, 1.0)
print("residue at p:", k.residue)
print("z/f:", z_over_f(k, 4).coeffs.real)
print("f  :", taylor_of_f(k, 6).coeffs.real)   # 0, 1, 2.5, 5.25, ...
print("U  :", u_operator(k, 4).coeffs.real)    # -z^2

# g has a genuinely infinite z/f; the tail bounds the truncation error.
g = gallery.g_bpw(0.5)
s = u_operator(g, 48)
print("\ng: U tail", s.tail)
for z in [0.5, 0.9j, 0.99]:
    print(f"  z = {z}: series {s(z):.10f}, direct {g.u(z):.10f}, error bound {error_radius(s, z):.2e}")

# The same U seen from the exterior map F(zeta) = 1/f(1/zeta): F' - 1 = U(1/zeta).
rep = exterior_transform_check(g)
print("\nexterior identity: max deviation %.2e, |F(1/p)| = %.1e" % (rep.max_deviation, rep.pole_value))
