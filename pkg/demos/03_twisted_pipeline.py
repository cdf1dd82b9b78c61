#!/usr/bin/env python3
"""One walk through the congruence pipeline at a small parameter tuple.

Builds the generic cycle on (quadric) x (twisting variety), applies a
Steenrod operation through the Cartan formula, lifts it with opaque
integral representatives plus an explicit even error cycle, multiplies by
the integral h-power, projects, and shows the mod-4 residual collapse.
"""

from quadchow import (
    LiftPolicy,
    Poly,
    QuadricRing,
    cartan_sq,
    external,
    generic_unknown,
    generic_xbar,
    lift_cycle,
    pr_star,
    residual_mod,
    subquadric_dim,
)

n, m, j = 5, 2, 0
ring = QuadricRing(n)
t, d = subquadric_dim(n)
policy = LiftPolicy(n=n, m=m, j=j, midpoint_square_rule=False)
print("parameters: n=%d, m=%d, j=%d  ->  t=%d, d=%d" % (n, m, j, t, d))

xb = generic_xbar(ring, m, j, "thm1")
print("\ngeneric mod-2 cycle of codimension m:")
print(" ", xb)

total = Poly.zero(m + j)
for i in range(d + j - m, d + 1):
    r = d + j - i
    sq = cartan_sq(r, xb, top_square=False)
    lifted = lift_cycle(sq, policy)
    lifted = lifted + 2 * generic_unknown(ring, m + r, "i%d" % i)
    print("\ni = %d: S^%d then lift (+ even error cycle):" % (i, r))
    print(" ", lifted)
    pushed = pr_star(external(ring.h_power(n - d + i), Poly.unit()) * lifted)
    print("  h^%d * (...) projected: %s" % (n - d + i, pushed))
    total = total + pushed

target = 2 * policy.canonical_eps(0, j)
print("\ntotal:   ", total)
print("target:  ", target)
print("residual mod 4:", residual_mod(total, target, 4))
print("\nEvery opaque error coefficient entered multiplied by 4, so the")
print("congruence holds for arbitrary choices of integral representatives.")
