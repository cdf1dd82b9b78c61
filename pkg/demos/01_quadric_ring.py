#!/usr/bin/env python3
"""Tour of the split-quadric Chow ring: basis, reductions, products, degree."""

from quadchow import Cycle, L, QuadricRing, subquadric_dim


def show(label, value):
    print("%-28s %s" % (label, value))


ring = QuadricRing(5)
print("Split quadric of dimension n = 5, so [n/2] =", ring.half)
print("Additive basis:", ", ".join(str(b) for b in ring.basis()))
print()

print("Powers of the hyperplane class reduce past the middle codimension:")
for k in range(0, 7):
    show("  h^%d =" % k, ring.h_power(k))
print()

print("Products follow h^a*l_b = l_(b-a) and dimension vanishing:")
l2 = Cycle(ring, 3, {L(2): 1})
show("  h^1 * l_2 =", ring.h_power(1) * l2)
show("  h^3 * l_2 =", ring.h_power(3) * l2)
show("  l_2 * l_2 =", l2 * l2)
print()

even = QuadricRing(4)
mid = Cycle(even, 2, {L(2): 1})
print("For even n the middle square is pinned by the instability axiom:")
show("  n=4: l_2 * l_2 =", mid * mid)
flipped = QuadricRing(4, flip_middle_square=True)
mid_f = Cycle(flipped, 2, {L(2): 1})
show("  opposite convention:", mid_f * mid_f)
print()

print("The degree map reads off the coefficient of the point class:")
show("  deg(h^5) =", ring.h_power(5).degree())
show("  deg(h^2 * l_2) =", (ring.h_power(2) * l2).degree())
print()

print("Subquadric dimensions d = 2^t - 1 with n = d + s, 0 <= s < 2^t:")
for n in (1, 5, 7, 12, 24):
    t, d = subquadric_dim(n)
    print("  n = %2d  ->  t = %d, d = %2d, s = %d" % (n, t, d, n - d))
