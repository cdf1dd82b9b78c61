#!/usr/bin/env python3
"""Mod-2 Steenrod operations, Chern classes of -T, and their compatibility."""

from quadchow import (
    Cycle,
    H,
    L,
    Poly,
    QuadricRing,
    binom_mod2,
    chern_neg_tangent,
    chern_series,
    check_wu,
    steenrod,
    y,
)

ring = QuadricRing(6)
print("Steenrod operations on the quadric side (n = 6):")
for a in range(0, 4):
    print("  S^%d(h^2) = %s" % (a, ring.sq_basis(a, H(2))))
for a in range(0, 3):
    print("  S^%d(l_3) = %s" % (a, ring.sq_basis(a, L(3))))
print()

print("Instability on a basis class u of codimension c:")
u = Cycle(ring, 4, {L(2): 1})
print("  S^0(l_2) = %s  (identity)" % ring.sq_basis(0, L(2)))
print("  S^4(l_2) = %s  = l_2^2 mod 2" % ring.sq_basis(4, L(2)))
print("  S^5(l_2) = %s  (vanishes above the codimension)" % ring.sq_basis(5, L(2)))
print()

print("On the formal side the same axioms hold for the unknown coefficients:")
p = Poly.from_symbol(y(3))
for a in (0, 2, 3, 4):
    print("  S^%d(y^3) = %s" % (a, steenrod(a, p)))
print()

d = 7
print("Chern classes of -T on a quadric of dimension d = %d:" % d)
series = chern_series(d)
print("  series coefficients:", list(series.coeffs))
print("  all odd:", all(c % 2 == 1 for c in series.coeffs), "(d is 2^t - 1)")
for i in (1, 4, 6):
    print(
        "  c_%d = %-12s  mod 2 matches binom(-d-2,%d) = %d"
        % (i, chern_neg_tangent(d)[i], i, binom_mod2(-d - 2, i))
    )
print()

print("Compatibility of S^r with the projection twisted by these classes:")
for dd, r in [(3, 2), (5, 4), (7, 6)]:
    rep = check_wu(dd, r)
    print("  d=%d r=%d: %s (%s)" % (dd, r, rep.status, rep.note))
