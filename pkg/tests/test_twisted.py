"""Twisted cycles: external products, Cartan operations, projection, builders."""

import pytest

from quadchow import (
    Cycle,
    H,
    L,
    Poly,
    QuadricRing,
    TCycle,
    cartan_sq,
    external,
    generic_xbar,
    integral_xbar,
    pr_star,
    steenrod,
    subquadric_dim,
    y,
    z,
    zint,
)


def one_term(ring, b):
    return Cycle(ring, ring.codim_of(b), {b: 1})


def test_external_examples():
    r5 = QuadricRing(5)
    t = external(r5.unit(), Poly.from_symbol(y(3)))
    assert t.terms == {(H(0), (y(3),)): 1}
    assert external(r5.zero(2), Poly.from_symbol(y(3))).is_zero()
    t = external(2 * one_term(r5, L(1)), Poly.from_symbol(z(2)))
    assert t.terms == {(L(1), (z(2),)): 2}


def test_twisted_mul_examples():
    r4 = QuadricRing(4)
    u, v = Poly.from_symbol(y(1)), Poly.from_symbol(y(2))
    a = external(r4.unit(), u)
    b = external(r4.unit(), v)
    assert a * b == external(r4.unit(), u * v)
    zj = Poly.from_symbol(zint(1))
    mid = external(one_term(r4, L(2)), zj)
    assert mid * mid == external(one_term(r4, L(0)), zj * zj)
    flipped = QuadricRing(4, flip_middle_square=True)
    mid_f = external(one_term(flipped, L(2)), zj)
    assert (mid_f * mid_f).is_zero()
    assert (external(one_term(r4, L(1)), u) * external(one_term(r4, L(2)), v)).is_zero()


def test_cartan_sq_identity_and_instability():
    r5 = QuadricRing(5)
    x = generic_xbar(r5, 2, 0, "thm1")
    assert cartan_sq(0, x) == x
    for r in range(x.codim + 1, x.codim + 4):
        assert cartan_sq(r, x).is_zero(), r


def test_cartan_on_unit_quadric_factor():
    # S^r(h^0 x y^m) = h^0 x S^r(y^m): the shifted h-terms all carry binom(0, a) = 0
    r9 = QuadricRing(9)
    for m, r in [(4, 1), (4, 3), (3, 2)]:
        w = external(r9.unit(), Poly.from_symbol(y(m)))
        assert cartan_sq(r, w) == external(r9.unit(), steenrod(r, Poly.from_symbol(y(m))))


def test_cartan_quadric_factor_on_subspace_classes():
    # per summand the quadric part of S^a(l_b x u) is binom(n+1-b, a-l) l_(b-a+l)
    r7 = QuadricRing(7)
    w = external(one_term(r7, L(3)), Poly.from_symbol(y(5)))
    got = cartan_sq(2, w)
    expect = TCycle.zero(r7, w.codim + 2)
    for lam in range(3):
        qc = r7.sq_basis(2 - lam, L(3))
        fp = steenrod(lam, Poly.from_symbol(y(5)))
        if qc.is_zero() or fp.is_zero():
            continue
        expect = expect + external(qc, fp)
    assert got == expect.reduce_mod(2)


def test_pr_star():
    r4 = QuadricRing(4)
    u = Poly.from_symbol(y(2))
    assert pr_star(external(one_term(r4, L(0)), u)) == u
    for k in range(r4.half + 1):
        assert pr_star(external(r4.h_power(k), u)).is_zero()
    assert pr_star(external(2 * one_term(r4, L(0)), u)) == 2 * u
    t = external(one_term(r4, L(0)), u)
    assert pr_star(t).codim == t.codim - 4


def test_generic_xbar_prop2_instance():
    r4 = QuadricRing(4)
    x = generic_xbar(r4, 3, 1, "prop2")
    assert x.terms == {
        (H(0), (y(3),)): 1,
        (H(1), (y(2),)): 1,
        (H(2), (y(1),)): 1,
        (L(2), (z(1),)): 1,
        (L(1), (z(0),)): 1,
    }
    assert all(c == 1 for c in x.terms.values())


def test_generic_xbar_thm1_drops_negative_z():
    x = generic_xbar(QuadricRing(5), 2, 0, "thm1")
    assert x.terms == {(H(0), (y(2),)): 1, (H(1), (y(1),)): 1, (H(2), (y(0),)): 1}
    assert (H(0), (y(2),)) in x.terms  # leading coefficient always present


def test_generic_xbar_preconditions_named():
    with pytest.raises(ValueError, match="m < n/2"):
        generic_xbar(QuadricRing(4), 3, 0, "thm1")
    with pytest.raises(ValueError, match="0 <= j <= m"):
        generic_xbar(QuadricRing(4), 1, 2, "thm1")
    with pytest.raises(ValueError, match=r"\[\(n\+1\)/2\]"):
        generic_xbar(QuadricRing(4), 4, 1, "prop2")


def test_integral_xbar():
    r2 = QuadricRing(2)
    for j in (0, 2):
        m = (r2.n + 1) // 2 + j
        xi = integral_xbar(r2, m, j)
        zpart = {k: v for k, v in xi.terms.items() if k[0].kind == "l"}
        expect = {(L(1), (zint(j),)): 1, (L(0), (zint(j - 1),)): 1} if j else {
            (L(1), (zint(0),)): 1
        }
        assert zpart == expect
        assert all(c == 1 for c in xi.terms.values())


def test_integral_xbar_reduces_to_generic():
    # renaming Y -> y, Z -> z on the integral cycle recovers the mod-2 one
    rename = {"Y": y, "Z": z}
    for n, j in [(2, 0), (5, 1), (7, 2)]:
        ring = QuadricRing(n)
        m = (n + 1) // 2 + j
        xi = integral_xbar(ring, m, j)
        x2 = generic_xbar(ring, m, j, "prop2")
        renamed = {
            (b, tuple(rename[s.kind](s.codim) for s in mono)): c
            for (b, mono), c in xi.terms.items()
        }
        assert renamed == x2.terms


def restrict_to_subquadric(tc, P):
    """Test oracle for the pullback: h^k restricts to h^k, l_b to l_(b-(n-d))."""
    Q = tc.ring
    shift = Q.n - P.n
    out = TCycle.zero(P, tc.codim)
    for (b, mono), c in tc.terms.items():
        if b.kind == "h":
            qc = P.h_power(b.index)
        else:
            idx = b.index - shift
            if idx < 0:
                continue
            qc = Cycle(P, P.n - idx, {L(idx): 1})
        out = out + external(c * qc, Poly.from_mono(mono))
    return out


def test_projection_formula_two_evaluation_orders():
    for n in range(2, 9):
        Q = QuadricRing(n)
        t, d = subquadric_dim(n)
        P = QuadricRing(d)
        tuples = [(m, j) for j in range(0, 3) for m in range(j, j + 3)
                  if 2 * m < n + 2 * j and j <= m]
        for m, j in tuples:
            s = generic_xbar(Q, m, j, "thm1")
            for i in range(d + 1):
                lhs = pr_star(external(Q.h_power(n - d + i), Poly.unit()) * s)
                rhs = pr_star(external(P.h_power(i), Poly.unit()) * restrict_to_subquadric(s, P))
                assert lhs == rhs, (n, m, j, i)


def test_twisted_mul_commutative_associative():
    for n in range(2, 9):
        ring = QuadricRing(n)
        singles = [
            external(one_term(ring, b), Poly.from_symbol(g))
            for b in ring.basis()
            for g in (y(1), z(2))
        ]
        for a in singles:
            for b in singles:
                assert a * b == b * a
        probe = singles[:: max(1, len(singles) // 6)]
        for a in probe:
            for b in probe:
                for c in probe:
                    assert (a * b) * c == a * (b * c)
