"""Cycles on the product of a split quadric with a twisting variety.

A twisted cycle is a sum of external products (quadric basis class) x
(formal monomial), graded by total codimension.  One representation serves
both the integral and the mod-2 computations; the mod-2 meaning is obtained
by reducing coefficients.  Steenrod operations act termwise through the
Cartan formula, the projection to the second factor keeps exactly the terms
whose quadric part is the point class, and the generic cycle builders
produce the standard Kunneth decomposition

    x = sum_k  h^k x y^(m-k)   +   sum_k  l_([n/2]-k) x z^(m+[n/2]-k-n)

(the y-sum over 0 <= k <= min([n/2], m), the z-sum over 0 <= k <= j) with
terms of negative codimension on either side dropped.
"""

from __future__ import annotations

from . import formal
from .formal import LiftPolicy, Poly, gamma, mono_codim, mono_mul, mono_str
from .quadric import Cycle, QuadricRing, H, L


class TCycle:
    """Homogeneous cycle on (quadric) x (twisting variety)."""

    __slots__ = ("ring", "codim", "terms")

    def __init__(self, ring: QuadricRing, codim: int, terms: dict | None = None):
        self.ring = ring
        self.codim = codim
        clean = {}
        for (b, mono), c in (terms or {}).items():
            if c == 0:
                continue
            if any(s.codim < 0 for s in mono):
                continue
            ring.check_class(b)
            tc = ring.codim_of(b) + mono_codim(mono)
            if tc != codim:
                raise ValueError(
                    "inhomogeneous twisted cycle: term %s x %s has codim %d, expected %d"
                    % (b, mono_str(mono), tc, codim)
                )
            clean[(b, mono)] = c
        self.terms = clean

    @classmethod
    def zero(cls, ring: QuadricRing, codim: int = 0) -> "TCycle":
        return cls(ring, codim)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TCycle") -> "TCycle":
        if self.ring != other.ring:
            raise ValueError("twisted cycles live over different quadrics")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.codim != other.codim:
            raise ValueError(
                "cannot add twisted cycles of codim %d and %d" % (self.codim, other.codim)
            )
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return TCycle(self.ring, self.codim, out)

    def __sub__(self, other: "TCycle") -> "TCycle":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "TCycle":
        return TCycle(
            self.ring, self.codim, {k: scalar * c for k, c in self.terms.items()}
        )

    def __mul__(self, other: "TCycle") -> "TCycle":
        """Product: (q1 x u1)(q2 x u2) = (q1 q2) x (u1 u2), extended bilinearly."""
        if self.ring != other.ring:
            raise ValueError("twisted cycles live over different quadrics")
        out: dict = {}
        for (b1, m1), c1 in self.terms.items():
            for (b2, m2), c2 in other.terms.items():
                q = self.ring.mul_basis(b1, b2)
                if q.is_zero():
                    continue
                mono = mono_mul(m1, m2)
                for b3, c3 in q.terms.items():
                    key = (b3, mono)
                    out[key] = out.get(key, 0) + c1 * c2 * c3
        return TCycle(self.ring, self.codim + other.codim, out)

    def reduce_mod(self, modulus: int) -> "TCycle":
        return TCycle(
            self.ring, self.codim, {k: c % modulus for k, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TCycle):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (
            self.ring == other.ring
            and self.codim == other.codim
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("twisted cycles are not hashable")

    def sorted_terms(self) -> list:
        return sorted(
            self.terms.items(),
            key=lambda kv: (kv[0][0].sort_key(), tuple(s.sort_key() for s in kv[0][1])),
        )

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (b, mono), c in self.sorted_terms():
            t = "%s x %s" % (b, mono_str(mono))
            parts.append(t if c == 1 else "%d*(%s)" % (c, t))
        return " + ".join(parts)


def external(q: Cycle, p: Poly) -> TCycle:
    """External product of a quadric cycle with a formal polynomial."""
    out: dict = {}
    for b, cq in q.terms.items():
        for mono, cp in p.terms.items():
            key = (b, mono)
            out[key] = out.get(key, 0) + cq * cp
    return TCycle(q.ring, q.codim + p.codim, out)


def cartan_sq(r: int, tc: TCycle, top_square: bool = True) -> TCycle:
    """S^r on a mod-2 twisted cycle via the Cartan formula.

    Each term q x u contributes sum over l of S^(r-l)(q) x S^l(u); the
    quadric side uses the basis operation, the formal side ``formal.steenrod``
    with the given top-square mode.
    """
    if r < 0:
        raise ValueError("Steenrod degree must be nonnegative")
    ring = tc.ring
    out = TCycle.zero(ring, tc.codim + r)
    for (b, mono), coeff in tc.terms.items():
        if coeff % 2 == 0:
            continue
        base = Poly.from_mono(mono)
        for lam in range(r + 1):
            qc = ring.sq_basis(r - lam, b)
            if qc.is_zero():
                continue
            fp = formal.steenrod(lam, base, top_square)
            if fp.is_zero():
                continue
            out = out + external(qc, fp)
    return out.reduce_mod(2)


def pr_star(tc: TCycle) -> Poly:
    """Projection pushforward to the twisting variety.

    Keeps the coefficient of every term whose quadric factor is the point
    class l_0; everything else dies for dimension reasons.  Drops the
    codimension by the quadric dimension.
    """
    n = tc.ring.n
    out_codim = max(tc.codim - n, 0)
    terms: dict = {}
    for (b, mono), c in tc.terms.items():
        if b == L(0):
            terms[mono] = terms.get(mono, 0) + c
    return Poly(tc.codim - n if terms else out_codim, terms)


def lift_cycle(tc: TCycle, policy: LiftPolicy) -> TCycle:
    """Apply the integral lift to the formal part of every term."""
    out = TCycle.zero(tc.ring, tc.codim)
    for (b, mono), c in tc.terms.items():
        lifted = formal.lift(Poly.from_mono(mono, c), policy)
        if lifted.is_zero():
            continue
        qc = Cycle(tc.ring, tc.ring.codim_of(b), {b: 1})
        out = out + external(qc, lifted)
    return out


def _xbar_terms(ring: QuadricRing, m: int, j: int, integral: bool) -> dict:
    half = ring.half
    mk_y = formal.yint if integral else formal.y
    mk_z = formal.zint if integral else formal.z
    terms = {}
    for k in range(min(half, m) + 1):
        terms[(H(k), (mk_y(m - k),))] = 1
    for k in range(j + 1):
        li = half - k
        zc = m + half - k - ring.n
        if li < 0 or zc < 0:
            continue
        terms[(L(li), (mk_z(zc),))] = 1
    return terms


def _check_xbar_params(ring: QuadricRing, m: int, j: int, variant: str) -> None:
    if ring.n < 1:
        raise ValueError("generic cycle needs n >= 1, got n=%d" % ring.n)
    if not 0 <= j <= m:
        raise ValueError("constraint 0 <= j <= m violated: j=%d, m=%d" % (j, m))
    if variant == "thm1":
        if not 2 * m < ring.n + 2 * j:
            raise ValueError(
                "constraint m < n/2 + j violated: m=%d, n=%d, j=%d" % (m, ring.n, j)
            )
    elif variant == "prop2":
        if m != (ring.n + 1) // 2 + j:
            raise ValueError(
                "constraint m = [(n+1)/2] + j violated: m=%d, n=%d, j=%d"
                % (m, ring.n, j)
            )
    else:
        raise ValueError("unknown variant %r" % variant)


def generic_xbar(ring: QuadricRing, m: int, j: int, variant: str) -> TCycle:
    """Mod-2 Kunneth decomposition of a generic codimension-m cycle."""
    _check_xbar_params(ring, m, j, variant)
    return TCycle(ring, m, _xbar_terms(ring, m, j, integral=False))


def integral_xbar(ring: QuadricRing, m: int, j: int) -> TCycle:
    """Integral representative of the generic cycle, with Y/Z coefficients."""
    _check_xbar_params(ring, m, j, "prop2")
    return TCycle(ring, m, _xbar_terms(ring, m, j, integral=True))


def z_part(tc: TCycle) -> TCycle:
    """The subsum of terms whose quadric factor is a subspace class."""
    terms = {k: c for k, c in tc.terms.items() if k[0].kind == "l"}
    return TCycle(tc.ring, tc.codim, terms)


def generic_unknown(ring: QuadricRing, codim: int, tag: str) -> TCycle:
    """A fully generic cycle of the given codimension with opaque coefficients.

    One opaque symbol per quadric basis class of codimension at most
    ``codim``; this is the shape of an arbitrary Kunneth decomposition, used
    to inject the ambiguity of integral representatives.
    """
    terms = {}
    for b in ring.basis():
        bc = ring.codim_of(b)
        if bc <= codim:
            g = gamma("%s:%s%d" % (tag, b.kind, b.index), codim - bc)
            terms[(b, (g,))] = 1
    return TCycle(ring, codim, terms)
