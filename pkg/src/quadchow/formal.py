"""Graded ring of formal coefficients.

The coefficients that pair with quadric basis classes are polynomials in
graded formal symbols:

* ``y^i``, ``z^i``      mod-2 generators (unknown classes of codimension i),
* ``Y^i``, ``Z^i``      their chosen integral representatives,
* ``Sq^l(y^i)``         an unevaluated mod-2 Steenrod image,
* ``eps(k,l)``, ``delta(k,l)``  opaque integral representatives of Steenrod
  images of the y- and z-families,
* ``gamma(label)``      an opaque integral error term.

Only the grading and a handful of normalization rules are ever used; the
point of keeping the symbols opaque is that every congruence the harness
certifies then holds for arbitrary values of them.  Any symbol whose computed
codimension is negative is the zero class, and polynomials are homogeneous.

Steenrod operations are defined on the mod-2 generators only and satisfy
S^0 = id, S^l = 0 above the codimension, S^c(u) = u^2 at the codimension
(the top square; can be kept unevaluated via ``top_square=False`` to model a
free choice of representative), and the Cartan formula on products.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Symbol:
    kind: str  # "y", "z", "Y", "Z", "sq", "eps", "delta", "gamma"
    codim: int
    data: tuple = ()

    def __str__(self):
        if self.kind in ("y", "z", "Y", "Z"):
            return "%s^%d" % (self.kind, self.codim)
        if self.kind == "sq":
            base, l = self.data
            return "Sq^%d(%s)" % (l, base)
        if self.kind in ("eps", "delta"):
            return "%s(%d,%d)" % (self.kind, self.data[0], self.data[1])
        return "gamma(%s)" % self.data[0]

    def sort_key(self):
        return (self.kind, self.codim, repr(self.data))


def y(i: int) -> Symbol:
    return Symbol("y", i)


def z(i: int) -> Symbol:
    return Symbol("z", i)


def yint(i: int) -> Symbol:
    return Symbol("Y", i)


def zint(i: int) -> Symbol:
    return Symbol("Z", i)


def sq_of(base: Symbol, l: int) -> Symbol:
    return Symbol("sq", base.codim + l, (base, l))


def gamma(label: str, codim: int) -> Symbol:
    return Symbol("gamma", codim, (label,))


def mono_codim(mono: tuple) -> int:
    return sum(s.codim for s in mono)


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(sorted(a + b, key=Symbol.sort_key))


def mono_str(mono: tuple) -> str:
    return "*".join(str(s) for s in mono) if mono else "1"


class Poly:
    """Homogeneous integer linear combination of monomials in formal symbols."""

    __slots__ = ("codim", "terms")

    def __init__(self, codim: int, terms: dict | None = None):
        self.codim = codim
        clean = {}
        for mono, c in (terms or {}).items():
            if c == 0:
                continue
            if any(s.codim < 0 for s in mono):
                continue  # negative codimension collapses to zero
            mc = mono_codim(mono)
            if mc != codim:
                raise ValueError(
                    "inhomogeneous polynomial: monomial %s has codim %d, expected %d"
                    % (mono_str(mono), mc, codim)
                )
            clean[mono] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, codim: int = 0) -> "Poly":
        return cls(codim, {})

    @classmethod
    def unit(cls) -> "Poly":
        return cls(0, {(): 1})

    @classmethod
    def from_symbol(cls, s: Symbol) -> "Poly":
        if s.codim < 0:
            return cls.zero(0)
        return cls(s.codim, {(s,): 1})

    @classmethod
    def from_mono(cls, mono: tuple, coeff: int = 1) -> "Poly":
        mono = tuple(sorted(mono, key=Symbol.sort_key))
        return cls(mono_codim(mono), {mono: coeff})

    # -- ring structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Poly") -> "Poly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.codim != other.codim:
            raise ValueError(
                "cannot add polynomials of codim %d and %d" % (self.codim, other.codim)
            )
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return Poly(self.codim, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "Poly":
        return Poly(self.codim, {m: scalar * c for m, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.codim + other.codim, out)

    def reduce_mod(self, modulus: int) -> "Poly":
        return Poly(self.codim, {m: c % modulus for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.codim == other.codim and self.terms == other.terms

    def __hash__(self):
        raise TypeError("polynomials are not hashable")

    def sorted_terms(self) -> list:
        return sorted(
            self.terms.items(), key=lambda kv: tuple(s.sort_key() for s in kv[0])
        )

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            ms = mono_str(mono)
            parts.append(ms if c == 1 else "%d*%s" % (c, ms))
        return " + ".join(parts)


# -- Steenrod operations ----------------------------------------------------


def _sq_symbol(a: int, s: Symbol, top_square: bool) -> Poly:
    if s.kind not in ("y", "z"):
        raise ValueError("Steenrod operations act on mod-2 generators, not %s" % s)
    if a == 0:
        return Poly.from_symbol(s)
    if a > s.codim:
        return Poly.zero(s.codim + a)
    if a == s.codim and top_square:
        return Poly.from_mono((s, s))
    return Poly.from_symbol(sq_of(s, a))


def _sq_mono(l: int, mono: tuple, top_square: bool) -> Poly:
    if not mono:
        return Poly.unit() if l == 0 else Poly.zero(l)
    head, rest = mono[0], mono[1:]
    out = Poly.zero(mono_codim(mono) + l)
    for a in range(l + 1):
        hp = _sq_symbol(a, head, top_square)
        if hp.is_zero():
            continue
        rp = _sq_mono(l - a, rest, top_square)
        if rp.is_zero():
            continue
        out = out + hp * rp
    return out


def steenrod(l: int, p: Poly, top_square: bool = True) -> Poly:
    """S^l on a mod-2 polynomial in the y/z generators (Cartan on products).

    With ``top_square=False`` the instability square S^c(u) = u^2 is kept as
    an unevaluated symbol, modelling an arbitrary choice of representative.
    """
    if l < 0:
        raise ValueError("Steenrod degree must be nonnegative")
    out = Poly.zero(p.codim + l)
    for mono, c in p.terms.items():
        if c % 2 == 0:
            continue
        out = out + _sq_mono(l, mono, top_square)
    return out.reduce_mod(2)


# -- integral lifts ----------------------------------------------------------


@dataclass(frozen=True)
class LiftPolicy:
    """Normalization rules for integral representatives at parameters (n, m, j).

    eps(k, l) stands for a representative of S^l applied to the codimension
    (m-k) y-generator, delta(k, l) likewise on the z-family whose codimension
    is m + [n/2] - k - n.  Imposed rules: the l = 0 representative is the
    integral generator itself, anything above the codimension is zero, and
    with ``midpoint_square_rule`` on, the representative of a top square is
    the square of the integral generator.
    """

    n: int
    m: int
    j: int
    midpoint_square_rule: bool = True

    @property
    def half(self) -> int:
        return self.n // 2

    def eps(self, k: int, l: int) -> Symbol:
        return Symbol("eps", self.m - k + l, (k, l))

    def delta(self, k: int, l: int) -> Symbol:
        return Symbol("delta", self.m + self.half - k - self.n + l, (k, l))

    def canonical_eps(self, k: int, l: int) -> Poly:
        """The canonical representative of S^l on the y-generator of codim m-k."""
        c = self.m - k
        if l > c:
            return Poly.zero(c + l)
        if l == 0:
            return Poly.from_symbol(yint(c))
        if l == c and self.midpoint_square_rule:
            return Poly.from_mono((yint(c), yint(c)))
        return Poly.from_symbol(self.eps(k, l))

    def canonical_delta(self, k: int, l: int) -> Poly:
        c = self.m + self.half - k - self.n
        if c < 0 or l > c:
            return Poly.zero(max(c + l, 0))
        if l == 0:
            return Poly.from_symbol(zint(c))
        if l == c and self.midpoint_square_rule:
            return Poly.from_mono((zint(c), zint(c)))
        return Poly.from_symbol(self.delta(k, l))


def _lift_symbol(s: Symbol, policy: LiftPolicy) -> Poly:
    if s.kind == "y":
        return Poly.from_symbol(yint(s.codim))
    if s.kind == "z":
        return Poly.from_symbol(zint(s.codim))
    if s.kind == "sq":
        base, l = s.data
        if base.kind == "y":
            return policy.canonical_eps(policy.m - base.codim, l)
        if base.kind == "z":
            return policy.canonical_delta(policy.m + policy.half - policy.n - base.codim, l)
        raise ValueError("cannot lift Steenrod image of %s" % base)
    # already integral or opaque
    return Poly.from_symbol(s)


def lift(p: Poly, policy: LiftPolicy) -> Poly:
    """Replace mod-2 symbols by their canonical integral representatives."""
    out = Poly.zero(p.codim)
    for mono, c in p.terms.items():
        factor = Poly.unit()
        for s in mono:
            factor = factor * _lift_symbol(s, policy)
            if factor.is_zero():
                break
        out = out + c * factor
    return out


def residual_mod(p: Poly, target: Poly, modulus: int) -> Poly:
    """Canonical form of p - target with coefficients reduced mod ``modulus``.

    An empty result means the congruence p = target (mod modulus) holds.
    """
    if modulus not in (2, 4):
        raise ValueError("supported moduli are 2 and 4")
    if not p.is_zero() and not target.is_zero() and p.codim != target.codim:
        raise ValueError(
            "codimension mismatch: %d vs %d" % (p.codim, target.codim)
        )
    return (p - target).reduce_mod(modulus)
