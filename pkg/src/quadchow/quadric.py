"""Chow ring of a split smooth projective quadric of dimension n.

The additive basis used here is h^0, ..., h^[n/2] (powers of the hyperplane
section class, graded by codimension) together with l_0, ..., l_[n/2]
(classes of linear subspaces, l_i having codimension n - i).  Multiplication:

    h^a * h^b = h^(a+b)            with h^k = 2*l_(n-k) for [n/2] < k <= n
                                   and h^k = 0 for k > n,
    h^a * l_b = l_(b-a)            for b >= a, else 0,
    l_a * l_b = 0                  whenever a + b < n.

For even n the group in the middle codimension really has two independent
subspace classes; this model keeps a single l-family, which carries every
identity the verification harness needs.  The square of the middle class is
pinned by the mod-2 instability axiom S^c(u) = u^2:

    l_(n/2) * l_(n/2) = l_0 if n/2 is even, 0 otherwise,

and a ``flip_middle_square`` switch installs the opposite integral value so
that downstream checks can certify they do not depend on the choice.

Mod-2 Steenrod operations act on basis classes by

    S^a(h^k) = binom(k, a) * h^(k+a)       (so 0 once k + a > [n/2] mod 2),
    S^a(l_i) = binom(n+1-i, a) * l_(i-a)   (0 for i < a),

with binomials taken mod 2.  Chern classes of the negative tangent bundle of
a dimension-d quadric come from the truncated series (1+2h) * (1+h)^(-(d+2)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import TruncatedSeries, binom_mod2


@dataclass(frozen=True)
class BasisClass:
    kind: str  # "h" or "l"
    index: int

    def __str__(self):
        return "%s^%d" % (self.kind, self.index) if self.kind == "h" else "l_%d" % self.index

    def sort_key(self):
        return (self.kind, self.index)


def H(k: int) -> BasisClass:
    return BasisClass("h", k)


def L(i: int) -> BasisClass:
    return BasisClass("l", i)


def subquadric_dim(n: int) -> tuple[int, int]:
    """Split n >= 1 uniquely as n = (2^t - 1) + s with 0 <= s < 2^t.

    Returns (t, d) where d = 2^t - 1 is the dimension of the subquadric the
    harness works with.  The split guarantees d <= n and n/2 < 2d, both of
    which downstream index gymnastics rely on.
    """
    if n < 1:
        raise ValueError("subquadric_dim: need n >= 1, got %d" % n)
    t = (n + 1).bit_length() - 1
    d = (1 << t) - 1
    s = n - d
    assert 0 <= s < (1 << t)
    assert d <= n and n < 4 * d
    return t, d


@dataclass(frozen=True)
class QuadricRing:
    """Descriptor of the split quadric of dimension n (n >= 1)."""

    n: int
    flip_middle_square: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("QuadricRing: need n >= 1, got %d" % self.n)

    @property
    def half(self) -> int:
        return self.n // 2

    def codim_of(self, b: BasisClass) -> int:
        return b.index if b.kind == "h" else self.n - b.index

    def basis(self) -> list[BasisClass]:
        return [H(k) for k in range(self.half + 1)] + [L(i) for i in range(self.half + 1)]

    def check_class(self, b: BasisClass) -> None:
        if b.kind not in ("h", "l"):
            raise ValueError("unknown basis kind %r" % b.kind)
        if not 0 <= b.index <= self.half:
            raise ValueError("basis index out of range for n=%d: %s" % (self.n, b))

    # -- construction -----------------------------------------------------

    def zero(self, codim: int = 0) -> "Cycle":
        return Cycle(self, codim, {})

    def cycle(self, codim: int, terms: dict) -> "Cycle":
        return Cycle(self, codim, terms)

    def unit(self) -> "Cycle":
        return Cycle(self, 0, {H(0): 1})

    def h_power(self, k: int) -> "Cycle":
        """The class h^k written in the basis (codimension k).

        h^k is the basis class itself for k <= [n/2], twice a subspace class
        for [n/2] < k <= n, and zero above the dimension.
        """
        if k < 0:
            raise ValueError("h_power: exponent must be nonnegative")
        if k <= self.half:
            return Cycle(self, k, {H(k): 1})
        if k <= self.n:
            return Cycle(self, k, {L(self.n - k): 2})
        return Cycle(self, k, {})

    # -- structure constants ----------------------------------------------

    def mul_basis(self, a: BasisClass, b: BasisClass) -> "Cycle":
        if a.kind == "l" and b.kind == "h":
            a, b = b, a
        ca, cb = self.codim_of(a), self.codim_of(b)
        codim = ca + cb
        if a.kind == "h" and b.kind == "h":
            return self.h_power(a.index + b.index)
        if a.kind == "h" and b.kind == "l":
            if b.index >= a.index:
                return Cycle(self, codim, {L(b.index - a.index): 1})
            return self.zero(codim)
        # l * l: zero below the top dimension; middle square pinned mod 2
        if a.index + b.index < self.n:
            return self.zero(codim)
        # reachable only for even n with a = b = n/2
        even_value = (self.half % 2 == 0)
        if self.flip_middle_square:
            even_value = not even_value
        if even_value:
            return Cycle(self, codim, {L(0): 1})
        return self.zero(codim)

    def sq_basis(self, a: int, b: BasisClass) -> "Cycle":
        """Mod-2 Steenrod operation S^a on a basis class (coefficients 0/1)."""
        if a < 0:
            raise ValueError("Steenrod degree must be nonnegative")
        self.check_class(b)
        codim = self.codim_of(b) + a
        if b.kind == "h":
            if binom_mod2(b.index, a) == 0:
                return self.zero(codim)
            return self.h_power(b.index + a).reduce_mod(2)
        if b.index < a or binom_mod2(self.n + 1 - b.index, a) == 0:
            return self.zero(codim)
        return Cycle(self, codim, {L(b.index - a): 1})


class Cycle:
    """Homogeneous integer combination of basis classes of one quadric."""

    __slots__ = ("ring", "codim", "terms")

    def __init__(self, ring: QuadricRing, codim: int, terms: dict):
        self.ring = ring
        self.codim = codim
        clean = {}
        for b, c in terms.items():
            if c == 0:
                continue
            ring.check_class(b)
            if ring.codim_of(b) != codim:
                raise ValueError(
                    "inhomogeneous cycle: term %s has codim %d, expected %d"
                    % (b, ring.codim_of(b), codim)
                )
            clean[b] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, b: BasisClass) -> int:
        return self.terms.get(b, 0)

    def degree(self) -> int:
        """Coefficient of the point class l_0 (pushforward to the base)."""
        return self.terms.get(L(0), 0)

    def reduce_mod(self, modulus: int) -> "Cycle":
        return Cycle(
            self.ring, self.codim, {b: c % modulus for b, c in self.terms.items()}
        )

    def _same_ring(self, other: "Cycle") -> None:
        if self.ring != other.ring:
            raise ValueError("cycles live on different quadrics")

    def __add__(self, other: "Cycle") -> "Cycle":
        self._same_ring(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.codim != other.codim:
            raise ValueError(
                "cannot add cycles of codim %d and %d" % (self.codim, other.codim)
            )
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, 0) + c
        return Cycle(self.ring, self.codim, out)

    def __sub__(self, other: "Cycle") -> "Cycle":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "Cycle":
        return Cycle(self.ring, self.codim, {b: scalar * c for b, c in self.terms.items()})

    def __mul__(self, other: "Cycle") -> "Cycle":
        self._same_ring(other)
        out = self.ring.zero(self.codim + other.codim)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                out = out + (ca * cb) * self.ring.mul_basis(a, b)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.codim == other.codim and self.terms == other.terms

    def __hash__(self):
        raise TypeError("cycles are mutable bags of terms; do not hash")

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for b in sorted(self.terms, key=BasisClass.sort_key):
            c = self.terms[b]
            parts.append(str(b) if c == 1 else "%d*%s" % (c, b))
        return " + ".join(parts)


def steenrod_sq(a: int, c: Cycle) -> Cycle:
    """S^a extended additively to a cycle, mod 2."""
    out = c.ring.zero(c.codim + a)
    for b, coeff in c.terms.items():
        if coeff % 2:
            out = out + c.ring.sq_basis(a, b)
    return out.reduce_mod(2)


def chern_series(d: int) -> TruncatedSeries:
    """Coefficients of the total Chern class of -T for a dimension-d quadric.

    The quadric sits in a (d+1)-dimensional projective space with hyperplane
    class h, giving c(-T) = (1+2h) * (1+h)^(-(d+2)), truncated at degree d.
    """
    if d < 1:
        raise ValueError("chern_series: need d >= 1")
    one_plus_h = TruncatedSeries.from_list(d, [1, 1])
    return TruncatedSeries.from_list(d, [1, 2]).mul(one_plus_h.pow(d + 2).inverse())


def chern_neg_tangent(d: int) -> list[Cycle]:
    """Integral Chern classes c_i(-T), i = 0..d, in basis form on the quadric.

    Each c_i is the i-th series coefficient times h^i, with h^i reduced to the
    basis (so beyond the middle codimension the class becomes twice a subspace
    class).  Mod 2 the coefficient agrees with binom(-d-2, i).
    """
    series = chern_series(d)
    ring = QuadricRing(d)
    return [series[i] * ring.h_power(i) for i in range(d + 1)]


def pushforward(c: Cycle, target: QuadricRing) -> Cycle:
    """Proper pushforward along the inclusion of the quadric of c.ring into target.

    h^i maps to h^(n-d+i) (reduced) and l_i maps to l_i; the codimension rises
    by n - d.  Requires dim(source) <= dim(target).
    """
    P = c.ring
    d, n = P.n, target.n
    if d > n:
        raise ValueError("pushforward: source dimension %d exceeds target %d" % (d, n))
    shift = n - d
    out = target.zero(c.codim + shift)
    for b, coeff in c.terms.items():
        if b.kind == "h":
            out = out + coeff * target.h_power(shift + b.index)
        else:
            if b.index > P.half:
                raise ValueError("subspace class index %d too large for dim %d" % (b.index, d))
            out = out + coeff * Cycle(target, c.codim + shift, {L(b.index): 1})
    return out
