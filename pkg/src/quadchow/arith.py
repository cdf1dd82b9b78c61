"""Exact integer combinatorics.

Generalized binomial coefficients (negative upper argument allowed), their
parity via the base-2 digit domination rule, and truncated one-variable
integer power series used for Chern class computations.  Everything is
arbitrary precision; nothing here ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_MUTATION = False


def set_mutation(enabled: bool) -> None:
    """Toggle the documented self-test mode.

    When enabled, the parity of every binomial with lower index 1 is flipped.
    This is a deliberate fault injection: any downstream congruence check
    that still passes with this switch on would not be testing anything.
    """
    global _MUTATION
    _MUTATION = bool(enabled)


def mutation_enabled() -> bool:
    return _MUTATION


def binom_exact(a: int, k: int) -> int:
    """Generalized binomial a*(a-1)*...*(a-k+1)/k!, exact for any integer a.

    For a < 0 this is computed through the reflection identity
    binom(a, k) = (-1)^k * binom(-a+k-1, k), keeping all arithmetic integral.
    """
    if k < 0:
        raise ValueError("binom_exact: lower index must be nonnegative, got %d" % k)
    if a >= 0:
        return math.comb(a, k)
    return (-1) ** k * math.comb(-a + k - 1, k)


def binom_mod2(a: int, k: int) -> int:
    """Parity of binom_exact(a, k), in {0, 1}.

    Computed by the digit domination rule: for a >= 0 the coefficient is odd
    iff every base-2 digit of k is at most the matching digit of a, i.e.
    k & ~a == 0.  Negative a goes through the reflection identity first;
    the sign is irrelevant mod 2.
    """
    if k < 0:
        raise ValueError("binom_mod2: lower index must be nonnegative, got %d" % k)
    if a < 0:
        a = -a + k - 1
    bit = 0 if (k & ~a) else 1
    if _MUTATION and k == 1:
        bit ^= 1
    return bit


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer power series in one variable, truncated above degree ``bound``.

    ``coeffs[i]`` is the coefficient of the i-th power; the tuple always has
    length bound + 1.  Arithmetic silently discards terms above the bound.
    """

    bound: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("series bound must be nonnegative")
        if len(self.coeffs) != self.bound + 1:
            raise ValueError(
                "series needs %d coefficients, got %d" % (self.bound + 1, len(self.coeffs))
            )

    @classmethod
    def from_list(cls, bound: int, coeffs) -> "TruncatedSeries":
        """Build a series from any prefix of coefficients, padding with zeros."""
        c = list(coeffs)[: bound + 1]
        c += [0] * (bound + 1 - len(c))
        return cls(bound, tuple(c))

    @classmethod
    def one(cls, bound: int) -> "TruncatedSeries":
        return cls.from_list(bound, [1])

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product, truncated at the shared bound."""
        if self.bound != other.bound:
            raise ValueError(
                "series bounds differ: %d vs %d" % (self.bound, other.bound)
            )
        n = self.bound
        out = [0] * (n + 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] += ci * cj
        return TruncatedSeries(n, tuple(out))

    __mul__ = mul

    def pow(self, e: int) -> "TruncatedSeries":
        if e < 0:
            raise ValueError("use inverse() for negative powers")
        result = TruncatedSeries.one(self.bound)
        for _ in range(e):
            result = result.mul(self)
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError(
                "series_inverse requires constant term 1, got %d" % self.coeffs[0]
            )
        n = self.bound
        inv = [0] * (n + 1)
        inv[0] = 1
        for i in range(1, n + 1):
            acc = 0
            for j in range(1, i + 1):
                acc += self.coeffs[j] * inv[i - j]
            inv[i] = -acc
        return TruncatedSeries(n, tuple(inv))


def series_mul(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    return s1.mul(s2)


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    return s.inverse()
