"""Mechanized verification of the Chow-ring congruences.

Every check re-derives one identity from first principles inside the exact
symbolic model and reports the surviving residual, which is empty exactly
when the identity holds.  Naming matches the CLI subcommands:

* ``thm1``     the main mod-4 congruence: over parameters with m < n/2 + j,
               the sum over i of pr_*(h^(n-d+i) * s^(d+j-i)) built from a
               generic codimension-m cycle equals 2*eps(0,j) mod 4, where
               eps(0,j) represents S^j of the leading coefficient.  The
               integral lift ambiguity is injected explicitly as opaque
               error cycles; their coefficients must all vanish mod 4.
* ``lemma13``  the subspace-part contributions push forward to exactly zero.
* ``degree``   the instability vanishing S^(d+j) = 0 on codimension m - d.
* ``wu``       compatibility of Steenrod operations with the projection
               pushforward twisted by Chern classes of the negative tangent
               bundle, on every basis class of a dimension-d quadric.
* ``coeffsum`` the binomial collapse 2 * sum_i binom(k, d-i-k) = 2^(k+1),
               divisible by 4 exactly for k >= 1.
* ``lemma22``  the mod-4 value of pr_*(h^(n+j-m) * x^2) for the integral
               generic cycle at m = [(n+1)/2] + j, with its even/odd m-j
               case split; re-run under both middle-square conventions.
* ``prop21``   the full pipeline at m = [(n+1)/2] + j: residual against
               2*eps(0,j) + 2*Y^m*Z^j mod 4.
* ``thm24``    pr_*(x * h^[n/2]) = z^j mod 2.
* ``chern``    Chern coefficients of the negative tangent bundle: mod-2
               values match binom(-d-2, i), all odd when d = 2^t - 1.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

from . import arith, formal
from .arith import binom_exact, binom_mod2
from .formal import LiftPolicy, Poly, gamma, residual_mod, yint, zint
from .quadric import (
    Cycle,
    QuadricRing,
    chern_neg_tangent,
    chern_series,
    subquadric_dim,
)
from .report import ParamTuple, Report, sort_reports
from .twisted import (
    TCycle,
    cartan_sq,
    external,
    generic_unknown,
    generic_xbar,
    integral_xbar,
    lift_cycle,
    pr_star,
    z_part,
)

CHECK_NAMES = (
    "thm1",
    "lemma13",
    "degree",
    "wu",
    "coeffsum",
    "lemma22",
    "prop21",
    "thm24",
    "chern",
)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def thm1_admissible(n: int, m: int, j: int) -> bool:
    """Exactly the standing assumptions: n >= 1, 0 <= j <= m, m < n/2 + j."""
    return n >= 1 and 0 <= j <= m and 2 * m < n + 2 * j


def _check_thm1_params(n: int, m: int, j: int) -> None:
    _require(n >= 1, "precondition n >= 1 violated: n=%d" % n)
    _require(0 <= j <= m, "precondition 0 <= j <= m violated: j=%d, m=%d" % (j, m))
    _require(
        2 * m < n + 2 * j,
        "precondition m < n/2 + j violated: m=%d, n=%d, j=%d" % (m, n, j),
    )


# -- thm1 ---------------------------------------------------------------------


def check_thm1(
    n: int,
    m: int,
    j: int,
    *,
    flip_middle_square: bool = False,
    gamma_salt: str = "",
) -> Report:
    """Main congruence at (n, m, j) with m < n/2 + j.

    Builds the generic mod-2 cycle, applies S^(d+j-i) through the Cartan
    formula for i = d+j-m .. d, lifts every value with free opaque
    representatives plus an explicit even error cycle, multiplies by the
    integral class h^(n-d+i) (equal to twice a subspace class since
    n-d+i > n/2), pushes forward and sums.  Passes when the total is
    2*eps(0,j) mod 4 with no dependence on any of the free choices.
    """
    _check_thm1_params(n, m, j)
    start = time.perf_counter()
    ring = QuadricRing(n, flip_middle_square)
    t, d = subquadric_dim(n)
    policy = LiftPolicy(n=n, m=m, j=j, midpoint_square_rule=False)
    xb = generic_xbar(ring, m, j, "thm1")
    total = Poly.zero(m + j)
    for i in range(d + j - m, d + 1):
        r = d + j - i
        _require(
            2 * (n - d + i) > n,
            "side condition n-d+i > n/2 failed at i=%d (n=%d, d=%d)" % (i, n, d),
        )
        s_mod2 = cartan_sq(r, xb, top_square=policy.midpoint_square_rule)
        s_int = lift_cycle(s_mod2, policy)
        s_int = s_int + 2 * generic_unknown(ring, m + r, "i%d%s" % (i, gamma_salt))
        prod = external(ring.h_power(n - d + i), Poly.unit()) * s_int
        total = total + pr_star(prod)
    target = 2 * policy.canonical_eps(0, j)
    residual = residual_mod(total, target, 4)
    note = "" if not residual.is_zero() else (
        "sum = 2*eps(0,j) mod 4 for every choice of integral representatives"
    )
    return Report("thm1", ParamTuple(n, m, j), residual, _ms(start), note)


# -- lemma13 ------------------------------------------------------------------


def _shift_l_indices(tc: TCycle, delta: int) -> TCycle:
    """Test hook: displace every subspace index; grading guards must object."""
    terms = {}
    for (b, mono), c in tc.terms.items():
        if b.kind == "l":
            b = replace(b, index=b.index + delta)
        terms[(b, mono)] = c
    return TCycle(tc.ring, tc.codim, terms)


def check_lemma13(
    n: int,
    m: int,
    j: int,
    *,
    flip_middle_square: bool = False,
    corrupt_index_shift: int = 0,
) -> Report:
    """Exact vanishing of the lifted subspace-part contributions.

    For every i in range, the lift of S^(d+j-i) applied to the l x z part of
    the generic cycle, multiplied by h^(n-d+i) and pushed forward, must be
    exactly zero (not merely zero mod 4).  ``corrupt_index_shift`` displaces
    the subspace indices of the lifted part; the resulting grading
    inconsistency is required to abort with the offending term.
    """
    _check_thm1_params(n, m, j)
    start = time.perf_counter()
    ring = QuadricRing(n, flip_middle_square)
    t, d = subquadric_dim(n)
    half = ring.half
    policy = LiftPolicy(n=n, m=m, j=j, midpoint_square_rule=False)
    zb = z_part(generic_xbar(ring, m, j, "thm1"))
    surviving = Poly.zero(m + j)
    for i in range(d + j - m, d + 1):
        r = d + j - i
        _require(r <= m, "index chain d+j-i <= m failed at i=%d" % i)
        _require(2 * m < 2 * j + n, "index chain m < j + n/2 failed")
        _require(half <= n - half, "index chain n/2 <= n - [n/2] failed")
        bt = lift_cycle(cartan_sq(r, zb, top_square=policy.midpoint_square_rule), policy)
        if corrupt_index_shift:
            bt = _shift_l_indices(bt, corrupt_index_shift)
        prod = external(ring.h_power(n - d + i), Poly.unit()) * bt
        surviving = surviving + pr_star(prod)
    note = "" if not surviving.is_zero() else "all subspace contributions vanish exactly"
    return Report("lemma13", ParamTuple(n, m, j), surviving, _ms(start), note)


# -- degree -------------------------------------------------------------------


def check_degree(n: int, m: int, j: int) -> Report:
    """S^(d+j) kills codimension m - d: the inequality plus instability."""
    _check_thm1_params(n, m, j)
    start = time.perf_counter()
    t, d = subquadric_dim(n)
    _require(
        m - d < d + j,
        "inequality m - d < d + j violated: m=%d, d=%d, j=%d" % (m, d, j),
    )
    c = m - d
    if c < 0:
        residual = Poly.zero(0)  # negative codimension group is zero
        note = "codim m-d < 0: nothing to operate on"
    else:
        residual = formal.steenrod(d + j, Poly.from_symbol(formal.y(c)))
        note = "" if not residual.is_zero() else "S^(d+j) vanishes on codim m-d"
    return Report("degree", ParamTuple(n, m, j), residual, _ms(start), note)


# -- wu -----------------------------------------------------------------------


def check_wu(d: int, r: int) -> Report:
    """Pushforward compatibility on a dimension-d quadric, operation degree r.

    For every basis class q and a generic coefficient u of each codimension
    up to r+1, compares S^r(pr_*(q x u)) with the sum over i of
    pr_*(c_i(-T) * S^(r-i)(q x u)) in the mod-2 model.
    """
    _require(d >= 1, "precondition d >= 1 violated: d=%d" % d)
    _require(r >= 0, "precondition r >= 0 violated: r=%d" % r)
    start = time.perf_counter()
    P = QuadricRing(d)
    chern_mod2 = [c.reduce_mod(2) for c in chern_neg_tangent(d)]
    residual = Poly.zero(0)
    bad: list[str] = []
    for b in P.basis():
        qc = Cycle(P, P.codim_of(b), {b: 1})
        for cu in range(r + 2):
            w = external(qc, Poly.from_symbol(formal.y(cu)))
            lhs = formal.steenrod(r, pr_star(w).reduce_mod(2))
            rhs = Poly.zero(0)
            for i in range(min(r, d) + 1):
                ci = chern_mod2[i]
                if ci.is_zero():
                    continue
                sqw = cartan_sq(r - i, w)
                rhs = rhs + pr_star(external(ci, Poly.unit()) * sqw)
            diff = residual_mod(lhs, rhs, 2)
            if not diff.is_zero():
                bad.append("%s x y^%d" % (b, cu))
                if residual.is_zero():
                    residual = diff
    note = (
        "both sides agree on every basis class"
        if not bad
        else "mismatch on: " + ", ".join(bad)
    )
    return Report("wu", ParamTuple(d, r, r), residual, _ms(start), note)


# -- coeffsum -----------------------------------------------------------------


def check_coeffsum(k: int, d: int, m: int, j: int, n: int | None = None) -> Report:
    """Binomial collapse: 2 * sum over the i-window of binom(k, d-i-k) = 2^(k+1)."""
    _require(k >= 0, "precondition k >= 0 violated: k=%d" % k)
    _require(0 <= j <= m, "precondition 0 <= j <= m violated: j=%d, m=%d" % (j, m))
    _require(
        d + j - m <= d - 2 * k,
        "range containment d+j-m <= d-2k violated (needs k <= (m-j)/2): "
        "k=%d, d=%d, m=%d, j=%d" % (k, d, m, j),
    )
    start = time.perf_counter()
    total = 0
    for i in range(d + j - m, d + 1):
        s = d - i - k
        if s >= 0:
            total += binom_exact(k, s)
    doubled = 2 * total
    ok = doubled == 2 ** (k + 1) and (doubled % 4 == 0) == (k >= 1)
    if ok:
        residual = Poly.zero(0)
        note = "2*sum = 2^%d; divisible by 4 iff k >= 1" % (k + 1)
    else:
        marker = gamma("coeffsum k=%d d=%d" % (k, d), 0)
        residual = Poly.from_mono((marker,), (doubled - 2 ** (k + 1)) or 1)
        note = "sum came to %d, wanted %d" % (doubled, 2 ** (k + 1))
    params = ParamTuple(n if n is not None else max(d, 1), m, j)
    return Report("coeffsum", params, residual, _ms(start), note)


# -- lemma22 ------------------------------------------------------------------


def _lemma22_residual(n: int, j: int, flip: bool) -> tuple[Poly, str]:
    ring = QuadricRing(n, flip)
    m = (n + 1) // 2 + j
    policy = LiftPolicy(n=n, m=m, j=j, midpoint_square_rule=True)
    x = integral_xbar(ring, m, j)
    prod = external(ring.h_power(n + j - m), Poly.unit()) * (x * x)
    pushed = pr_star(prod)
    target = 2 * (Poly.from_symbol(yint(m)) * Poly.from_symbol(zint(j)))
    if (m - j) % 2 == 0:
        branch = "even"
        target = target + 2 * policy.canonical_eps((m - j) // 2, (m + j) // 2)
    else:
        branch = "odd"
    return residual_mod(pushed, target, 4), branch


def check_lemma22(n: int, j: int, *, flip_middle_square: bool = False) -> Report:
    """Mod-4 value of the projected square of the integral generic cycle.

    At m = [(n+1)/2] + j the pushforward of h^(n+j-m) times the square is
    2*Y^m*Z^j plus, exactly when m - j is even, twice the square of the
    midpoint representative.  The computation is repeated under the opposite
    middle-square convention and the verdict must not change.
    """
    _require(n >= 1, "precondition n >= 1 violated: n=%d" % n)
    _require(j >= 0, "precondition j >= 0 violated: j=%d" % j)
    start = time.perf_counter()
    m = (n + 1) // 2 + j
    residual, branch = _lemma22_residual(n, j, flip_middle_square)
    other, _ = _lemma22_residual(n, j, not flip_middle_square)
    if residual.is_zero() != other.is_zero():
        residual = Poly.from_mono((gamma("middle-square convention dependence", m + j),))
        note = "verdict changed under the opposite middle-square convention"
    else:
        note = (
            "m-j=%d (%s branch); verdict invariant under both middle-square conventions"
            % (m - j, branch)
        )
    return Report("lemma22", ParamTuple(n, m, j), residual, _ms(start), note)


# -- prop21 -------------------------------------------------------------------


def check_prop21(
    n: int,
    j: int,
    *,
    flip_middle_square: bool = False,
    gamma_salt: str = "",
) -> Report:
    """Full pipeline at m = [(n+1)/2] + j.

    The bottom summand is the exact square of the integral cycle (that choice
    of representative is the content of the statement); every other summand
    uses the canonical lift plus an explicit even error cycle.  Passes when
    the total is 2*eps(0,j) + 2*Y^m*Z^j mod 4.
    """
    _require(n >= 1, "precondition n >= 1 violated: n=%d" % n)
    _require(j >= 0, "precondition j >= 0 violated: j=%d" % j)
    start = time.perf_counter()
    m = (n + 1) // 2 + j
    t, d = subquadric_dim(n)
    _require(
        2 * d > (n + 1) // 2,
        "side inequality 2d > [(n+1)/2] violated: d=%d, n=%d" % (d, n),
    )
    _require(m - d < d + j, "inequality m - d < d + j violated: m=%d, d=%d" % (m, d))
    ring = QuadricRing(n, flip_middle_square)
    policy = LiftPolicy(n=n, m=m, j=j, midpoint_square_rule=True)
    x_int = integral_xbar(ring, m, j)
    x_mod2 = generic_xbar(ring, m, j, "prop2")
    total = Poly.zero(m + j)
    for i in range(d + j - m, d + 1):
        r = d + j - i
        if i == d + j - m:
            s_int = x_int * x_int  # r = m: the representative is the square itself
        else:
            s_mod2 = cartan_sq(r, x_mod2, top_square=policy.midpoint_square_rule)
            s_int = lift_cycle(s_mod2, policy)
            s_int = s_int + 2 * generic_unknown(ring, m + r, "i%d%s" % (i, gamma_salt))
        prod = external(ring.h_power(n - d + i), Poly.unit()) * s_int
        total = total + pr_star(prod)
    target = 2 * policy.canonical_eps(0, j) + 2 * (
        Poly.from_symbol(yint(m)) * Poly.from_symbol(zint(j))
    )
    residual = residual_mod(total, target, 4)
    note = "" if not residual.is_zero() else (
        "sum = 2*eps(0,j) + 2*Y^%d*Z^%d mod 4" % (m, j)
    )
    return Report("prop21", ParamTuple(n, m, j), residual, _ms(start), note)


# -- thm24 --------------------------------------------------------------------


def check_thm24(n: int, j: int, *, flip_middle_square: bool = False) -> Report:
    """Extraction of the z-coordinate: pr_*(x * h^[n/2]) = z^j mod 2."""
    _require(n >= 1, "precondition n >= 1 violated: n=%d" % n)
    _require(j >= 0, "precondition j >= 0 violated: j=%d" % j)
    start = time.perf_counter()
    m = (n + 1) // 2 + j
    ring = QuadricRing(n, flip_middle_square)
    x = generic_xbar(ring, m, j, "prop2")
    prod = x * external(ring.h_power(ring.half), Poly.unit())
    pushed = pr_star(prod).reduce_mod(2)
    residual = residual_mod(pushed, Poly.from_symbol(formal.z(j)), 2)
    note = "" if not residual.is_zero() else "projection extracts exactly z^%d" % j
    return Report("thm24", ParamTuple(n, m, j), residual, _ms(start), note)


# -- chern --------------------------------------------------------------------


def _is_power_of_two_minus_one(d: int) -> bool:
    return d >= 1 and (d & (d + 1)) == 0


def check_chern(d: int) -> Report:
    """Chern coefficients of -T on a dimension-d quadric.

    The mod-2 reduction of c_i must be binom(-d-2, i) * h^i for every i, and
    for d = 2^t - 1 every integral series coefficient must be odd.
    """
    _require(d >= 1, "precondition d >= 1 violated: d=%d" % d)
    start = time.perf_counter()
    series = chern_series(d)
    cycles = chern_neg_tangent(d)
    ring = QuadricRing(d)
    residual = Poly.zero(0)
    bad: list[str] = []
    for i in range(d + 1):
        got = cycles[i].reduce_mod(2)
        expect = (binom_mod2(-d - 2, i) * ring.h_power(i)).reduce_mod(2)
        if got != expect:
            bad.append("c_%d mod 2" % i)
        if _is_power_of_two_minus_one(d) and series[i] % 2 == 0:
            bad.append("c_%d parity" % i)
    if bad:
        residual = Poly.from_mono((gamma("chern d=%d: %s" % (d, "; ".join(bad)), 0),))
        note = "failed: " + ", ".join(bad)
    else:
        note = "mod-2 coefficients match the binomial rule" + (
            "; all %d coefficients odd" % (d + 1) if _is_power_of_two_minus_one(d) else ""
        )
    return Report("chern", ParamTuple(d, 0, 0), residual, _ms(start), note)


# -- sweeps -------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    """Parameter ranges and check selection for a verification sweep."""

    n_lo: int = 1
    n_hi: int = 24
    j_lo: int = 0
    j_hi: int = 8
    m_max: int = 20
    checks: tuple[str, ...] = CHECK_NAMES
    wu_d_hi: int = 7
    wu_r_hi: int = 10
    coeffsum_k_hi: int = 10
    chern_dims: tuple[int, ...] = (1, 3, 7, 15, 31)
    mutation: bool = False
    flip_middle_square: bool = False


def thm1_tuples(
    n_lo: int, n_hi: int, m_max: int, j_range: tuple[int, int] | None = None
):
    """All admissible (n, m, j) for the thm1 family within the bounds."""
    for n in range(max(n_lo, 1), n_hi + 1):
        for m in range(m_max + 1):
            for j in range(m + 1):
                if j_range is not None and not j_range[0] <= j <= j_range[1]:
                    continue
                if thm1_admissible(n, m, j):
                    yield n, m, j


def prop2_tuples(n_lo: int, n_hi: int, j_lo: int, j_hi: int):
    for n in range(max(n_lo, 1), n_hi + 1):
        for j in range(max(j_lo, 0), j_hi + 1):
            yield n, j


def run_sweep(config: SweepConfig) -> list[Report]:
    """Run the selected checks over all admissible tuples in the ranges.

    Reports come back canonically sorted by (check, n, m, j), so the output
    does not depend on evaluation order.  Any single failure shows up as a
    failing report; aggregate success means every report passed.
    """
    previous = arith.mutation_enabled()
    arith.set_mutation(config.mutation)
    flip = config.flip_middle_square
    reports: list[Report] = []
    try:
        selected = set(config.checks)
        if selected - set(CHECK_NAMES):
            raise ValueError(
                "unknown checks: %s" % ", ".join(sorted(selected - set(CHECK_NAMES)))
            )
        thm1_family = [
            name for name in ("thm1", "lemma13", "degree") if name in selected
        ]
        if thm1_family:
            for n, m, j in thm1_tuples(config.n_lo, config.n_hi, config.m_max):
                if "thm1" in selected:
                    reports.append(check_thm1(n, m, j, flip_middle_square=flip))
                if "lemma13" in selected:
                    reports.append(check_lemma13(n, m, j, flip_middle_square=flip))
                if "degree" in selected:
                    reports.append(check_degree(n, m, j))
        if selected & {"prop21", "lemma22", "thm24"}:
            for n, j in prop2_tuples(config.n_lo, config.n_hi, config.j_lo, config.j_hi):
                if "lemma22" in selected:
                    reports.append(check_lemma22(n, j, flip_middle_square=flip))
                if "prop21" in selected:
                    reports.append(check_prop21(n, j, flip_middle_square=flip))
                if "thm24" in selected:
                    reports.append(check_thm24(n, j, flip_middle_square=flip))
        if "wu" in selected:
            for d in range(1, config.wu_d_hi + 1):
                for r in range(config.wu_r_hi + 1):
                    reports.append(check_wu(d, r))
        if "coeffsum" in selected:
            d = subquadric_dim(max(config.n_hi, 1))[1]
            for k in range(config.coeffsum_k_hi + 1):
                reports.append(check_coeffsum(k, d, 2 * k, 0, n=max(config.n_hi, 1)))
        if "chern" in selected:
            for d in config.chern_dims:
                reports.append(check_chern(d))
    finally:
        arith.set_mutation(previous)
    return sort_reports(reports)
