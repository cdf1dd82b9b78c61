"""The verification checks at hand-checkable scale."""

import pytest

from quadchow import (
    LiftPolicy,
    Poly,
    QuadricRing,
    SweepConfig,
    cartan_sq,
    check_chern,
    check_coeffsum,
    check_degree,
    check_lemma13,
    check_lemma22,
    check_prop21,
    check_thm1,
    check_thm24,
    check_wu,
    external,
    generic_xbar,
    lift_cycle,
    pr_star,
    run_sweep,
    subquadric_dim,
    thm1_admissible,
    z,
    z_part,
)
from quadchow import arith


def test_thm1_small_instances():
    assert check_thm1(5, 2, 0).passed
    assert check_thm1(3, 1, 0).passed
    # top-degree operation: j = m goes through the free top-square symbol
    assert check_thm1(1, 1, 1).passed
    assert check_thm1(2, 3, 3).passed


def test_thm1_preconditions_named():
    with pytest.raises(ValueError, match="0 <= j <= m"):
        check_thm1(5, 1, 2)
    with pytest.raises(ValueError, match="m < n/2"):
        check_thm1(4, 3, 1)
    with pytest.raises(ValueError, match="n >= 1"):
        check_thm1(0, 0, 0)


def test_thm1_admissibility_predicate_is_exact():
    for n in (5, 8):
        for j in (0, 2):
            for m in range(0, 15):
                if thm1_admissible(n, m, j):
                    assert check_thm1(n, m, j).passed, (n, m, j)
                else:
                    with pytest.raises(ValueError):
                        check_thm1(n, m, j)


def test_thm1_gamma_salt_never_changes_verdict():
    for salt in ("", "a", "zz"):
        assert check_thm1(6, 3, 1, gamma_salt=salt).passed
        assert check_prop21(6, 2, gamma_salt=salt).passed


def test_lemma13_exact_zero_per_term():
    n, m, j = 5, 2, 0
    ring = QuadricRing(n)
    t, d = subquadric_dim(n)
    policy = LiftPolicy(n=n, m=m, j=j, midpoint_square_rule=False)
    zb = z_part(generic_xbar(ring, m, j, "thm1"))
    for i in range(d + j - m, d + 1):
        bt = lift_cycle(cartan_sq(d + j - i, zb, top_square=False), policy)
        prod = external(ring.h_power(n - d + i), Poly.unit()) * bt
        assert pr_star(prod).is_zero()
    assert check_lemma13(n, m, j).passed


def test_lemma13_with_actual_z_terms():
    assert check_lemma13(4, 2, 1).passed
    assert check_lemma13(6, 4, 2).passed


def test_lemma13_corrupted_index_is_caught():
    # displacing a subspace index breaks the grading and must abort loudly
    with pytest.raises(ValueError, match="codim"):
        check_lemma13(4, 2, 1, corrupt_index_shift=1)


def test_degree_vanishing():
    r = check_degree(5, 2, 0)
    assert r.passed and "m-d < 0" in r.note
    assert check_degree(4, 2, 1).passed
    for n in range(1, 25):
        t, d = subquadric_dim(n)
        for m in range(0, 12):
            for j in range(m + 1):
                if thm1_admissible(n, m, j):
                    assert m - d < d + j, (n, m, j)


def test_wu_small():
    assert check_wu(3, 2).passed
    assert check_wu(1, 0).passed
    assert check_wu(5, 4).passed
    with pytest.raises(ValueError, match="d >= 1"):
        check_wu(0, 2)


def test_coeffsum_examples():
    assert check_coeffsum(2, 7, 6, 0).passed  # 2*(1+2+1) = 8 = 2^3
    r = check_coeffsum(0, 7, 4, 0)
    assert r.passed and "iff k >= 1" in r.note  # value 2, not divisible by 4
    assert check_coeffsum(10, 31, 20, 0).passed  # 2^11
    with pytest.raises(ValueError, match="range containment"):
        check_coeffsum(3, 7, 4, 0)


def test_lemma22_branches():
    even = check_lemma22(4, 1)  # m = 3, m-j = 2
    assert even.passed and "even branch" in even.note
    assert check_lemma22(3, 0).passed  # m = 2, even branch
    odd = check_lemma22(2, 0)  # m = 1, m-j = 1
    assert odd.passed and "odd branch" in odd.note
    assert check_lemma22(1, 0).passed


def test_prop21_instances():
    assert check_prop21(4, 1).passed
    assert check_prop21(1, 0).passed  # smallest instance: m = 1, d = 1
    assert check_prop21(7, 3).passed


def test_thm24_instances():
    assert check_thm24(4, 1).passed
    assert check_thm24(2, 0).passed
    # the check already subtracts z^j; cross-check the raw projection
    ring = QuadricRing(4)
    x = generic_xbar(ring, 3, 1, "prop2")
    pushed = pr_star(x * external(ring.h_power(2), Poly.unit())).reduce_mod(2)
    assert pushed == Poly.from_symbol(z(1))


def test_chern_check():
    for d in (1, 2, 3, 6, 7, 15):
        assert check_chern(d).passed


def test_middle_square_convention_does_not_change_verdicts():
    for n, m, j in [(4, 2, 1), (8, 4, 2), (12, 6, 1), (6, 3, 2)]:
        assert check_thm1(n, m, j).passed == check_thm1(
            n, m, j, flip_middle_square=True
        ).passed
        assert check_lemma13(n, m, j).passed == check_lemma13(
            n, m, j, flip_middle_square=True
        ).passed
    for n, j in [(4, 1), (8, 0), (6, 2)]:
        assert check_prop21(n, j).passed == check_prop21(n, j, flip_middle_square=True).passed
        assert check_thm24(n, j).passed == check_thm24(n, j, flip_middle_square=True).passed


def test_mutation_mode_breaks_checks():
    arith.set_mutation(True)
    try:
        assert not check_chern(3).passed
        assert not check_wu(3, 2).passed
    finally:
        arith.set_mutation(False)
    assert check_chern(3).passed


def test_sweep_small_and_canonical_order():
    config = SweepConfig(n_lo=1, n_hi=4, j_lo=0, j_hi=1, m_max=4,
                         wu_d_hi=2, wu_r_hi=3, coeffsum_k_hi=2, chern_dims=(1, 3))
    reports = run_sweep(config)
    assert reports and all(r.passed for r in reports)
    keys = [(r.check, r.params.n, r.params.m, r.params.j) for r in reports]
    assert keys == sorted(keys)


def test_sweep_empty_range_passes():
    config = SweepConfig(n_lo=3, n_hi=2, checks=("thm1",))
    assert run_sweep(config) == []


def test_sweep_mutation_mode_fails_and_restores_flag():
    config = SweepConfig(n_lo=3, n_hi=5, j_lo=0, j_hi=0, m_max=3,
                         checks=("thm1", "chern"), chern_dims=(3,), mutation=True)
    reports = run_sweep(config)
    assert any(not r.passed for r in reports)
    assert not arith.mutation_enabled()


def test_sweep_rejects_unknown_check():
    with pytest.raises(ValueError, match="unknown checks"):
        run_sweep(SweepConfig(checks=("thm1", "nope")))


def test_reports_are_deterministic():
    a = check_thm1(6, 3, 1).to_json_obj()
    b = check_thm1(6, 3, 1).to_json_obj()
    a["duration_ms"] = b["duration_ms"] = 0
    assert a == b
