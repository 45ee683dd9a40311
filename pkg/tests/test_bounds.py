"""Singleton/packing bounds, divisibility, and exact power comparisons."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumrank.bounds import (
    QPowerExpr,
    compare_q_power,
    packing_bound,
    perfection_divisibility,
    singleton_bound,
    volume_bounds_check,
)
from sumrank.combinat import PrimePowerField
from sumrank.volumes import BlockProfile, ball_volume, space_size

F2 = PrimePowerField(2, 1)
F3 = PrimePowerField(3, 1)
F4 = PrimePowerField(2, 2)

TWO_SQUARES = BlockProfile(F2, [(2, 2), (2, 2)])
HAMMING7 = BlockProfile(F2, [(1, 1)] * 7)


def test_singleton_examples():
    data = singleton_bound(TWO_SQUARES, 3)
    assert (data.j, data.delta, data.exponent, data.bound) == (2, 0, 4, 16)
    data = singleton_bound(TWO_SQUARES, 4)
    assert (data.j, data.delta, data.exponent, data.bound) == (2, 1, 2, 4)
    data = singleton_bound(TWO_SQUARES, 1)
    assert data.bound == space_size(TWO_SQUARES)
    # classical Singleton bound for the Hamming profile: q^(n-d+1)
    assert singleton_bound(HAMMING7, 3).bound == 2 ** 5


def test_singleton_refuses_bad_input():
    with pytest.raises(ValueError):
        singleton_bound(TWO_SQUARES, 0)
    with pytest.raises(ValueError):
        singleton_bound(TWO_SQUARES, 5)  # exceeds sum of n_i
    with pytest.raises(ValueError):
        singleton_bound(BlockProfile(F2, [(3, 2)]), 2)  # transposed block


def test_singleton_equal_square_specialization():
    # odd d = 2k+1 gives exponent t*n^2 - 2kn; even d = 2k+2 gives
    # t*n^2 - (2k+1)n
    for field in (F2, F3):
        q = field.q
        for n in range(1, 5):
            for t in range(1, 4):
                prof = BlockProfile.equal_square(field, n, t)
                for k in range(0, (t * n) // 2 + 1):
                    d = 2 * k + 1
                    if 1 <= d <= t * n:
                        expected = q ** (t * n * n - 2 * k * n)
                        assert singleton_bound(prof, d).bound == expected
                    d = 2 * k + 2
                    if d <= t * n:
                        expected = q ** (t * n * n - (2 * k + 1) * n)
                        assert singleton_bound(prof, d).bound == expected


def test_packing_examples():
    assert packing_bound(HAMMING7, 3) == 16
    assert packing_bound(TWO_SQUARES, 3) == 13
    assert packing_bound(TWO_SQUARES, 1) == space_size(TWO_SQUARES)
    assert packing_bound(TWO_SQUARES, 2) == space_size(TWO_SQUARES)


def test_packing_invariants():
    profiles = [TWO_SQUARES, HAMMING7, BlockProfile(F3, [(2, 2)]),
                BlockProfile(F4, [(2, 2), (1, 1)])]
    for prof in profiles:
        total_weight = prof.max_weight
        for d in range(1, 2 * total_weight + 2):
            bound = packing_bound(prof, d)
            assert bound >= 1
            ball = ball_volume(prof, (d - 1) // 2).ball_volume
            assert (bound == 1) == (2 * ball > space_size(prof))


def test_perfection_divisibility():
    verdict = perfection_divisibility(HAMMING7, 3)
    assert verdict.passed and verdict.exponent == 3 and verdict.code_dimension == 4
    verdict = perfection_divisibility(TWO_SQUARES, 3)
    assert not verdict.passed and verdict.ball == 19
    assert not verdict.divides_space
    verdict = perfection_divisibility(TWO_SQUARES, 1)
    assert verdict.passed and verdict.exponent == 0
    assert verdict.code_dimension == TWO_SQUARES.dimension


def test_perfection_divisibility_pass_implies_divides():
    for prof in (HAMMING7, TWO_SQUARES, BlockProfile(F3, [(2, 2), (2, 2)])):
        for d in range(1, 2 * prof.max_weight + 1):
            verdict = perfection_divisibility(prof, d)
            if verdict.passed:
                assert space_size(prof) % verdict.ball == 0
                assert verdict.divides_space


def test_compare_q_power_examples():
    assert compare_q_power(93, QPowerExpr(1, 3, 2), 2) == 1
    assert compare_q_power(8, QPowerExpr(1, 3, 1), 2) == 0
    assert compare_q_power(112, QPowerExpr(18, 17, 2), 2) == -1
    # negative exponent moves across as a positive power
    assert compare_q_power(1, QPowerExpr(1, -3, 4), 2) == 1
    assert compare_q_power(1, QPowerExpr(1, 0, 1), 7) == 0


def test_qpower_expr_validation():
    with pytest.raises(ValueError):
        QPowerExpr(0, 1, 1)
    with pytest.raises(ValueError):
        QPowerExpr(1, 1, 0)
    expr = QPowerExpr.from_fraction(3, Fraction(7, 2))
    assert (expr.exp_num, expr.exp_den) == (7, 2)


@settings(max_examples=300)
@given(
    q=st.sampled_from([2, 3, 5]),
    mult=st.integers(min_value=1, max_value=50),
    e=st.integers(min_value=0, max_value=30),
    den=st.integers(min_value=1, max_value=4),
)
def test_compare_q_power_exact_equalities(q, mult, e, den):
    # v = mult * q^e compared against mult * q^(e*den/den)
    v = mult * q ** e
    expr = QPowerExpr(mult, e * den, den)
    assert compare_q_power(v, expr, q) == 0
    assert compare_q_power(v + 1, expr, q) == 1
    if v > 1:
        assert compare_q_power(v - 1, expr, q) == -1


def test_volume_bounds_check_example_point():
    report = volume_bounds_check(TWO_SQUARES, 2)
    assert report.sphere == 93 and report.ball == 112
    assert report.all_ok
    # the bounds run through exponents 3/2 (lower) and 17/2 (upper) here
    assert compare_q_power(93, QPowerExpr(1, 3, 2), 2) >= 0
    assert compare_q_power(112, QPowerExpr(18, 17, 2), 2) <= 0


def test_volume_bounds_check_rank_metric_case():
    prof = BlockProfile(F2, [(2, 2)])
    report = volume_bounds_check(prof, 1)
    assert report.sphere == 9 and report.ball == 10
    assert report.rank_metric_ok is True
    assert report.all_ok
    # q^((n+m-2)k - k^2) = 2 and q^((n+m+1)k - k^2) = 16 sandwich S_1 = 9
    assert compare_q_power(9, QPowerExpr(1, 1, 1), 2) >= 0
    assert compare_q_power(9, QPowerExpr(1, 4, 1), 2) <= 0


def test_volume_bounds_check_trivial_radius():
    report = volume_bounds_check(TWO_SQUARES, 0)
    assert report.all_ok and report.ball == 1


def test_volume_bounds_check_rejects_uneven_profiles():
    with pytest.raises(ValueError):
        volume_bounds_check(BlockProfile(F2, [(2, 2), (1, 1)]), 1)
    with pytest.raises(ValueError):
        volume_bounds_check(BlockProfile(F2, [(2, 3)]), 1)
