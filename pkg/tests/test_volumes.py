"""Sphere/ball volumes: formula vs enumeration, closed forms, congruences."""

import math

import pytest

from sumrank.combinat import PrimePowerField, binomial, rank_count
from sumrank.oracle import enumerate_distribution
from sumrank.volumes import (
    BlockProfile,
    ball_volume,
    closed_form_v1,
    closed_form_v2,
    congruence_poly,
    space_size,
    sphere_volume,
    two_block_closed_form,
)

F2 = PrimePowerField(2, 1)
F3 = PrimePowerField(3, 1)
F4 = PrimePowerField(2, 2)
F5 = PrimePowerField(5, 1)
F7 = PrimePowerField(7, 1)

FIELDS = {2: F2, 3: F3, 4: F4, 5: F5, 7: F7}


def square_profile(q: int, n: int, t: int) -> BlockProfile:
    return BlockProfile.equal_square(FIELDS[q], n, t)


def test_profile_normalization_and_flags():
    prof = BlockProfile(F2, [(1, 1), (2, 3), (2, 2)])
    assert prof.blocks == ((2, 3), (2, 2), (1, 1))
    assert prof.dimension == 11
    assert prof.max_weight == 5
    assert not prof.regular  # unit block present
    assert square_profile(2, 2, 2).regular
    assert not BlockProfile(F2, [(3, 2)]).regular  # taller than wide
    with pytest.raises(ValueError):
        BlockProfile(F2, [])
    with pytest.raises(ValueError):
        BlockProfile(F2, [(0, 1)])


def test_space_size():
    assert space_size(square_profile(2, 2, 2)) == 256
    assert space_size(BlockProfile(F2, [(1, 1)] * 7)) == 128
    assert space_size(square_profile(3, 2, 1)) == 81


def test_sphere_examples():
    prof = square_profile(2, 2, 2)
    assert sphere_volume(prof, 0) == 1
    assert sphere_volume(prof, 2) == 93
    # independent decomposition: (2,0)+(0,2) and (1,1)
    assert 93 == 2 * rank_count(2, 2, 2, 2) + rank_count(2, 2, 1, 2) ** 2
    assert sphere_volume(prof, 4) == 36 == rank_count(2, 2, 2, 2) ** 2
    assert sphere_volume(prof, 5) == 0


def test_ball_examples():
    prof = square_profile(2, 2, 2)
    assert ball_volume(prof, 0).ball_volume == 1
    assert ball_volume(prof, 1).ball_volume == 19
    report = ball_volume(prof, 2)
    assert report.ball_volume == 112
    assert report.sphere_volumes == (1, 18, 93)
    # beyond the max weight the ball saturates to the whole space
    assert ball_volume(prof, 10).ball_volume == space_size(prof)


def test_ball_matches_enumeration_small_grid():
    profiles = [
        square_profile(2, 2, 2),
        BlockProfile(F2, [(2, 3), (2, 2)]),
        BlockProfile(F3, [(2, 2), (1, 1)]),
        BlockProfile(F4, [(2, 2)]),
        BlockProfile(F2, [(1, 1)] * 5),
    ]
    for prof in profiles:
        dist = enumerate_distribution(prof)
        for w in range(prof.max_weight + 1):
            assert sphere_volume(prof, w) == dist.counts[w], (str(prof), w)
        assert sum(dist.counts) == space_size(prof)


def test_closed_form_v1():
    assert closed_form_v1(2, 2, 2) == 19
    assert closed_form_v1(2, 1, 7) == 8  # Hamming ball of radius 1 in F_2^7
    assert closed_form_v1(2, 2, 1) == 10  # single-matrix-space ball
    for q in (2, 3, 4, 5):
        for n in range(1, 6):
            for t in range(1, 6):
                prof = square_profile(q, n, t)
                assert closed_form_v1(q, n, t) == ball_volume(prof, 1).ball_volume


def test_closed_form_v2():
    assert closed_form_v2(2, 2, 2) == 112
    assert closed_form_v2(2, 2, 3) == 289
    assert closed_form_v2(3, 2, 2) == ball_volume(square_profile(3, 2, 2), 2).ball_volume
    for q in (2, 3, 4, 5):
        for n in range(1, 6):
            for t in range(1, 6):
                prof = square_profile(q, n, t)
                assert closed_form_v2(q, n, t) == ball_volume(prof, 2).ball_volume


def test_two_block_closed_forms():
    assert two_block_closed_form(2, 2, 3) == 108
    assert two_block_closed_form(2, 3, 3) == sphere_volume(square_profile(2, 3, 2), 3)
    assert two_block_closed_form(3, 3, 2) == ball_volume(square_profile(3, 3, 2), 2).ball_volume
    for n in range(2, 9):
        prof2 = square_profile(2, n, 2)
        prof3 = square_profile(3, n, 2)
        for l in (3, 4, 5):
            assert two_block_closed_form(2, n, l) == sphere_volume(prof2, l)
        assert two_block_closed_form(3, n, 2) == ball_volume(prof3, 2).ball_volume
        for l in (3, 4):
            assert two_block_closed_form(3, n, l) == sphere_volume(prof3, l)
    with pytest.raises(ValueError):
        two_block_closed_form(5, 3, 3)
    with pytest.raises(ValueError):
        two_block_closed_form(2, 3, 2)


def test_congruence_poly_examples():
    assert congruence_poly(2, 2) == 0
    assert congruence_poly(4, 3) == -1
    assert congruence_poly(9, 0) == 1
    assert congruence_poly(9, 3) == -56
    assert congruence_poly(14, 3) == -286


def test_congruence_lemma_grid():
    for q, field in FIELDS.items():
        for n in range(1, 6):
            for t in range(1, 8):
                prof = BlockProfile.equal_square(field, n, t)
                for k in range(0, 7):
                    ball = ball_volume(prof, k).ball_volume
                    assert ball % q == congruence_poly(t, k) % q, (q, n, t, k)


def test_factorial_times_poly_identity():
    for t in range(1, 101):
        for k in range(0, 11):
            falling = 1
            for i in range(1, k + 1):
                falling *= t - i
            assert math.factorial(k) * congruence_poly(t, k) == (-1) ** k * falling
