"""Exact combinatorics, checked against independent brute-force oracles."""

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumrank.combinat import (
    PrimePowerField,
    as_q_power,
    binomial,
    compositions,
    exact_div,
    is_prime,
    p_adic_valuation,
    prime_power_decomposition,
    q_binomial,
    rank_count,
)


def test_exact_div():
    assert exact_div(10, 5) == 2
    assert exact_div(-12, 4) == -3
    with pytest.raises(ArithmeticError):
        exact_div(10, 3)
    with pytest.raises(ZeroDivisionError):
        exact_div(1, 0)


def test_binomial_basic():
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0
    # enumerate all compositions of 3 into 2 unbounded parts: stars and bars
    count = sum(1 for a in range(4) for b in range(4) if a + b == 3)
    assert binomial(3 + 2 - 1, 2 - 1) == count == 4


def _count_subspaces_f2(n: int, k: int) -> int:
    """Brute-force count of k-dimensional subspaces of F_2^n.

    Spans are computed by closing vector subsets under XOR; independent of
    the Gaussian binomial formula.
    """
    vectors = range(1, 2 ** n)
    spans = set()
    for basis in itertools.combinations(vectors, k):
        span = {0}
        for v in basis:
            span |= {x ^ v for x in span}
        if len(span) == 2 ** k:
            spans.add(frozenset(span))
    return len(spans)


def test_q_binomial_examples():
    assert q_binomial(7, 0, 3) == 1
    assert q_binomial(2, 1, 2) == _count_subspaces_f2(2, 1) == 3
    assert q_binomial(4, 2, 2) == _count_subspaces_f2(4, 2) == 35
    assert q_binomial(2, 3, 2) == 0


@settings(max_examples=200)
@given(
    n=st.integers(min_value=0, max_value=8),
    k=st.integers(min_value=0, max_value=8),
    q=st.sampled_from([2, 3, 5]),
)
def test_q_binomial_symmetry(n, k, q):
    if k <= n:
        assert q_binomial(n, k, q) == q_binomial(n, n - k, q)


def _rank_f2(bits: tuple[int, ...], rows: int, cols: int) -> int:
    """GF(2) rank via integer row bitmasks; independent of sumrank.fields."""
    mat = [
        sum(bits[r * cols + c] << c for c in range(cols)) for r in range(rows)
    ]
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if mat[i] >> c & 1), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(rows):
            if i != rank and mat[i] >> c & 1:
                mat[i] ^= mat[rank]
        rank += 1
    return rank


def test_rank_count_against_enumeration():
    # all 16 binary 2x2 matrices
    histogram = {0: 0, 1: 0, 2: 0}
    for bits in itertools.product((0, 1), repeat=4):
        histogram[_rank_f2(bits, 2, 2)] += 1
    assert histogram == {0: 1, 1: 9, 2: 6}
    assert rank_count(2, 2, 0, 2) == 1
    assert rank_count(2, 2, 1, 2) == 9
    assert rank_count(2, 2, 2, 2) == 6
    assert rank_count(2, 2, 3, 2) == 0
    assert rank_count(3, 2, 3, 5) == 0  # r exceeds min(n, m)


def test_rank_count_totals():
    for n in range(1, 6):
        for m in range(1, 6):
            for q in (2, 3, 4):
                total = sum(rank_count(n, m, r, q) for r in range(min(n, m) + 1))
                assert total == q ** (n * m)


def test_compositions_examples():
    assert list(compositions(3, 2, (2, 2))) == [(1, 2), (2, 1)]
    assert list(compositions(2, 2, (2, 2))) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(5, 2, (2, 2))) == []
    assert sum(1 for _ in compositions(3, 2, (None, None))) == binomial(4, 1)


def test_compositions_lexicographic_and_unique():
    seen = list(compositions(4, 3, (3, 3, 3)))
    assert seen == sorted(seen)
    assert len(seen) == len(set(seen))


@settings(max_examples=150)
@given(
    total=st.integers(min_value=0, max_value=6),
    parts=st.integers(min_value=1, max_value=4),
    data=st.data(),
)
def test_compositions_match_cartesian_filter(total, parts, data):
    caps = data.draw(
        st.lists(
            st.integers(min_value=0, max_value=3),
            min_size=parts,
            max_size=parts,
        )
    )
    expected = sorted(
        combo
        for combo in itertools.product(*(range(c + 1) for c in caps))
        if sum(combo) == total
    )
    assert list(compositions(total, parts, caps)) == expected


@settings(max_examples=100)
@given(
    total=st.integers(min_value=0, max_value=8),
    parts=st.integers(min_value=1, max_value=5),
)
def test_compositions_unbounded_count_is_stars_and_bars(total, parts):
    count = sum(1 for _ in compositions(total, parts, (None,) * parts))
    assert count == binomial(total + parts - 1, parts - 1)


def test_p_adic_valuation():
    assert p_adic_valuation(112, 2) == 4
    assert p_adic_valuation(1, 7) == 0
    assert p_adic_valuation(-286, 2) == 1
    with pytest.raises(ValueError):
        p_adic_valuation(0, 2)


def test_as_q_power():
    assert as_q_power(8, 2) == 3
    assert as_q_power(19, 2) is None
    assert as_q_power(1, 5) == 0
    assert as_q_power(12, 2) is None  # divisible by q but not a pure power


def test_is_prime():
    primes = [p for p in range(60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_prime_power_decomposition():
    assert prime_power_decomposition(64) == (2, 6)
    assert prime_power_decomposition(7) == (7, 1)
    assert prime_power_decomposition(121) == (11, 2)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power_decomposition(bad)


def test_prime_power_field():
    f = PrimePowerField(2, 3)
    assert f.q == 8
    assert PrimePowerField.from_order(49) == PrimePowerField(7, 2)
    with pytest.raises(ValueError):
        PrimePowerField(4, 1)
    with pytest.raises(ValueError):
        PrimePowerField(2, 0)


def test_huge_exponents_stay_exact():
    # counts reachable by sweeps run to thousands of bits without overflow
    v = q_binomial(40, 20, 9)
    assert v > 0
    assert math.comb(40, 20) < v
    big = 3 ** 4001
    assert as_q_power(big, 3) == 4001
    assert p_adic_valuation(big * 7, 3) == 4001
