"""Finite field arithmetic and the rank oracle's internal consistency."""

import itertools

import pytest

from sumrank.combinat import rank_count
from sumrank.fields import (
    EnumerationCapExceeded,
    FieldMatrix,
    enumerate_matrices,
    make_field,
    rank,
)


def test_modulus_choice_is_deterministic():
    # degree-2 over F_2: x^2 + x + 1 is the only irreducible choice
    assert make_field(2, 2).modulus == (1, 1, 1)
    # degree-2 over F_3: x^2 + 1 has no root mod 3 and comes first
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(5, 1).modulus == (0, 1)


def test_make_field_rejects_bad_input():
    with pytest.raises(ValueError):
        make_field(6, 1)
    with pytest.raises(ValueError):
        make_field(2, 5)


@pytest.mark.parametrize("p,alpha", [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3)])
def test_field_axioms_exhaustive(p, alpha):
    f = make_field(p, alpha)
    els = list(f.elements())
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0
        if a != 0:
            assert f.mul(a, f.inv(a)) == 1
    for a, b in itertools.product(els, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
    for a, b, c in itertools.product(els, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_element_encoding_roundtrip():
    f = make_field(3, 2)
    for x in f.elements():
        assert f.element(f.coeffs(x)) == x


def _matrix(f, rows):
    flat = tuple(x for row in rows for x in row)
    return FieldMatrix(len(rows), len(rows[0]), flat, f)


def test_rank_examples():
    f2 = make_field(2)
    assert rank(_matrix(f2, [[0, 0], [0, 0]])) == 0
    assert rank(_matrix(f2, [[1, 0], [0, 1]])) == 2
    assert rank(_matrix(f2, [[1, 1], [1, 1]])) == 1
    f3 = make_field(3)
    assert rank(_matrix(f3, [[1, 2], [2, 4 % 3]])) == 1  # second row = 2 * first


def test_enumerate_matrices_counts():
    f2 = make_field(2)
    assert sum(1 for _ in enumerate_matrices(1, 1, f2)) == 2
    mats = list(enumerate_matrices(2, 2, f2))
    assert len(mats) == 16
    assert sum(1 for m in mats if rank(m) == 1) == 9
    f3 = make_field(3)
    assert sum(1 for _ in enumerate_matrices(2, 2, f3)) == 81


def test_enumerate_matrices_deterministic_order():
    f2 = make_field(2)
    first = [m.entries for m in enumerate_matrices(1, 2, f2)]
    assert first == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_enumeration_cap_enforced():
    f2 = make_field(2)
    with pytest.raises(EnumerationCapExceeded):
        list(enumerate_matrices(2, 2, f2, cap=15))


def test_enumeration_cap_env_override(monkeypatch):
    f2 = make_field(2)
    monkeypatch.setenv("SUMRANK_ENUM_CAP", "8")
    with pytest.raises(EnumerationCapExceeded):
        list(enumerate_matrices(2, 2, f2))
    monkeypatch.setenv("SUMRANK_ENUM_CAP", "16")
    assert sum(1 for _ in enumerate_matrices(2, 2, f2)) == 16


def test_rank_histogram_matches_rank_count():
    # master oracle identity tying the enumeration side to the formulas
    for q, (p, alpha) in {2: (2, 1), 3: (3, 1), 4: (2, 2)}.items():
        f = make_field(p, alpha)
        for n in range(1, 4):
            for m in range(1, 4):
                hist = [0] * (min(n, m) + 1)
                for mat in enumerate_matrices(n, m, f):
                    hist[rank(mat)] += 1
                for r, count in enumerate(hist):
                    assert count == rank_count(n, m, r, q), (q, n, m, r)


def test_rank_transpose_invariant():
    for p in (2, 3):
        f = make_field(p)
        for n in range(1, 4):
            for m in range(1, 4):
                for mat in enumerate_matrices(n, m, f):
                    assert rank(mat) == rank(mat.transpose())
