"""Exact sphere and ball volumes in the sum-rank metric.

The ambient space is a direct sum of matrix blocks over a finite field; the
weight of an element is the sum of the ranks of its blocks.  Sphere volumes
are computed by summing, over all bounded compositions of the radius, the
product of per-block rank counts.  Closed forms for radii 1 and 2 (arbitrary
block count) and for two equal square blocks (radii up to 5) are provided as
independent cross-checks, together with the alternating-binomial polynomial
that gives every ball volume's residue modulo the field order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .combinat import (
    PrimePowerField,
    binomial,
    compositions,
    exact_div,
    rank_count,
)


@dataclass(frozen=True)
class BlockProfile:
    """The space Mat(n, m, F_q): a field order plus ordered block shapes.

    Blocks are normalized on construction to descending lexicographic order,
    so profiles that differ only by block permutation compare equal.  The
    ``regular`` flag records whether the profile satisfies the standing
    assumptions most non-existence rules are stated under: every block at
    least 2 x 2 and no block taller than wide (n_i <= m_i).  Volume formulas
    are valid regardless of the flag.
    """

    field: PrimePowerField
    blocks: tuple[tuple[int, int], ...]

    def __init__(
        self, field: PrimePowerField, blocks: Sequence[tuple[int, int]]
    ) -> None:
        normalized = tuple(sorted((tuple(b) for b in blocks), reverse=True))
        if not normalized:
            raise ValueError("profile needs at least one block")
        for n, m in normalized:
            if n < 1 or m < 1:
                raise ValueError("block dimensions must be positive")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "blocks", normalized)

    @classmethod
    def equal_square(cls, field: PrimePowerField, n: int, t: int) -> "BlockProfile":
        """Profile of t identical n x n blocks."""
        if t < 1:
            raise ValueError("t must be positive")
        return cls(field, ((n, n),) * t)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def dimension(self) -> int:
        """F_q-dimension of the ambient space, sum of n_i * m_i."""
        return sum(n * m for n, m in self.blocks)

    @property
    def max_weight(self) -> int:
        return sum(min(n, m) for n, m in self.blocks)

    @property
    def regular(self) -> bool:
        return all(n <= m for n, m in self.blocks) and all(
            min(n, m) >= 2 for n, m in self.blocks
        )

    def __str__(self) -> str:
        shape = ",".join(f"{n}x{m}" for n, m in self.blocks)
        return f"[{shape}] over {self.field}"


@dataclass(frozen=True)
class VolumeReport:
    """Sphere volumes up to a radius and their cumulative ball volume."""

    profile: BlockProfile
    radius: int
    sphere_volumes: tuple[int, ...]
    ball_volume: int = dc_field(init=False)

    def __post_init__(self) -> None:
        if len(self.sphere_volumes) != self.radius + 1:
            raise ValueError("need one sphere volume per radius 0..r")
        object.__setattr__(self, "ball_volume", sum(self.sphere_volumes))


def space_size(profile: BlockProfile) -> int:
    """Number of elements of the ambient space, q^(sum of n_i * m_i)."""
    return profile.q ** profile.dimension


def sphere_volume(profile: BlockProfile, l: int) -> int:
    """Number of elements of sum-rank weight exactly l.

    One pass over the compositions of l into per-block rank contributions,
    each capped at min(n_i, m_i), multiplying the per-block rank counts.
    """
    if l < 0:
        raise ValueError("radius must be non-negative")
    if l == 0:
        return 1
    if l > profile.max_weight:
        return 0
    q = profile.q
    caps = [min(n, m) for n, m in profile.blocks]
    total = 0
    for parts in compositions(l, profile.t, caps):
        term = 1
        for (n, m), k in zip(profile.blocks, parts):
            term *= rank_count(n, m, k, q)
        total += term
    return total


def ball_volume(profile: BlockProfile, r: int) -> VolumeReport:
    """Volumes of the spheres of radius 0..r and of the ball of radius r.

    For r beyond the maximum weight the ball is the whole space; sweeps may
    pass uniform radii without special-casing.
    """
    if r < 0:
        raise ValueError("radius must be non-negative")
    spheres = tuple(sphere_volume(profile, l) for l in range(r + 1))
    return VolumeReport(profile, r, spheres)


def closed_form_v1(q: int, n: int, t: int) -> int:
    """Ball volume of radius 1 in t equal n x n blocks: 1 + t*(q^n-1)^2/(q-1)."""
    if n < 1 or t < 1 or q < 2:
        raise ValueError("require q >= 2, n >= 1, t >= 1")
    return 1 + t * exact_div((q ** n - 1) ** 2, q - 1)


def closed_form_v2(q: int, n: int, t: int) -> int:
    """Ball volume of radius 2 in t equal n x n blocks, as a four-term sum.

    Every division is exact and asserted; a remainder would mean the formula
    was transcribed wrongly.
    """
    if n < 1 or t < 1 or q < 2:
        raise ValueError("require q >= 2, n >= 1, t >= 1")
    a = q ** n - 1
    b = q ** (n - 1) - 1
    one_block = exact_div(a * a, q - 1)
    two_singles = exact_div(t * (t - 1), 2) * one_block * one_block
    one_double = exact_div(t * q * a * a * b * b, (q * q - 1) * (q - 1))
    return 1 + t * one_block + two_singles + one_double


# Closed forms for two equal square blocks, obtained by expanding the
# composition sum and collecting each product of rank counts; the rational
# coefficients come from the Gaussian binomial denominators.  Keyed by
# (q, radius); "sphere" entries give V(S_l), the single "ball" entry gives
# the full radius-2 ball.  Each term is (coefficient, exponent per factor
# (q^(n-i) - 1)^2 for i = 0, 1, ...).
_TWO_BLOCK_FORMS: dict[tuple[int, int], dict] = {
    (2, 3): {
        "kind": "sphere",
        "terms": [
            (Fraction(16, 21), (1, 1, 1)),
            (Fraction(4, 3), (2, 1)),
        ],
    },
    (2, 4): {
        "kind": "sphere",
        "terms": [
            (Fraction(128, 315), (1, 1, 1, 1)),
            (Fraction(16, 21), (2, 1, 1)),
            (Fraction(4, 9), (2, 2)),
        ],
    },
    (2, 5): {
        "kind": "sphere",
        "terms": [
            (Fraction(2048, 9765), (1, 1, 1, 1, 1)),
            (Fraction(128, 315), (2, 1, 1, 1)),
            (Fraction(32, 63), (2, 2, 1)),
        ],
    },
    (3, 2): {
        "kind": "ball",
        "terms": [
            (Fraction(1), (1,)),
            (Fraction(1, 4), (2,)),
            (Fraction(3, 8), (1, 1)),
        ],
    },
    (3, 3): {
        "kind": "sphere",
        "terms": [
            (Fraction(27, 208), (1, 1, 1)),
            (Fraction(3, 16), (2, 1)),
        ],
    },
    (3, 4): {
        "kind": "sphere",
        "terms": [
            (Fraction(1458, 33280), (1, 1, 1, 1)),
            (Fraction(27, 416), (2, 1, 1)),
            (Fraction(9, 256), (2, 2)),
        ],
    },
}


def two_block_closed_form(q: int, n: int, l: int) -> int:
    """Closed-form volume for two equal n x n blocks over F_q, q in {2, 3}.

    For q = 2 the supported radii l in {3, 4, 5} give sphere volumes
    V(S_l); for q = 3, l = 2 gives the radius-2 ball volume and l in {3, 4}
    give sphere volumes.  Exists purely as an independent cross-check of the
    general composition formula; raises if the rational expression fails to
    collapse to an integer, which would signal a transcription bug.
    """
    try:
        form = _TWO_BLOCK_FORMS[(q, l)]
    except KeyError:
        raise ValueError(f"no closed form for q={q}, l={l}") from None
    if n < 1:
        raise ValueError("n must be positive")
    total = Fraction(1) if form["kind"] == "ball" else Fraction(0)
    for coeff, exponents in form["terms"]:
        term = coeff
        for i, e in enumerate(exponents):
            # q^(n-i) as a Fraction: exact even when i exceeds n
            factor = Fraction(q) ** (n - i) - 1
            term *= factor ** (2 * e)
        total += term
    if total.denominator != 1:
        raise ArithmeticError(
            f"closed form for q={q}, l={l}, n={n} is not an integer"
        )
    return int(total)


def congruence_poly(t: int, k: int) -> int:
    """P(t, k) = 1 + sum_{i=1}^{k} (-1)^i * C(t, i).

    For t equal square blocks, the ball volume of radius k is congruent to
    P(t, k) modulo the field order; the value also factors as
    (-1)^k / k! * (t-1)(t-2)...(t-k).
    """
    if t < 1:
        raise ValueError("t must be positive")
    if k < 0:
        raise ValueError("k must be non-negative")
    total = 1
    sign = 1
    for i in range(1, k + 1):
        sign = -sign
        total += sign * binomial(t, i)
    return total
