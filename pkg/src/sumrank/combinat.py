"""Exact integer combinatorics: binomials, Gaussian binomials, matrix rank
counts, bounded compositions, and prime-power utilities.

Every quantity in this package is a plain Python ``int`` (arbitrary
precision), so none of the counts computed here can overflow.  Divisions are
performed by :func:`exact_div`, which insists on divisibility; a remainder
anywhere is a formula bug, never something to round away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


def exact_div(a: int, b: int) -> int:
    """Divide ``a`` by ``b``, requiring the division to be exact."""
    if b == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(a, b)
    if r != 0:
        raise ArithmeticError(f"exact_div: {a} is not divisible by {b}")
    return q


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial expects non-negative arguments")
    return math.comb(n, k)


def q_binomial(n: int, k: int, q: int) -> int:
    """Gaussian binomial [n choose k]_q, the number of k-dimensional
    subspaces of an n-dimensional vector space over a field with q elements.

    Computed by iterated multiply-then-exact-divide so that integrality is
    asserted at every step; there are no rational intermediates.
    """
    if q < 2:
        raise ValueError("q_binomial requires q >= 2")
    if n < 0 or k < 0:
        raise ValueError("q_binomial expects non-negative n, k")
    if k > n:
        return 0
    result = 1
    # Partial products are themselves Gaussian binomials, hence integers.
    for i in range(k):
        result = exact_div(result * (q ** (n - i) - 1), q ** (i + 1) - 1)
    return result


def rank_count(n: int, m: int, r: int, q: int) -> int:
    """Number of n x m matrices over a q-element field with rank exactly r."""
    if n < 1 or m < 1:
        raise ValueError("rank_count requires n, m >= 1")
    if r < 0:
        raise ValueError("rank_count requires r >= 0")
    if r > min(n, m):
        return 0
    count = q_binomial(n, r, q)
    for j in range(r):
        count *= q ** m - q ** j
    return count


def compositions(
    total: int,
    parts: int,
    caps: Sequence[Optional[int]],
) -> Iterator[tuple[int, ...]]:
    """Yield every tuple (k_1, ..., k_parts) of non-negative integers with
    sum ``total`` and k_i <= caps[i], in ascending lexicographic order.

    A cap of ``None`` means the position is unbounded.  The stream is lazy:
    nothing is materialized, and each tuple is produced exactly once.
    """
    if parts < 1:
        raise ValueError("compositions requires parts >= 1")
    if len(caps) != parts:
        raise ValueError("caps must have one entry per part")
    effective = [total if c is None else min(c, total) for c in caps]
    if any(c < 0 for c in effective):
        raise ValueError("caps must be non-negative")
    # suffix[i] = maximum achievable sum over positions i..parts-1
    suffix = [0] * (parts + 1)
    for i in range(parts - 1, -1, -1):
        suffix[i] = suffix[i + 1] + effective[i]

    prefix = [0] * parts

    def emit(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == parts:
            yield tuple(prefix)
            return
        lo = max(0, remaining - suffix[i + 1])
        hi = min(effective[i], remaining)
        for v in range(lo, hi + 1):
            prefix[i] = v
            yield from emit(i + 1, remaining - v)

    if 0 <= total <= suffix[0]:
        yield from emit(0, total)


def p_adic_valuation(x: int, p: int) -> int:
    """Largest v with p**v dividing x.  Undefined (raises) for x = 0."""
    if x == 0:
        raise ValueError("p-adic valuation of 0 is undefined")
    if p < 2:
        raise ValueError("p_adic_valuation requires p >= 2")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def as_q_power(x: int, q: int) -> Optional[int]:
    """Return e if x == q**e exactly, otherwise None."""
    if x < 1:
        raise ValueError("as_q_power requires x >= 1")
    if q < 2:
        raise ValueError("as_q_power requires q >= 2")
    e = 0
    while x % q == 0:
        x //= q
        e += 1
    return e if x == 1 else None


def is_prime(n: int) -> bool:
    """Trial-division primality test; inputs here are small (p <= ~10^4)."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Write q = p**alpha with p prime, or raise if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            alpha = p_adic_valuation(q, p)
            if p ** alpha != q:
                raise ValueError(f"{q} is not a prime power")
            return p, alpha
        p += 1
    return q, 1  # q itself is prime


@dataclass(frozen=True)
class PrimePowerField:
    """The order q = p**alpha of a finite field, kept factored.

    All congruence arithmetic in this package goes through this type, so
    that the characteristic p is always available exactly.
    """

    p: int
    alpha: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.alpha < 1:
            raise ValueError("alpha must be a positive integer")

    @property
    def q(self) -> int:
        return self.p ** self.alpha

    @classmethod
    def from_order(cls, q: int) -> "PrimePowerField":
        p, alpha = prime_power_decomposition(q)
        return cls(p, alpha)

    def __str__(self) -> str:
        if self.alpha == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.alpha}"
