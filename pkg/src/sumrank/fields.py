"""Arithmetic in small finite fields F_{p^alpha} and exact matrix rank.

This module powers the brute-force enumeration oracle, so it deliberately
shares no code with the counting formulas in :mod:`sumrank.combinat`.

Field elements are encoded as integers 0..q-1.  The encoding is the base-p
digit expansion of the coefficient vector (c_0, ..., c_{alpha-1}) of the
polynomial representative c_0 + c_1 X + ... modulo a fixed irreducible
polynomial.  For prime fields (alpha = 1) this is ordinary residue
arithmetic, which is the fast path the oracle spends most of its time in.

The reducing polynomial is chosen deterministically: the first monic
irreducible of degree alpha when candidates are ordered by their coefficient
tuple (c_{alpha-1}, ..., c_0).  Deterministic moduli keep enumeration order
and golden test values reproducible without a lookup table of standard
polynomials.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .combinat import is_prime

DEFAULT_ENUM_CAP = 2 ** 24
ENUM_CAP_ENV = "SUMRANK_ENUM_CAP"

# Fields at most this large precompute full multiplication/inverse tables.
_TABLE_LIMIT = 64


class EnumerationCapExceeded(Exception):
    """A requested brute-force enumeration is larger than the configured cap."""


def enumeration_cap() -> int:
    """Current enumeration cap (element count), overridable via environment."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{ENUM_CAP_ENV} must be positive")
    return cap


def _poly_divides(d: tuple[int, ...], f: tuple[int, ...], p: int) -> bool:
    """Whether monic polynomial d divides monic polynomial f over F_p.

    Polynomials are coefficient tuples, lowest degree first, leading
    coefficient 1.
    """
    rem = list(f)
    deg_d = len(d) - 1
    inv_lead = 1  # d is monic
    while len(rem) - 1 >= deg_d:
        coef = rem[-1] * inv_lead % p
        shift = len(rem) - 1 - deg_d
        for i, di in enumerate(d):
            rem[shift + i] = (rem[shift + i] - coef * di) % p
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
        if len(rem) == 1 and rem[0] == 0:
            return True
        if len(rem) - 1 < deg_d:
            break
    return len(rem) == 1 and rem[0] == 0


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by all monic polynomials of degree
    1..deg(f)//2; adequate for the small degrees used here."""
    deg = len(f) - 1
    for d_deg in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d_deg):
            divisor = tuple(tail) + (1,)
            if _poly_divides(divisor, f, p):
                return False
    return True


def _smallest_irreducible(p: int, alpha: int) -> tuple[int, ...]:
    """First monic irreducible of degree alpha over F_p, candidates ordered
    by (c_{alpha-1}, ..., c_0)."""
    for high_to_low in itertools.product(range(p), repeat=alpha):
        coeffs = tuple(reversed(high_to_low)) + (1,)
        if _is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """Descriptor of F_{p^alpha} with arithmetic on int-encoded elements.

    Instances are immutable and safe to share across threads.  Obtain them
    through :func:`make_field`, which caches one descriptor per (p, alpha).
    """

    def __init__(self, p: int, alpha: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if not 1 <= alpha <= 4:
            raise ValueError("extension degree must be in 1..4")
        self.p = p
        self.alpha = alpha
        self.q = p ** alpha
        if alpha == 1:
            self.modulus: tuple[int, ...] = (0, 1)
        else:
            self.modulus = _smallest_irreducible(p, alpha)
        # x^alpha, ..., x^(2*alpha-2) reduced mod the modulus, as coefficient
        # vectors of length alpha; used during multiplication.
        self._xpow: list[list[int]] = []
        if alpha > 1:
            cur = [(-c) % p for c in self.modulus[:alpha]]
            self._xpow.append(list(cur))
            for _ in range(alpha - 2):
                nxt = [0] + cur[:-1]
                lead = cur[-1]
                if lead:
                    for i in range(alpha):
                        nxt[i] = (nxt[i] + lead * self._xpow[0][i]) % p
                cur = nxt
                self._xpow.append(list(cur))
        self._mul_table: list[list[int]] | None = None
        self._inv_table: list[int] | None = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- element encoding -------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient vector (c_0, ..., c_{alpha-1}) of element x."""
        out = []
        for _ in range(self.alpha):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def element(self, coeffs: Sequence[int]) -> int:
        """Encode a coefficient vector as an element."""
        if len(coeffs) != self.alpha:
            raise ValueError("coefficient vector has wrong length")
        x = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise ValueError("coefficient out of range")
            x = x * self.p + c
        return x

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b  # coefficient-wise addition mod 2 is XOR
        if self.alpha == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.alpha):
            out += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.alpha == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.alpha):
            out += (-(a % p)) % p * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def _mul_raw(self, a: int, b: int) -> int:
        if self.alpha == 1:
            return a * b % self.p
        p, alpha = self.p, self.alpha
        ca = self.coeffs(a)
        cb = self.coeffs(b)
        prod = [0] * (2 * alpha - 1)
        for i, ai in enumerate(ca):
            if ai:
                for j, bj in enumerate(cb):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        acc = prod[:alpha]
        for k in range(alpha, 2 * alpha - 1):
            c = prod[k]
            if c:
                red = self._xpow[k - alpha]
                for i in range(alpha):
                    acc[i] = (acc[i] + c * red[i]) % p
        return self.element(acc)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self._inv_table is not None:
            return self._inv_table[a]
        if self.alpha == 1:
            return pow(a, self.p - 2, self.p)
        # a^(q-2) by square-and-multiply; 1 encodes the identity
        result = 1
        base = a
        e = self.q - 2
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        q = self.q
        table = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = table[a].index(1)
        self._mul_table = table
        self._inv_table = inv

    def __repr__(self) -> str:
        return f"Field(p={self.p}, alpha={self.alpha})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, alpha: int = 1) -> Field:
    """Field descriptor for F_{p^alpha} with the deterministic modulus."""
    return Field(p, alpha)


@dataclass(frozen=True)
class FieldMatrix:
    """A rows x cols matrix with int-encoded entries over a fixed field.

    Entries are stored row-major; ``entries[i*cols + j]`` is row i, col j.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]
    field: Field

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def transpose(self) -> "FieldMatrix":
        t = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return FieldMatrix(self.cols, self.rows, t, self.field)


def rank(matrix: FieldMatrix) -> int:
    """Matrix rank by Gaussian elimination with exact field arithmetic."""
    return rank_rows(
        [list(matrix.row(i)) for i in range(matrix.rows)], matrix.field
    )


def rank_rows(rows: list[list[int]], field: Field) -> int:
    """Rank of a list of row vectors (consumed destructively)."""
    if not rows:
        return 0
    ncols = len(rows[0])
    nrows = len(rows)
    mul = field.mul
    sub = field.sub
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        inv_p = field.inv(prow[col])
        for i in range(r + 1, nrows):
            factor = rows[i][col]
            if factor == 0:
                continue
            scale = mul(factor, inv_p)
            ri = rows[i]
            for j in range(col, ncols):
                ri[j] = sub(ri[j], mul(scale, prow[j]))
        r += 1
        if r == nrows:
            break
    return r


def enumerate_matrices(
    rows: int, cols: int, field: Field, cap: int | None = None
) -> Iterator[FieldMatrix]:
    """Yield every rows x cols matrix over the field exactly once.

    Order is the odometer over entries (last entry varies fastest), so it is
    deterministic and reproducible.  Raises :class:`EnumerationCapExceeded`
    when q^(rows*cols) exceeds the cap; the guard lives here, not in the
    caller, to stop accidental exponential jobs in sweeps.
    """
    if rows < 1 or cols < 1:
        raise ValueError("matrix dimensions must be positive")
    limit = enumeration_cap() if cap is None else cap
    count = field.q ** (rows * cols)
    if count > limit:
        raise EnumerationCapExceeded(
            f"{count} matrices of shape {rows}x{cols} over q={field.q} "
            f"exceed the cap of {limit}"
        )
    for entries in itertools.product(field.elements(), repeat=rows * cols):
        yield FieldMatrix(rows, cols, entries, field)
