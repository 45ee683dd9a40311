"""Brute-force ground truth: weight distributions by full enumeration,
code minimum distance by codeword enumeration, and perfectness checks.

Nothing here consults the counting formulas; weights come from Gaussian
elimination over explicitly enumerated field elements.  Agreement between
this module and :mod:`sumrank.volumes` is the master correctness check of
the whole package.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .fields import (
    ENUM_CAP_ENV,
    EnumerationCapExceeded,
    Field,
    FieldMatrix,
    enumerate_matrices,
    enumeration_cap,
    make_field,
    rank,
    rank_rows,
)
from .volumes import BlockProfile, space_size

DEFAULT_CODEWORD_CAP = 2 ** 20


def codeword_cap() -> int:
    """Cap on enumerated codewords; shares the env override with the
    element-enumeration cap but defaults lower."""
    raw = os.environ.get(ENUM_CAP_ENV)
    return DEFAULT_CODEWORD_CAP if raw is None else int(raw)


@dataclass(frozen=True)
class WeightDistribution:
    """Count of space elements at each sum-rank weight, 0..max weight."""

    profile: BlockProfile
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.counts[0] != 1:
            raise ValueError("weight 0 must count exactly the zero element")
        if sum(self.counts) != space_size(self.profile):
            raise ValueError("weight counts do not add up to the space size")

    def count(self, weight: int) -> int:
        if 0 <= weight < len(self.counts):
            return self.counts[weight]
        return 0


def _profile_field(profile: BlockProfile) -> Field:
    return make_field(profile.field.p, profile.field.alpha)


def enumerate_distribution(
    profile: BlockProfile, cap: int | None = None
) -> WeightDistribution:
    """Exact weight histogram of the whole space by full enumeration.

    Every element of the direct sum is visited once; its weight is the sum
    of per-block ranks computed by Gaussian elimination.  Ranks of each
    block space are computed up front so the cross-block sweep only adds
    cached integers.
    """
    limit = enumeration_cap() if cap is None else cap
    total = space_size(profile)
    if total > limit:
        raise EnumerationCapExceeded(
            f"space of {total} elements exceeds the cap of {limit}"
        )
    field = _profile_field(profile)
    block_ranks: list[list[int]] = []
    for n, m in profile.blocks:
        block_ranks.append(
            [rank(mat) for mat in enumerate_matrices(n, m, field, cap=limit)]
        )
    counts = [0] * (profile.max_weight + 1)
    for combo in itertools.product(*block_ranks):
        counts[sum(combo)] += 1
    return WeightDistribution(profile, tuple(counts))


def element_weight(blocks: Sequence[FieldMatrix]) -> int:
    """Sum-rank weight of a space element given as its block matrices."""
    return sum(rank(b) for b in blocks)


class GeneratorFormatError(ValueError):
    """A generator document is malformed or internally inconsistent."""


@dataclass(frozen=True)
class GeneratorSet:
    """A basis of a linear sum-rank code, validated eagerly on creation."""

    profile: BlockProfile
    basis: tuple[tuple[FieldMatrix, ...], ...]

    def __post_init__(self) -> None:
        field = _profile_field(self.profile)
        if not self.basis:
            raise GeneratorFormatError("basis must contain at least one element")
        for element in self.basis:
            if len(element) != len(self.profile.blocks):
                raise GeneratorFormatError("basis element has wrong block count")
            for mat, (n, m) in zip(element, self.profile.blocks):
                if (mat.rows, mat.cols) != (n, m):
                    raise GeneratorFormatError("block shape mismatch in basis")
                if mat.field is not field:
                    raise GeneratorFormatError("basis block over the wrong field")
                if any(not 0 <= e < field.q for e in mat.entries):
                    raise GeneratorFormatError("entry out of field range")
        flat = [list(self.flatten(i)) for i in range(len(self.basis))]
        if rank_rows(flat, field) != len(self.basis):
            raise GeneratorFormatError("basis not independent")

    def flatten(self, i: int) -> tuple[int, ...]:
        """Basis element i as one vector, blocks concatenated row-major."""
        out: list[int] = []
        for mat in self.basis[i]:
            out.extend(mat.entries)
        return tuple(out)

    @property
    def code_size(self) -> int:
        return self.profile.q ** len(self.basis)


def _flat_weight(vec: Sequence[int], profile: BlockProfile, field: Field) -> int:
    weight = 0
    offset = 0
    for n, m in profile.blocks:
        rows = [list(vec[offset + r * m : offset + (r + 1) * m]) for r in range(n)]
        weight += rank_rows(rows, field)
        offset += n * m
    return weight


def code_min_distance(gen: GeneratorSet, cap: int | None = None) -> int:
    """Minimum sum-rank weight over all nonzero codewords, by enumerating
    every linear combination of the basis."""
    field = _profile_field(gen.profile)
    k = len(gen.basis)
    limit = codeword_cap() if cap is None else cap
    if field.q ** k > limit:
        raise EnumerationCapExceeded(
            f"{field.q ** k} codewords exceed the cap of {limit}"
        )
    flat_basis = [gen.flatten(i) for i in range(k)]
    dim = len(flat_basis[0])
    add, mul = field.add, field.mul
    best: int | None = None

    def extend(i: int, acc: tuple[int, ...] | None) -> None:
        # acc is None while every chosen coefficient so far is zero, so the
        # all-zero codeword is never weighed.
        nonlocal best
        if i == k:
            if acc is not None:
                w = _flat_weight(acc, gen.profile, field)
                if best is None or w < best:
                    best = w
            return
        row = flat_basis[i]
        extend(i + 1, acc)
        base = acc if acc is not None else (0,) * dim
        for c in range(1, field.q):
            scaled = tuple(add(x, mul(c, r)) for x, r in zip(base, row))
            extend(i + 1, scaled)

    extend(0, None)
    assert best is not None
    return best


@dataclass(frozen=True)
class PerfectionReport:
    """Everything needed to audit a perfectness claim for a generator set."""

    profile: BlockProfile
    claimed_distance: int
    min_distance: int
    code_size: int
    ball: int
    space: int

    @property
    def perfect(self) -> bool:
        return (
            self.min_distance >= self.claimed_distance
            and self.code_size * self.ball == self.space
        )


def verify_perfect(gen: GeneratorSet, d: int, cap: int | None = None) -> PerfectionReport:
    """Check the sphere-packing equality |C| * V_r = |space| at radius
    r = floor((d-1)/2) together with the distance claim."""
    from .volumes import ball_volume  # local import keeps module load light

    if d < 1:
        raise ValueError("d must be positive")
    md = code_min_distance(gen, cap=cap)
    ball = ball_volume(gen.profile, (d - 1) // 2).ball_volume
    return PerfectionReport(
        gen.profile, d, md, gen.code_size, ball, space_size(gen.profile)
    )


# -- generator document format -------------------------------------------
#
# A generator set is stored as JSON:
#
#   {
#     "field":  {"p": 2, "alpha": 1},
#     "blocks": [[1, 1], [1, 1], ...],
#     "basis":  [ [ [1, 0, ...], ... one flat row-major list per block ],
#                 ... one entry per basis element ]
#   }
#
# For prime fields (alpha = 1) entries are integer residues 0..p-1.  For
# extension fields each entry is a list of alpha coefficients [c_0, ...]
# of the polynomial representative.  Unknown keys are rejected.

_TOP_KEYS = {"field", "blocks", "basis"}
_FIELD_KEYS = {"p", "alpha"}


def _parse_entry(raw: object, field: Field) -> int:
    if field.alpha == 1:
        if not isinstance(raw, int) or isinstance(raw, bool):
            raise GeneratorFormatError("prime-field entries must be integers")
        if not 0 <= raw < field.p:
            raise GeneratorFormatError(f"entry {raw} out of range 0..{field.p - 1}")
        return raw
    if not isinstance(raw, list) or len(raw) != field.alpha:
        raise GeneratorFormatError(
            f"extension-field entries must be lists of {field.alpha} coefficients"
        )
    if any(not isinstance(c, int) or isinstance(c, bool) for c in raw):
        raise GeneratorFormatError("coefficients must be integers")
    if any(not 0 <= c < field.p for c in raw):
        raise GeneratorFormatError("coefficient out of range")
    return field.element(raw)


def parse_generator_document(text: str) -> GeneratorSet:
    """Parse and validate a JSON generator document."""
    from .combinat import PrimePowerField

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GeneratorFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GeneratorFormatError("document must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise GeneratorFormatError(f"unknown keys: {sorted(unknown)}")
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise GeneratorFormatError(f"missing keys: {sorted(missing)}")

    fdoc = doc["field"]
    if not isinstance(fdoc, dict) or set(fdoc) != _FIELD_KEYS:
        raise GeneratorFormatError('"field" must be an object with keys p, alpha')
    try:
        ppf = PrimePowerField(fdoc["p"], fdoc["alpha"])
    except (TypeError, ValueError) as exc:
        raise GeneratorFormatError(str(exc)) from exc
    field = make_field(ppf.p, ppf.alpha)

    blocks_doc = doc["blocks"]
    if not isinstance(blocks_doc, list) or not blocks_doc:
        raise GeneratorFormatError('"blocks" must be a non-empty list')
    blocks = []
    for b in blocks_doc:
        if not (isinstance(b, list) and len(b) == 2 and all(isinstance(x, int) for x in b)):
            raise GeneratorFormatError("each block must be a pair [rows, cols]")
        blocks.append((b[0], b[1]))
    try:
        profile = BlockProfile(ppf, blocks)
    except ValueError as exc:
        raise GeneratorFormatError(str(exc)) from exc
    # Keep the document's block order for interpreting basis entries;
    # BlockProfile normalizes order, so require the document to be sorted
    # the same way to avoid any ambiguity.
    if tuple(blocks) != profile.blocks:
        raise GeneratorFormatError(
            "blocks must be listed largest-first (sorted descending)"
        )

    basis_doc = doc["basis"]
    if not isinstance(basis_doc, list) or not basis_doc:
        raise GeneratorFormatError('"basis" must be a non-empty list')
    basis: list[tuple[FieldMatrix, ...]] = []
    for elem in basis_doc:
        if not isinstance(elem, list) or len(elem) != len(blocks):
            raise GeneratorFormatError(
                "each basis element needs one entry list per block"
            )
        mats = []
        for raw_block, (n, m) in zip(elem, blocks):
            if not isinstance(raw_block, list) or len(raw_block) != n * m:
                raise GeneratorFormatError(
                    f"block entry list must have {n * m} entries"
                )
            entries = tuple(_parse_entry(e, field) for e in raw_block)
            mats.append(FieldMatrix(n, m, entries, field))
        basis.append(tuple(mats))
    return GeneratorSet(profile, tuple(basis))


def load_generator_file(path: str | Path) -> GeneratorSet:
    return parse_generator_document(Path(path).read_text(encoding="utf-8"))
