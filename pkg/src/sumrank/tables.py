"""Regeneration and audit of the bundled non-existence tables.

For a characteristic p, a packing radius k and a block count t, the
criterion "P(t, k) nonzero mod p" excludes linear perfect codes in t equal
square blocks over every field of characteristic p, independently of the
extension degree and the block size.  A previously reported table of
excluded (k, t) pairs per characteristic ships with the package as a CSV
resource, transcribed verbatim; this module recomputes the criterion and
classifies each pair instead of assuming the two agree.

They do not always agree: some reported pairs are not reproduced by the
criterion and some pairs the criterion excludes are absent from the report.
Both directions are surfaced as explicit statuses; nothing is silently
"fixed".
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional, Sequence

from .combinat import p_adic_valuation
from .volumes import congruence_poly

DEFAULT_K_RANGE = range(3, 11)
DEFAULT_T_RANGE = range(2, 26)
REPORTED_PRIMES = (2, 3, 5, 7)


class EntryStatus(enum.Enum):
    CONFIRMED = "Confirmed"  # reported and the criterion fires
    REPORTED_ONLY = "ReportedOnly"  # reported but the criterion does not fire
    CRITERION_ONLY = "CriterionOnly"  # criterion fires but not reported


@dataclass(frozen=True)
class TableEntry:
    p: int
    k: int
    t: int
    reported: bool
    criterion_fires: bool
    status: EntryStatus
    poly_value: int
    valuation: Optional[int]  # p-adic valuation of poly_value, None when 0


def _load_reported() -> frozenset[tuple[int, int, int]]:
    text = (
        resources.files("sumrank.data")
        .joinpath("reported_exclusions.csv")
        .read_text(encoding="utf-8")
    )
    reader = csv.DictReader(io.StringIO(text))
    out = set()
    for row in reader:
        out.add((int(row["p"]), int(row["k"]), int(row["t"])))
    return frozenset(out)


_REPORTED: Optional[frozenset[tuple[int, int, int]]] = None


def reported_exclusions() -> frozenset[tuple[int, int, int]]:
    """The bundled (p, k, t) exclusion triples, loaded once."""
    global _REPORTED
    if _REPORTED is None:
        _REPORTED = _load_reported()
    return _REPORTED


def regenerate_table(
    p: int,
    k_range: Iterable[int] = DEFAULT_K_RANGE,
    t_range: Iterable[int] = DEFAULT_T_RANGE,
) -> list[TableEntry]:
    """Classify every (k, t) in range where either side says something.

    Pairs that neither the criterion excludes nor the bundled report lists
    are omitted; they carry no information.  The criterion value P(t, k)
    does not involve the extension degree, so one row covers all of them.
    """
    reported = reported_exclusions()
    entries: list[TableEntry] = []
    t_values = sorted(set(t_range))
    for k in sorted(set(k_range)):
        for t in t_values:
            value = congruence_poly(t, k)
            fires = value % p != 0
            listed = (p, k, t) in reported
            if not fires and not listed:
                continue
            if fires and listed:
                status = EntryStatus.CONFIRMED
            elif listed:
                status = EntryStatus.REPORTED_ONLY
            else:
                status = EntryStatus.CRITERION_ONLY
            valuation = p_adic_valuation(value, p) if value != 0 else None
            entries.append(TableEntry(p, k, t, listed, fires, status, value, valuation))
    return entries


@dataclass(frozen=True)
class AuditReport:
    """Full classification of reported vs recomputed exclusions."""

    entries: tuple[TableEntry, ...]

    def counts(self) -> dict[tuple[int, int], dict[str, int]]:
        """Per (p, k): number of entries with each status."""
        out: dict[tuple[int, int], dict[str, int]] = {}
        for e in self.entries:
            bucket = out.setdefault(
                (e.p, e.k),
                {s.value: 0 for s in EntryStatus},
            )
            bucket[e.status.value] += 1
        return out

    def as_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["p", "k", "t", "reported", "criterion", "status", "P", "valuation"]
        )
        for e in self.entries:
            writer.writerow(
                [
                    e.p,
                    e.k,
                    e.t,
                    int(e.reported),
                    int(e.criterion_fires),
                    e.status.value,
                    e.poly_value,
                    "" if e.valuation is None else e.valuation,
                ]
            )
        return buf.getvalue()

    def as_text(self) -> str:
        lines = []
        for (p, k), bucket in sorted(self.counts().items()):
            summary = ", ".join(f"{name}={bucket[name]}" for name in sorted(bucket))
            lines.append(f"p={p} k={k}: {summary}")
        disagreements = [
            e for e in self.entries if e.status is not EntryStatus.CONFIRMED
        ]
        lines.append(f"entries={len(self.entries)} disagreements={len(disagreements)}")
        return "\n".join(lines) + "\n"


def audit_report(
    p_values: Sequence[int] = REPORTED_PRIMES,
    k_range: Iterable[int] = DEFAULT_K_RANGE,
    t_range: Iterable[int] = DEFAULT_T_RANGE,
) -> AuditReport:
    """Regenerate and classify the tables for several characteristics."""
    entries: list[TableEntry] = []
    for p in p_values:
        entries.extend(regenerate_table(p, k_range, t_range))
    return AuditReport(tuple(entries))
