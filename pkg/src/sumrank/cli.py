"""Command-line interface: volumes, bounds, criterion checks, table audit
and the brute-force oracle, with deterministic text/CSV/structured output.

Exit codes encode operational state only: 0 = ran, 2 = malformed invocation
or input document, 3 = enumeration cap exceeded.  Mathematical verdicts
(NonExistent vs Inconclusive, perfect vs not) live in the payload, never in
the exit code, so sweeps can tell crashes from inconclusive parameters.

Structured output is JSON with a top-level ``schema_version``; every exact
integer that can grow large is serialized as a decimal string.  Output for
identical inputs is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Optional, Sequence

from . import bounds as bounds_mod
from . import oracle as oracle_mod
from . import rules as rules_mod
from . import tables as tables_mod
from . import volumes as volumes_mod
from .combinat import PrimePowerField
from .fields import EnumerationCapExceeded
from .oracle import GeneratorFormatError

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3

_BLOCK_RE = re.compile(r"^(\d+)x(\d+)(?:[*×](\d+))?$")
_RANGE_RE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


def _parse_blocks(spec: str) -> list[tuple[int, int]]:
    """Parse "2x2,2x2" with an optional repetition suffix, e.g. "1x1*7"."""
    blocks: list[tuple[int, int]] = []
    for item in spec.split(","):
        m = _BLOCK_RE.match(item.strip())
        if not m:
            raise ValueError(
                f"--blocks entry {item!r} is not of the form NxM or NxM*k"
            )
        n, mm = int(m.group(1)), int(m.group(2))
        reps = int(m.group(3)) if m.group(3) else 1
        if n < 1 or mm < 1 or reps < 1:
            raise ValueError(f"--blocks entry {item!r} must be positive")
        blocks.extend([(n, mm)] * reps)
    if not blocks:
        raise ValueError("--blocks must name at least one block")
    return blocks


def _parse_range(spec: str, flag: str) -> range:
    m = _RANGE_RE.match(spec.strip())
    if not m:
        raise ValueError(f"{flag} must look like A..B or a single integer")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise ValueError(f"{flag} range is empty ({spec})")
    return range(lo, hi + 1)


def _field_from_args(parser: argparse.ArgumentParser, q: int, alpha: int) -> PrimePowerField:
    if q < 2 or alpha < 1:
        parser.error("--q must be >= 2 and --alpha >= 1")
    try:
        return PrimePowerField.from_order(q ** alpha)
    except ValueError as exc:
        parser.error(f"--q/--alpha: {exc}")
    raise AssertionError  # parser.error never returns


def _field_doc(field: PrimePowerField) -> dict:
    return {"p": field.p, "alpha": field.alpha, "q": str(field.q)}


def _emit_structured(doc: dict) -> None:
    doc["schema_version"] = SCHEMA_VERSION
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _witness_doc(verdict: rules_mod.RuleVerdict) -> dict:
    return {k: v for k, v in verdict.witness}


# -- volume ----------------------------------------------------------------


def _cmd_volume(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    field = _field_from_args(parser, args.q, args.alpha)
    try:
        blocks = _parse_blocks(args.blocks)
    except ValueError as exc:
        parser.error(str(exc))
    if args.radius < 0:
        parser.error("--radius must be non-negative")
    profile = volumes_mod.BlockProfile(field, blocks)
    report = volumes_mod.ball_volume(profile, args.radius)

    if args.sphere:
        value = report.sphere_volumes[args.radius]
        if args.format == "structured":
            _emit_structured(
                {
                    "command": "volume",
                    "field": _field_doc(field),
                    "blocks": [list(b) for b in profile.blocks],
                    "radius": args.radius,
                    "sphere": str(value),
                }
            )
        elif args.format == "csv":
            _emit_csv(["l", "sphere_volume"], [[args.radius, value]])
        else:
            print(f"sphere[{args.radius}] = {value}")
        return EXIT_OK

    if args.format == "structured":
        _emit_structured(
            {
                "command": "volume",
                "field": _field_doc(field),
                "blocks": [list(b) for b in profile.blocks],
                "radius": args.radius,
                "spheres": [str(v) for v in report.sphere_volumes],
                "ball": str(report.ball_volume),
            }
        )
    elif args.format == "csv":
        rows = []
        running = 0
        for l, v in enumerate(report.sphere_volumes):
            running += v
            rows.append([l, v, running])
        _emit_csv(["l", "sphere_volume", "ball_volume"], rows)
    else:
        for l, v in enumerate(report.sphere_volumes):
            print(f"sphere[{l}] = {v}")
        print(f"ball[{args.radius}] = {report.ball_volume}")
    return EXIT_OK


# -- bounds ----------------------------------------------------------------


def _cmd_bounds(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    field = _field_from_args(parser, args.q, args.alpha)
    try:
        blocks = _parse_blocks(args.blocks)
    except ValueError as exc:
        parser.error(str(exc))
    profile = volumes_mod.BlockProfile(field, blocks)
    total_n = sum(n for n, _ in profile.blocks)
    if not 1 <= args.d <= total_n:
        parser.error(f"--d must be in 1..{total_n} for these blocks")

    singleton: Optional[bounds_mod.SingletonData]
    singleton_error: Optional[str] = None
    try:
        singleton = bounds_mod.singleton_bound(profile, args.d)
    except ValueError as exc:
        singleton = None
        singleton_error = str(exc)
    packing = bounds_mod.packing_bound(profile, args.d)
    div = bounds_mod.perfection_divisibility(profile, args.d)

    if args.format == "structured":
        _emit_structured(
            {
                "command": "bounds",
                "field": _field_doc(field),
                "blocks": [list(b) for b in profile.blocks],
                "d": args.d,
                "singleton": None
                if singleton is None
                else {
                    "j": singleton.j,
                    "delta": singleton.delta,
                    "exponent": singleton.exponent,
                    "bound": str(singleton.bound),
                },
                "singleton_error": singleton_error,
                "packing_bound": str(packing),
                "divisibility": {
                    "passed": div.passed,
                    "exponent": div.exponent,
                    "code_dimension": div.code_dimension,
                    "ball": str(div.ball),
                    "divides_space": div.divides_space,
                },
            }
        )
    elif args.format == "csv":
        rows: list[list[object]] = []
        if singleton is not None:
            rows.append(["singleton_j", singleton.j])
            rows.append(["singleton_delta", singleton.delta])
            rows.append(["singleton_bound", singleton.bound])
        else:
            rows.append(["singleton_error", singleton_error])
        rows.append(["packing_bound", packing])
        rows.append(["divisibility", "pass" if div.passed else "fail"])
        rows.append(["ball_volume", div.ball])
        if div.passed:
            rows.append(["forced_exponent", div.exponent])
            rows.append(["forced_dimension", div.code_dimension])
        rows.append(["ball_divides_space", int(div.divides_space)])
        _emit_csv(["quantity", "value"], rows)
    else:
        if singleton is not None:
            print(
                f"singleton: j={singleton.j} delta={singleton.delta} "
                f"bound={singleton.bound}"
            )
        else:
            print(f"singleton: unavailable ({singleton_error})")
        print(f"packing bound = {packing}")
        if div.passed:
            print(
                f"divisibility: pass (ball={div.ball} = q^{div.exponent}, "
                f"forced dim={div.code_dimension})"
            )
        else:
            print(
                f"divisibility: fail (ball={div.ball} is not a q-power; "
                f"divides space: {div.divides_space})"
            )
    return EXIT_OK


# -- check -----------------------------------------------------------------


def _cmd_check(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    field = _field_from_args(parser, args.q, args.alpha)
    try:
        params = rules_mod.ParamSet(field, args.n, args.t, args.d, args.dim)
    except ValueError as exc:
        parser.error(str(exc))
    result = rules_mod.evaluate_all(params)

    if args.format == "structured":
        _emit_structured(
            {
                "command": "check",
                "field": _field_doc(field),
                "n": params.n,
                "t": params.t,
                "d": params.d,
                "k": params.k,
                "dim": params.dim,
                "verdicts": [
                    {
                        "rule": v.rule_id,
                        "statement": v.statement,
                        "applicable": v.applicable,
                        "conclusion": v.conclusion.value,
                        "witness": _witness_doc(v),
                    }
                    for v in result.verdicts
                ],
                "aggregate": result.aggregate.value,
            }
        )
    elif args.format == "csv":
        rows = [
            [
                v.rule_id,
                int(v.applicable),
                v.conclusion.value,
                ";".join(f"{k}={val}" for k, val in v.witness),
            ]
            for v in result.verdicts
        ]
        rows.append(["aggregate", "", result.aggregate.value, ""])
        _emit_csv(["rule", "applicable", "conclusion", "witness"], rows)
    else:
        for v in result.verdicts:
            mark = "" if not v.witness else (
                " [" + ", ".join(f"{k}={val}" for k, val in v.witness) + "]"
            )
            applicability = "" if v.applicable else " (not applicable)"
            print(f"{v.rule_id}: {v.conclusion.value}{applicability}{mark}")
        print(f"aggregate: {result.aggregate.value}")
    return EXIT_OK


# -- tables ------------------------------------------------------------------


def _cmd_tables(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    primes = [args.p] if args.p is not None else list(tables_mod.REPORTED_PRIMES)
    for p in primes:
        if p not in tables_mod.REPORTED_PRIMES:
            parser.error(
                f"--p must be one of {sorted(tables_mod.REPORTED_PRIMES)}"
            )
    try:
        k_range = _parse_range(args.k_range, "--k-range")
        t_range = _parse_range(args.t_range, "--t-range")
    except ValueError as exc:
        parser.error(str(exc))
    report = tables_mod.audit_report(primes, k_range, t_range)
    entries = report.entries
    if not args.compare:
        entries = tuple(e for e in entries if e.criterion_fires)

    if args.format == "structured":
        rows = []
        for e in entries:
            row = {
                "p": e.p,
                "k": e.k,
                "t": e.t,
                "P": str(e.poly_value),
                "valuation": e.valuation,
                "criterion_fires": e.criterion_fires,
            }
            if args.compare:
                row["reported"] = e.reported
                row["status"] = e.status.value
            rows.append(row)
        _emit_structured(
            {
                "command": "tables",
                "p": primes,
                "k_range": [k_range.start, k_range.stop - 1],
                "t_range": [t_range.start, t_range.stop - 1],
                "compare": bool(args.compare),
                "rows": rows,
            }
        )
    elif args.format == "csv":
        if args.compare:
            sys.stdout.write(tables_mod.AuditReport(entries).as_csv())
        else:
            _emit_csv(
                ["p", "k", "t", "P", "valuation"],
                [
                    [e.p, e.k, e.t, e.poly_value, e.valuation]
                    for e in entries
                ],
            )
    else:
        if args.compare:
            for e in entries:
                print(
                    f"p={e.p} k={e.k} t={e.t}: {e.status.value} "
                    f"(P={e.poly_value})"
                )
            sys.stdout.write(tables_mod.AuditReport(entries).as_text())
        else:
            for p in primes:
                for k in k_range:
                    ts = [str(e.t) for e in entries if e.p == p and e.k == k]
                    print(f"p={p} k={k}: t in {{{', '.join(ts)}}}")
    return EXIT_OK


# -- oracle ------------------------------------------------------------------


def _cmd_oracle_enum(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    field = _field_from_args(parser, args.q, args.alpha)
    try:
        blocks = _parse_blocks(args.blocks)
    except ValueError as exc:
        parser.error(str(exc))
    profile = volumes_mod.BlockProfile(field, blocks)
    try:
        dist = oracle_mod.enumerate_distribution(profile)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    formula = [
        volumes_mod.sphere_volume(profile, w) for w in range(len(dist.counts))
    ]
    agree = [a == b for a, b in zip(dist.counts, formula)]

    if args.format == "structured":
        _emit_structured(
            {
                "command": "oracle-enum",
                "field": _field_doc(field),
                "blocks": [list(b) for b in profile.blocks],
                "weights": [
                    {
                        "w": w,
                        "enumerated": str(dist.counts[w]),
                        "formula": str(formula[w]),
                        "agree": agree[w],
                    }
                    for w in range(len(dist.counts))
                ],
                "all_agree": all(agree),
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["w", "enumerated", "formula", "agree"],
            [
                [w, dist.counts[w], formula[w], int(agree[w])]
                for w in range(len(dist.counts))
            ],
        )
    else:
        for w in range(len(dist.counts)):
            flag = "ok" if agree[w] else "MISMATCH"
            print(f"w={w}: enumerated={dist.counts[w]} formula={formula[w]} {flag}")
        print(f"all weights agree: {all(agree)}")
    return EXIT_OK


def _cmd_oracle_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        gen = oracle_mod.load_generator_file(args.generator)
    except FileNotFoundError:
        print(f"error: no such file: {args.generator}", file=sys.stderr)
        return EXIT_USAGE
    except GeneratorFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.d < 1:
        parser.error("--d must be positive")
    try:
        report = oracle_mod.verify_perfect(gen, args.d)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP

    if args.format == "structured":
        _emit_structured(
            {
                "command": "oracle-verify",
                "field": _field_doc(gen.profile.field),
                "blocks": [list(b) for b in gen.profile.blocks],
                "claimed_d": report.claimed_distance,
                "min_distance": report.min_distance,
                "code_size": str(report.code_size),
                "ball": str(report.ball),
                "space": str(report.space),
                "perfect": report.perfect,
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["quantity", "value"],
            [
                ["claimed_d", report.claimed_distance],
                ["min_distance", report.min_distance],
                ["code_size", report.code_size],
                ["ball_volume", report.ball],
                ["space_size", report.space],
                ["perfect", int(report.perfect)],
            ],
        )
    else:
        print(f"min distance = {report.min_distance} (claimed {report.claimed_distance})")
        print(f"|C| * V_r = {report.code_size} * {report.ball} = "
              f"{report.code_size * report.ball}")
        print(f"space size = {report.space}")
        print(f"perfect: {report.perfect}")
    return EXIT_OK


# -- parser wiring -----------------------------------------------------------


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("text", "csv", "structured"),
        default="text",
        help="output format (default: text)",
    )


def _add_field_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True, help="field order (prime power)")
    p.add_argument(
        "--alpha",
        type=int,
        default=1,
        help="extra extension degree; the field order is q^alpha (default 1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumrank",
        description=(
            "Exact sum-rank metric volumes, packing/Singleton bounds and "
            "perfect-code non-existence criteria."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_vol = sub.add_parser("volume", help="sphere/ball volumes for a block profile")
    _add_field_flags(p_vol)
    p_vol.add_argument("--blocks", required=True, help='block list, e.g. "2x2,2x2" or "1x1*7"')
    p_vol.add_argument("--radius", type=int, required=True)
    p_vol.add_argument("--sphere", action="store_true", help="print only the sphere at --radius")
    _add_format(p_vol)
    p_vol.set_defaults(func=_cmd_volume)

    p_bounds = sub.add_parser("bounds", help="Singleton/packing bounds and divisibility")
    _add_field_flags(p_bounds)
    p_bounds.add_argument("--blocks", required=True)
    p_bounds.add_argument("--d", type=int, required=True, help="minimum distance")
    _add_format(p_bounds)
    p_bounds.set_defaults(func=_cmd_bounds)

    p_check = sub.add_parser("check", help="run every non-existence criterion")
    _add_field_flags(p_check)
    p_check.add_argument("--n", type=int, required=True, help="square block size")
    p_check.add_argument("--t", type=int, required=True, help="number of blocks")
    p_check.add_argument("--d", type=int, required=True, help="minimum distance")
    p_check.add_argument("--dim", type=int, default=None, help="claimed code dimension")
    _add_format(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_tables = sub.add_parser("tables", help="regenerate/audit the exclusion tables")
    p_tables.add_argument("--p", type=int, default=None, help="characteristic (default: all bundled)")
    p_tables.add_argument("--k-range", default="3..10", help="radius range A..B")
    p_tables.add_argument("--t-range", default="2..25", help="block count range A..B")
    p_tables.add_argument(
        "--compare",
        action="store_true",
        help="audit against the bundled reported tables",
    )
    _add_format(p_tables)
    p_tables.set_defaults(func=_cmd_tables)

    p_oracle = sub.add_parser("oracle", help="brute-force enumeration and verification")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)

    p_enum = oracle_sub.add_parser("enum", help="full weight distribution vs formula")
    _add_field_flags(p_enum)
    p_enum.add_argument("--blocks", required=True)
    _add_format(p_enum)
    p_enum.set_defaults(func=_cmd_oracle_enum)

    p_verify = oracle_sub.add_parser("verify", help="verify a generator document")
    p_verify.add_argument("generator", help="path to a JSON generator document")
    p_verify.add_argument("--d", type=int, required=True, help="claimed minimum distance")
    _add_format(p_verify)
    p_verify.set_defaults(func=_cmd_oracle_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
