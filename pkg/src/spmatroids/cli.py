"""Command-line front end.

    spm table  --family {E|C|A|S|G} --max-n INT --format {csv|json|bfile} [--out PATH]
    spm verify [--order INT]
    spm oracle --max-n INT [--compare] [--dump PATH]
    spm oeis   --id AXXXXXX [--bfile PATH | --fetch]

Exit codes: 0 all checks pass, 1 verification or comparison failure,
2 usage or configuration error.  Output is deterministic for a given
configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracle
from .config import RunConfig
from .oeis import (
    BFileParseError,
    bfile_path,
    compare_with_bfile,
    fetch_bfile,
    parse_bfile,
    render_bfile,
)
from .spcounts import FAMILIES, TriangularCountTable, build_tables
from .verify import run_verify

USAGE_ERROR = 2


def render_csv(table: TriangularCountTable) -> str:
    lines = ["n,k,value"]
    for i, row in enumerate(table.rows):
        n = table.start_n + i
        for k, value in enumerate(row):
            lines.append(f"{n},{k},{value}")
    return "\n".join(lines) + "\n"


def render_json(table: TriangularCountTable) -> str:
    obj = {
        "family": table.family,
        "start_n": table.start_n,
        "max_n": table.max_n,
        "rows": [list(row) for row in table.rows],
    }
    return json.dumps(obj, indent=2) + "\n"


def run_table(family: str, max_n: int, fmt: str, config: RunConfig) -> str:
    """Render one family's triangle in the requested format."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if max_n > config.truncation_order:
        raise ValueError(
            f"max_n {max_n} exceeds truncation order {config.truncation_order}"
        )
    table = build_tables(max_n, family)
    if fmt == "csv":
        return render_csv(table)
    if fmt == "json":
        return render_json(table)
    if fmt == "bfile":
        return render_bfile(table)
    raise ValueError(f"unknown format {fmt!r}")


def run_oracle(max_n: int, compare: bool, dump_path: Path | None, config: RunConfig) -> tuple[str, int]:
    """Enumerate up to max_n, print per-(n, k) counts, optionally diff tables."""
    if max_n > oracle.HARD_CAP:
        raise ValueError(f"oracle max_n capped at {oracle.HARD_CAP}, got {max_n}")
    if max_n < 1:
        raise ValueError("oracle needs max_n >= 1")
    lines = [f"exhaustive enumeration up to n = {max_n}"]
    rows: dict[str, dict[int, list[int]]] = {"C": {}, "E": {}, "A": {}, "S": {}}
    for n in range(1, max_n + 1):
        c_row, e_row = oracle.connected_counts(n)
        rows["C"][n] = c_row
        rows["E"][n] = e_row
    for n in range(max_n + 1):
        a_row, s_row = oracle.quasi_counts(n)
        rows["A"][n] = a_row
        rows["S"][n] = s_row
    for family in ("C", "E", "A", "S"):
        for n in sorted(rows[family]):
            values = " ".join(str(v) for v in rows[family][n])
            lines.append(f"{family} n={n}: {values}")
    status = 0
    if compare:
        mismatches = []
        for family in ("C", "E", "A", "S"):
            table = build_tables(max_n, family)
            for n in sorted(rows[family]):
                if n < table.start_n:
                    continue
                got = rows[family][n]
                want = list(table.row(n))
                if got != want:
                    mismatches.append(f"{family} n={n}: enumerated {got}, formula {want}")
        if mismatches:
            lines.append("COMPARE: MISMATCH")
            lines.extend("  " + m for m in mismatches)
            status = 1
        else:
            lines.append("COMPARE: formula tables match enumeration for all four families")
    if dump_path is not None:
        dump_path.write_text(oracle.dump_catalog(max_n), encoding="utf-8")
        lines.append(f"catalog dumped to {dump_path}")
    return "\n".join(lines) + "\n", status


def run_oeis_compare(sequence_id: str, bfile: Path | None, fetch: bool, config: RunConfig) -> tuple[str, int]:
    """Compare one sequence's b-file against the formula table."""
    mapping = config.sequence_map.get(sequence_id)
    if mapping is None:
        raise ValueError(f"no sequence mapping configured for {sequence_id!r}")
    path = bfile if bfile is not None else bfile_path(config, sequence_id)
    if fetch:
        path = fetch_bfile(sequence_id, bfile_path(config, sequence_id))
    if not path.exists():
        raise ValueError(f"b-file not found: {path} (use --fetch or --bfile)")
    entries = parse_bfile(path.read_text(encoding="utf-8"))
    table = build_tables(config.truncation_order, mapping.family)
    report = compare_with_bfile(mapping, table, entries)
    return report.render(), 0 if report.ok else 1


def _write_output(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spm",
        description="Exact count tables for series-parallel matroids, "
        "with verification and brute-force comparison.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit one family's count triangle")
    p_table.add_argument("--family", required=True, choices=FAMILIES)
    p_table.add_argument("--max-n", type=int, required=True)
    p_table.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")
    p_table.add_argument("--out", type=Path)

    p_verify = sub.add_parser("verify", help="run the identity verification suites")
    p_verify.add_argument("--order", type=int, default=12)

    p_oracle = sub.add_parser("oracle", help="exhaustive enumeration and comparison")
    p_oracle.add_argument("--max-n", type=int, required=True)
    p_oracle.add_argument("--compare", action="store_true")
    p_oracle.add_argument("--dump", type=Path)

    p_oeis = sub.add_parser("oeis", help="compare a table against an OEIS b-file")
    p_oeis.add_argument("--id", required=True)
    group = p_oeis.add_mutually_exclusive_group()
    group.add_argument("--bfile", type=Path)
    group.add_argument("--fetch", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            config = RunConfig()
            text = run_table(args.family, args.max_n, args.format, config)
            _write_output(text, args.out)
            return 0
        if args.command == "verify":
            config = RunConfig(
                truncation_order=args.order,
                oracle_max_n=min(args.order, 6),
            )
            report = run_verify(config)
            sys.stdout.write(report.render())
            return 0 if report.ok else 1
        if args.command == "oracle":
            config = RunConfig()
            text, status = run_oracle(args.max_n, args.compare, args.dump, config)
            sys.stdout.write(text)
            return status
        if args.command == "oeis":
            config = RunConfig()
            text, status = run_oeis_compare(args.id, args.bfile, args.fetch, config)
            sys.stdout.write(text)
            return status
        parser.error(f"unknown command {args.command!r}")
    except BFileParseError as exc:
        sys.stderr.write(f"error: b-file parse failure: {exc}\n")
        return USAGE_ERROR
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
