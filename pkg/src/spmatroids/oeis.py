"""OEIS b-file parsing, rendering, and table comparison.

A b-file is a plain-text sequence dump with one `index value` pair per
line; `#` starts a comment.  Before any comparison verdict the configured
index mapping is validated against exhaustively enumerated rows, so a
wrong row/column offset can never produce a false PASS.
"""

from __future__ import annotations

import urllib.request
from dataclasses import dataclass
from pathlib import Path

from . import oracle
from .config import RunConfig, SequenceMapping
from .spcounts import TriangularCountTable

ORACLE_VALIDATION_MAX_N = 4


class BFileParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse b-file text into (index, value) pairs, ignoring comments."""
    entries: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(line_no, f"expected `index value`, got {raw!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(line_no, f"non-integer token in {raw!r}") from None
        if entries and idx != entries[-1][0] + 1:
            raise BFileParseError(
                line_no, f"non-contiguous index {idx} after {entries[-1][0]}"
            )
        entries.append((idx, val))
    return entries


def render_bfile(table: TriangularCountTable, first_index: int = 1, comment: str = "") -> str:
    """Row-major b-file text for a table; indices count up from first_index."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    idx = first_index
    for i, row in enumerate(table.rows):
        for value in row:
            lines.append(f"{idx} {value}")
            idx += 1
    return "\n".join(lines) + "\n"


def _oracle_row(family: str, n: int) -> list[int]:
    if family in ("C", "E"):
        c_row, e_row = oracle.connected_counts(n)
        return c_row if family == "C" else e_row
    a_row, s_row = oracle.quasi_counts(n)
    return a_row if family == "A" else s_row


@dataclass
class OeisReport:
    sequence_id: str
    family: str
    mapping_validated: bool
    validated_entries: int
    compared_entries: int
    first_mismatch: tuple[int, int, int, int, int] | None  # (index, n, k, got, want)
    note: str = ""

    @property
    def ok(self) -> bool:
        return (
            self.mapping_validated
            and self.first_mismatch is None
            and self.compared_entries > 0
        )

    def render(self) -> str:
        lines = [f"{self.sequence_id} (family {self.family})"]
        if self.mapping_validated:
            lines.append(
                f"  mapping validated against enumeration: "
                f"{self.validated_entries} entries with n <= {ORACLE_VALIDATION_MAX_N}"
            )
        else:
            lines.append(f"  mapping NOT validated: {self.note}")
            lines.append("  refusing to report PASS with an unvalidated mapping")
            return "\n".join(lines) + "\n"
        lines.append(f"  overlap with formula table: {self.compared_entries} entries")
        if self.first_mismatch is None:
            lines.append("  all overlapping entries match")
            lines.append("  PASS")
        else:
            idx, n, k, got, want = self.first_mismatch
            lines.append(
                f"  FIRST MISMATCH at b-file index {idx} -> (n, k) = ({n}, {k}): "
                f"b-file has {got}, table has {want}"
            )
            lines.append("  FAIL")
        return "\n".join(lines) + "\n"


def compare_with_bfile(
    mapping: SequenceMapping,
    table: TriangularCountTable,
    entries: list[tuple[int, int]],
) -> OeisReport:
    """Compare b-file entries against a table through the index mapping.

    The mapping is first sanity-checked against brute-force rows for
    n <= 4; with zero validated entries or any validation mismatch the
    comparison refuses to pass.
    """
    if not entries:
        return OeisReport(
            mapping.id, mapping.family, False, 0, 0, None, "empty b-file"
        )
    first_index = entries[0][0]
    oracle_rows = {
        n: _oracle_row(mapping.family, n)
        for n in range(mapping.row_offset, ORACLE_VALIDATION_MAX_N + 1)
    }
    validated = 0
    for idx, value in entries:
        n, k = mapping.position(idx - first_index)
        if n in oracle_rows:
            if value != oracle_rows[n][k]:
                return OeisReport(
                    mapping.id,
                    mapping.family,
                    False,
                    validated,
                    0,
                    None,
                    f"index {idx} -> (n, k) = ({n}, {k}): b-file has {value}, "
                    f"enumeration gives {oracle_rows[n][k]}",
                )
            validated += 1
    if validated == 0:
        return OeisReport(
            mapping.id,
            mapping.family,
            False,
            0,
            0,
            None,
            "no b-file entries fall in the enumeration range",
        )
    compared = 0
    first_mismatch = None
    for idx, value in entries:
        n, k = mapping.position(idx - first_index)
        if table.start_n <= n <= table.max_n:
            compared += 1
            want = table.value(n, k)
            if value != want and first_mismatch is None:
                first_mismatch = (idx, n, k, value, want)
    return OeisReport(
        mapping.id, mapping.family, True, validated, compared, first_mismatch
    )


def bfile_path(config: RunConfig, sequence_id: str) -> Path:
    return Path(config.fixtures_dir) / f"b{sequence_id[1:]}.txt"


def fetch_bfile(sequence_id: str, dest: Path, timeout: float = 30.0) -> Path:
    """Download a b-file from oeis.org and cache it at `dest`."""
    url = f"https://oeis.org/{sequence_id}/b{sequence_id[1:]}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        data = resp.read()
    dest.parent.mkdir(parents=True, exist_ok=True)
    dest.write_bytes(data)
    return dest
