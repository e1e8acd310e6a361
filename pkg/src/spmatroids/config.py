"""Run configuration: truncation orders, enumeration bounds, fixtures, and
the per-sequence index mapping used for OEIS b-file comparison."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class SequenceMapping:
    """How a b-file's linear indices map onto a triangular count table.

    Entries are read row-major (`read_order` supports only "by-rows"):
    the first data line corresponds to (n, k) = (row_offset, col_offset),
    and row n carries the columns col_offset .. n.
    """

    id: str
    family: str
    row_offset: int
    col_offset: int = 0
    read_order: str = "by-rows"

    def __post_init__(self):
        if self.read_order != "by-rows":
            raise ValueError(f"unsupported read_order {self.read_order!r}")

    def position(self, offset: int) -> tuple[int, int]:
        """(n, k) of the entry `offset` lines after the first data line."""
        n = self.row_offset
        k = self.col_offset
        remaining = offset
        while remaining > 0:
            width = n - self.col_offset + 1
            if remaining < width - (k - self.col_offset):
                k += remaining
                return n, k
            remaining -= width - (k - self.col_offset)
            n += 1
            k = self.col_offset
        return n, k


DEFAULT_SEQUENCE_MAP: dict[str, SequenceMapping] = {
    "A140945": SequenceMapping("A140945", "C", row_offset=1),
    "A361355": SequenceMapping("A361355", "E", row_offset=1),
    "A359985": SequenceMapping("A359985", "A", row_offset=0),
    "A361353": SequenceMapping("A361353", "S", row_offset=0),
}

FAMILY_TO_SEQUENCE = {m.family: m.id for m in DEFAULT_SEQUENCE_MAP.values()}


def default_fixtures_dir() -> Path:
    env = os.environ.get("SPM_FIXTURES")
    if env:
        return Path(env)
    return Path(__file__).parent / "fixtures"


@dataclass(frozen=True)
class RunConfig:
    truncation_order: int = 12
    oracle_max_n: int = 6
    output_format: str = "csv"
    fixtures_dir: Path = field(default_factory=default_fixtures_dir)
    sequence_map: dict[str, SequenceMapping] = field(
        default_factory=lambda: dict(DEFAULT_SEQUENCE_MAP)
    )

    def __post_init__(self):
        if self.truncation_order < self.oracle_max_n:
            raise ValueError(
                "truncation_order must be at least oracle_max_n "
                f"({self.truncation_order} < {self.oracle_max_n})"
            )
        if self.output_format not in ("csv", "json", "bfile"):
            raise ValueError(f"unknown output format {self.output_format!r}")
