"""Tests for b-file parsing and OEIS sequence comparison."""

import pytest

from spmatroids.config import DEFAULT_SEQUENCE_MAP, RunConfig, SequenceMapping
from spmatroids.oeis import (
    BFileParseError,
    bfile_path,
    compare_with_bfile,
    parse_bfile,
    render_bfile,
)
from spmatroids.spcounts import build_tables


def test_parse_bfile_basic():
    text = "# a comment\n1 1\n2 1\n\n3 0\n"
    assert parse_bfile(text) == [(1, 1), (2, 1), (3, 0)]


def test_parse_bfile_errors_carry_line_numbers():
    with pytest.raises(BFileParseError) as exc:
        parse_bfile("1 1\nnot numbers here\n")
    assert exc.value.line_no == 2
    with pytest.raises(BFileParseError) as exc:
        parse_bfile("1 1\n5 2\n")  # index jump
    assert exc.value.line_no == 2
    with pytest.raises(BFileParseError):
        parse_bfile("1 2 3\n")


def test_render_parse_roundtrip():
    table = build_tables(5, "C")
    text = render_bfile(table, comment="roundtrip")
    entries = parse_bfile(text)
    values = [v for _, v in entries]
    flat = [v for row in table.rows for v in row]
    assert values == flat


def test_mapping_position():
    m = SequenceMapping("A140945", "C", row_offset=1)
    assert m.position(0) == (1, 0)
    assert m.position(1) == (1, 1)
    assert m.position(2) == (2, 0)
    assert m.position(5) == (3, 0)
    m0 = SequenceMapping("A359985", "A", row_offset=0)
    assert m0.position(0) == (0, 0)
    assert m0.position(1) == (1, 0)


def test_fixture_comparison_passes_for_all_sequences():
    config = RunConfig()
    for sid, mapping in DEFAULT_SEQUENCE_MAP.items():
        path = bfile_path(config, sid)
        assert path.exists(), f"missing fixture for {sid}"
        entries = parse_bfile(path.read_text(encoding="utf-8"))
        table = build_tables(config.truncation_order, mapping.family)
        report = compare_with_bfile(mapping, table, entries)
        assert report.mapping_validated
        assert report.first_mismatch is None
        assert report.compared_entries > 0
        assert report.ok
        assert "PASS" in report.render()


def test_wrong_offset_mapping_refuses_to_pass():
    config = RunConfig()
    wrong = SequenceMapping("A140945", "C", row_offset=2)
    entries = parse_bfile(bfile_path(config, "A140945").read_text(encoding="utf-8"))
    table = build_tables(12, "C")
    report = compare_with_bfile(wrong, table, entries)
    assert not report.mapping_validated
    assert not report.ok
    assert "refusing" in report.render()


def test_corrupted_value_is_reported():
    config = RunConfig()
    mapping = DEFAULT_SEQUENCE_MAP["A140945"]
    entries = parse_bfile(bfile_path(config, "A140945").read_text(encoding="utf-8"))
    # corrupt an entry outside the n <= 4 validation range
    entries = [(i, v + 1 if i == len(entries) else v) for i, v in entries]
    table = build_tables(12, "C")
    report = compare_with_bfile(mapping, table, entries)
    assert report.mapping_validated
    assert report.first_mismatch is not None
    assert not report.ok
    assert "FIRST MISMATCH" in report.render()


def test_empty_bfile_refused():
    mapping = DEFAULT_SEQUENCE_MAP["A140945"]
    table = build_tables(6, "C")
    report = compare_with_bfile(mapping, table, [])
    assert not report.ok


def test_fixtures_dir_env_override(tmp_path, monkeypatch):
    from spmatroids.config import default_fixtures_dir

    monkeypatch.setenv("SPM_FIXTURES", str(tmp_path))
    assert default_fixtures_dir() == tmp_path
    monkeypatch.delenv("SPM_FIXTURES")
    assert default_fixtures_dir().name == "fixtures"
