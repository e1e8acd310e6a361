"""Tests for the command-line front end."""

import json

import pytest

from spmatroids.cli import main, run_oracle, run_table
from spmatroids.config import RunConfig
from spmatroids.oeis import parse_bfile
from spmatroids.spcounts import build_tables


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_csv_contains_pinned_row(capsys):
    code, out, _ = run_cli(capsys, "table", "--family", "C", "--max-n", "4")
    assert code == 0
    assert "n,k,value" in out
    assert "4,2,6" in out


def test_table_json_quasi_rows(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--family", "A", "--max-n", "2", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["rows"] == [[1], [1, 1], [1, 3, 1]]
    assert obj["family"] == "A" and obj["start_n"] == 0


def test_table_e_row_five(capsys):
    code, out, _ = run_cli(capsys, "table", "--family", "E", "--max-n", "5")
    assert code == 0
    assert "5,3,15" in out


def test_table_writes_file(tmp_path, capsys):
    out_path = tmp_path / "c.csv"
    code, out, _ = run_cli(
        capsys, "table", "--family", "C", "--max-n", "3", "--out", str(out_path)
    )
    assert code == 0
    assert out == ""
    assert "3,2,1" in out_path.read_text()


def test_table_unknown_family_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--family", "Q", "--max-n", "3"])
    assert exc.value.code == 2


def test_table_max_n_above_order_is_config_error(capsys):
    code, _, err = run_cli(capsys, "table", "--family", "C", "--max-n", "40")
    assert code == 2
    assert "truncation order" in err


def test_formats_mutually_consistent():
    config = RunConfig()
    table = build_tables(5, "S")
    csv_text = run_table("S", 5, "csv", config)
    json_text = run_table("S", 5, "json", config)
    bfile_text = run_table("S", 5, "bfile", config)

    csv_vals = {}
    for line in csv_text.splitlines()[1:]:
        n, k, v = (int(t) for t in line.split(","))
        csv_vals[(n, k)] = v
    assert all(csv_vals[(n, k)] == table.value(n, k) for (n, k) in csv_vals)

    obj = json.loads(json_text)
    flat_json = [v for row in obj["rows"] for v in row]
    flat_bfile = [v for _, v in parse_bfile(bfile_text)]
    flat_csv = [
        csv_vals[(n, k)]
        for n in range(table.start_n, table.max_n + 1)
        for k in range(n + 1)
    ]
    assert flat_json == flat_bfile == flat_csv


def test_output_deterministic():
    config = RunConfig()
    assert run_table("G", 6, "csv", config) == run_table("G", 6, "csv", config)
    a, _ = run_oracle(3, True, None, config)
    b, _ = run_oracle(3, True, None, config)
    assert a == b


def test_oracle_output_and_compare(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--max-n", "4", "--compare")
    assert code == 0
    assert "C n=1: 1 1" in out
    assert "C n=2: 0 1 0" in out
    assert "C n=3: 0 1 1 0" in out
    assert "C n=4: 0 1 6 1 0" in out
    assert "COMPARE: formula tables match enumeration" in out


def test_oracle_cap_is_config_error(capsys):
    code, _, err = run_cli(capsys, "oracle", "--max-n", "9")
    assert code == 2
    assert "capped" in err


def test_oracle_dump(tmp_path, capsys):
    dump = tmp_path / "catalog.txt"
    code, out, _ = run_cli(
        capsys, "oracle", "--max-n", "2", "--dump", str(dump)
    )
    assert code == 0
    assert dump.read_text().splitlines() == ["1 0 0 -", "1 1 1 1", "2 1 0 1,2"]


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--order", "6")
    assert code == 0
    assert "0 failed" in out
    assert "FLAG" in out


def test_oeis_fixture_comparison(capsys):
    for sid in ("A140945", "A361355", "A359985", "A361353"):
        code, out, _ = run_cli(capsys, "oeis", "--id", sid)
        assert code == 0, sid
        assert "PASS" in out


def test_oeis_unknown_id(capsys):
    code, _, err = run_cli(capsys, "oeis", "--id", "A000001")
    assert code == 2
    assert "no sequence mapping" in err


def test_oeis_parse_error_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\ngarbage\n")
    code, _, err = run_cli(
        capsys, "oeis", "--id", "A140945", "--bfile", str(bad)
    )
    assert code == 2
    assert "line 2" in err
