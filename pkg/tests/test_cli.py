"""Command line surface: exit codes, file round trips, stable output."""

import csv
import io
import json

import pytest

from gbflab.cli import main
from gbflab.criteria import revalidate_report, report_from_dict


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decide_exit_codes(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "decide", "9", "3")
    assert code == 1 and "C1-LamLeung" in out
    code, out, _ = run(capsys, "decide", "4", "5")
    assert code == 0 and "witness written" in out
    assert (tmp_path / "witness_4x5.json").exists()
    code, out, _ = run(capsys, "decide", "14", "1")
    assert code == 2 and "Unknown" in out


def test_decide_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decide", "4"])
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        main(["decide", "four", "2"])
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        main(["decide", "1", "2"])
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        main(["decide", "4", "99"])
    assert exc.value.code == 3


def test_decide_json_round_trip(capsys):
    code, out, _ = run(capsys, "decide", "398", "7", "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["verdict"] == "not_exists"
    assert payload["criterion"] == "C3-P7"
    assert revalidate_report(report_from_dict(payload["report"]))


def test_decide_json_exists_contains_witness(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "decide", "6", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rule"] == "E3"
    assert len(payload["witness"]["values"]) == 4


def test_construct_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "w.json"
    code, out, _ = run(capsys, "construct", "6", "2", "--out", str(path))
    assert code == 0 and path.exists()
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and out.startswith("OK")

    code, out, _ = run(capsys, "construct", "8", "3", "--out", str(path))
    assert code == 0 and "lifted by 2" in out
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0


def test_construct_refusal(capsys):
    code, _, err = run(capsys, "construct", "3", "2")
    assert code == 2 and "no construction rule" in err


def test_verify_rejects_bad_files(tmp_path, capsys):
    flat = tmp_path / "bad.json"
    flat.write_text('{"m": 4, "n": 2, "values": [0, 0, 0, 0]}')
    code, out, _ = run(capsys, "verify", str(flat))
    assert code == 1 and "y=0" in out

    truncated = tmp_path / "trunc.json"
    truncated.write_text('{"m": 4, "n": 2, "values": [0, 0]}')
    code, _, err = run(capsys, "verify", str(truncated))
    assert code == 3

    truncated.write_text('{"m": 4, "values": [0, 0]}')
    code, _, err = run(capsys, "verify", str(truncated))
    assert code == 3 and "missing field" in err

    garbled = tmp_path / "garbled.json"
    garbled.write_text("{nope")
    code, _, _ = run(capsys, "verify", str(garbled))
    assert code == 3


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "2", "2")
    assert code == 0 and out.startswith("8 of 16")
    code, out, _ = run(capsys, "oracle", "3", "1")
    assert code == 0 and out.startswith("0 of 9")
    code, _, err = run(capsys, "oracle", "6", "2", "--budget", "100")
    assert code == 3 and "budget" in err
    # 5^8 = 390625 sits inside the default budget and runs
    code, out, _ = run(capsys, "oracle", "5", "3")
    assert code == 0 and out.startswith("0 of 390625")


def test_scan_csv_shape(capsys):
    code, out, _ = run(capsys, "scan", "--m", "2..10", "--n", "1..4")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["m", "n", "verdict", "criterion", "detail"]
    assert len(rows) == 1 + 9 * 4
    verdicts = {(int(r[0]), int(r[1])): r[2] for r in rows[1:]}
    assert verdicts[(3, 2)] == "not_exists"
    assert verdicts[(4, 3)] == "exists"
    assert verdicts[(2, 1)] == "unknown"


def test_scan_all_c1_column(capsys):
    code, out, _ = run(capsys, "scan", "--m", "3..3", "--n", "1..6")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert len(rows) == 6
    assert all(r[2] == "not_exists" and r[3] == "C1-LamLeung" for r in rows)


def test_scan_markdown(capsys):
    code, out, _ = run(capsys, "scan", "--m", "4..4", "--n", "1..2",
                       "--format", "md")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("| m | n |")
    assert len(lines) == 2 + 2


def test_scan_bad_range(capsys):
    code, _, err = run(capsys, "scan", "--m", "5", "--n", "1..2")
    assert code == 3
    code, _, err = run(capsys, "scan", "--m", "9..2", "--n", "1..2")
    assert code == 3


def test_table_outputs(capsys):
    code, out, _ = run(capsys, "table", "rp")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()[1:]]
    assert len(rows) == 12
    assert rows[0] == ["17", "8", "3"]

    code, out, _ = run(capsys, "table", "p7")
    rows = [line.split() for line in out.strip().splitlines()[1:]]
    assert len(rows) == 11
    assert rows[-1] == ["199", "1", "9", "9"]
