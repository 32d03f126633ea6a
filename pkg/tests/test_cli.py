import csv
import io
import json
import subprocess
import sys

import pytest

from frobstar.cli import main, parse_range


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_parse_range():
    assert parse_range("5..20") == (5, 20)
    assert parse_range("7") == (7, 7)


def test_frobenius_all_agree():
    code, text = run("frobenius", "--a", "8", "--n", "3", "--method", "all")
    assert code == 0
    assert "closed: 719" in text and "frame: 719" in text and "oracle: 719" in text
    assert "agree: true" in text


def test_frobenius_closed_refused(capsys):
    code, _ = run("frobenius", "--a", "5", "--n", "4", "--method", "closed")
    assert code == 2
    assert "exceptional" in capsys.readouterr().err


def test_frobenius_oracle_on_exceptional():
    code, text = run("frobenius", "--a", "5", "--n", "4", "--method", "oracle")
    assert code == 0
    assert text.strip() == "frobenius oracle: 1113"


def test_all_on_exceptional_annotates():
    code, text = run("genus", "--a", "5", "--n", "6")
    assert code == 0
    assert "closed_form: refused" in text


def test_genus_all():
    code, text = run("genus", "--a", "5", "--n", "5", "--method", "all")
    assert code == 0
    assert text.count("1200") == 3 and "agree: true" in text


def test_genus_invalid_input():
    assert run("genus", "--a", "3", "--n", "3")[0] == 1


def test_genus_p1_oracle():
    code, text = run("genus", "--a", "8", "--n", "3", "--method", "oracle", "--p", "1")
    assert code == 0 and text.strip() == "genus p=1 oracle: 685"


def test_closed_needs_p0():
    assert run("genus", "--a", "8", "--n", "3", "--method", "closed", "--p", "1")[0] == 1


def test_mismatch_exit_code():
    code, text = run("frobenius", "--a", "5", "--n", "9")
    assert code == 3 and "agree: false" in text


def test_explicit_triple():
    code, text = run("frobenius", "--triple", "3", "5", "7", "--method", "oracle")
    assert code == 0 and text.strip() == "frobenius oracle: 4"


def test_apery_table_rectangle():
    code, text = run("apery", "--a", "8", "--n", "3", "--format", "table")
    assert code == 0
    rows = [line for line in text.splitlines() if line.startswith("z=")]
    assert len(rows) == 5
    assert all(len(r.split()) == 1 + 5 for r in rows)
    assert rows[-1].split()[-1] == "744"


def test_apery_flat_list():
    code, text = run("apery", "--triple", "3", "5", "7")
    assert code == 0 and "[0, 7, 5]" in text


def test_apery_json():
    code, text = run("apery", "--a", "5", "--n", "5", "--format", "json")
    body = json.loads(text)
    assert code == 0
    assert len(body["elements"]) == 76 and body["max"] == 2475
    assert body["frobenius"] == 2399 and body["genus"] == 1200


def test_verify_csv_single_row():
    code, text = run("verify", "--a", "8..8", "--n", "3..3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 1
    assert rows[0]["match"] == "true" and rows[0]["closed_g0"] == "719"


def test_verify_exceptional_record():
    code, text = run("verify", "--a", "5..5", "--n", "6..6")
    body = json.loads(text)
    rec = body["records"][0]
    assert code == 0
    assert rec["exceptional"] and rec["closed_g0"] == "refused"
    assert rec["oracle_g0"] == 4049 and rec["would_have_matched"] is True
    assert body["summary"]["refusals"] == 1


def test_verify_bad_range():
    assert run("verify", "--a", "4..6", "--n", "3..4")[0] == 1
    assert run("verify", "--a", "6..5", "--n", "3..4")[0] == 1


def test_verify_writes_file(tmp_path):
    target = tmp_path / "r.json"
    code, text = run("verify", "--a", "11..12", "--n", "5..6", "--out", str(target))
    assert code == 0 and text == ""
    assert json.loads(target.read_text(encoding="utf-8"))["summary"]["pairs"] == 4


def test_verify_json_key_order():
    _, text = run("verify", "--a", "8..8", "--n", "3..4")
    rec = json.loads(text)["records"][0]
    assert list(rec) == [
        "a", "n", "triple", "exceptional", "closed_g0", "oracle_g0", "closed_n0", "oracle_n0",
        "frame_valid", "frame_matches_oracle", "match", "would_have_matched",
    ]


def test_series_commands():
    code, text = run("series", "exp", "--a", "5", "--terms", "30")
    assert code == 0 and "PASS" in text
    code, text = run("series", "geometric", "--a", "5", "--b", "2")
    assert code == 0 and "closed    12" in text
    assert run("series", "reciprocal", "--a", "1")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "frobstar", "frobenius", "--a", "8", "--n", "3", "--method", "closed"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "719" in proc.stdout


def test_log_env(monkeypatch):
    monkeypatch.setenv("FROBSTAR_LOG", "debug")
    assert run("frobenius", "--a", "8", "--n", "3", "--method", "oracle")[0] == 0


@pytest.mark.parametrize("argv", [[], ["frobenius", "--method", "bogus"]])
def test_usage_errors(argv):
    assert run(*argv)[0] == 1
