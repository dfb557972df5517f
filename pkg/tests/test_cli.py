import csv
import io
import json

import pytest

from binom3k.cli import run
from binom3k.registry import builtin_catalog, save_catalog


def out_of(capsys):
    return capsys.readouterr().out


def test_scan(capsys):
    assert run(["scan"]) == 0
    lines = out_of(capsys).strip().splitlines()
    assert len(lines) == 9
    assert lines[0] == "27/4"
    assert "6" in lines


def test_verify_json(capsys):
    assert run(["verify", "--id", "eq-italy", "--digits", "40",
                "--format", "json"]) == 0
    text = out_of(capsys)
    obj = json.loads(text)
    assert obj["suite"]["digits"] == 40
    assert obj["suite"]["pass"] == 1
    report = obj["reports"][0]
    assert report["status"] == "PASS"
    assert report["matched_digits"] >= 38
    assert report["lhs"].startswith("1.0414595864")
    # decimal-string round trip is byte-identical
    assert json.dumps(obj, indent=2) + "\n" == text


def test_verify_divergent_exits_zero(capsys):
    assert run(["verify", "--id", "xy-27-neg8-a2"]) == 0
    assert "SKIPPED_DIVERGENT" in out_of(capsys)


def test_verify_fail_exit_code(tmp_path, capsys):
    # corrupt one record's rhs so the suite must fail
    catalog = builtin_catalog()
    import dataclasses
    from binom3k import expressions as ex
    victim = next(r for r in catalog if r.id == "eq-italy")
    broken = dataclasses.replace(victim, rhs=victim.rhs + ex.ratlit(1, 10 ** 5))
    path = tmp_path / "broken.json"
    save_catalog([broken], path)
    assert run(["verify", "--id", "eq-italy", "--catalog", str(path)]) == 1


def test_usage_errors(capsys):
    assert run(["verify", "--id", "eq-italy", "--digits", "3"]) == 2
    assert run(["verify", "--id", "eq-italy", "--max-terms", "10"]) == 2
    assert run(["no-such-command"]) == 2
    assert run(["verify", "--id", "unknown-record"]) == 2
    capsys.readouterr()


def test_list(capsys):
    assert run(["list"]) == 0
    text = out_of(capsys)
    assert "eq-27-4" in text and "trig-F-pi6" in text


def test_eval(capsys):
    assert run(["eval", "--id", "eq-italy", "--digits", "20"]) == 0
    assert "1.0414595864" in out_of(capsys)


def test_eval_rejects_boundary(capsys):
    assert run(["eval", "--id", "eq-27-4"]) == 2
    capsys.readouterr()


def test_csv_format(capsys):
    assert run(["verify", "--id", "trig-D-pi6", "--format", "csv"]) == 0
    rows = list(csv.reader(io.StringIO(out_of(capsys))))
    assert rows[0] == ["id", "status", "matched_digits", "terms_used",
                       "tail", "elapsed_ms"]
    assert rows[1][0] == "trig-D-pi6"
    assert rows[1][1] == "PASS"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert run(["verify", "--id", "eq-6", "--format", "json",
                "--out", str(target)]) == 0
    assert json.loads(target.read_text())["suite"]["pass"] == 1
    assert out_of(capsys) == ""


def test_sweep_command(capsys):
    assert run(["sweep", "--family", "THM7_FIB", "--point", "p=-2,q=5",
                "--digits", "20"]) == 0
    assert "PASS" in out_of(capsys)


def test_sweep_bad_point(capsys):
    assert run(["sweep", "--family", "THM1_FIB", "--point", "bogus=1"]) == 2
    capsys.readouterr()


def test_check_derivatives_command(capsys):
    assert run(["check-derivatives", "--level", "A_to_B", "--x", "9",
                "--y", "1", "--digits", "30", "--format", "json"]) == 0
    obj = json.loads(out_of(capsys))
    assert obj["reports"][0]["status"] == "PASS"


def test_verify_all_custom_catalog(tmp_path, capsys):
    catalog = [r for r in builtin_catalog() if r.id.startswith("trig")]
    path = tmp_path / "trig.json"
    save_catalog(catalog, path)
    assert run(["verify-all", "--catalog", str(path), "--digits", "15",
                "--jobs", "1", "--format", "json"]) == 0
    obj = json.loads(out_of(capsys))
    assert obj["suite"]["pass"] == len(catalog)
    assert obj["suite"]["fail"] == 0
