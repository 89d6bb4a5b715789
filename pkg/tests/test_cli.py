import io
import json
import subprocess
import sys

import pytest

from sturmpal.cli import run_cli
from sturmpal.exactnum import parse_number
from sturmpal.subst import parse_rules

GOLDEN = "(3-1*sqrt(5))/2"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def machine(*argv):
    code, out, err = run("--format", "machine", *argv)
    assert code == 0 and err == "", err
    return json.loads(out)


def test_induce_golden_text():
    code, out, err = run("induce", "--alpha", GOLDEN, "--mode", "palindrome", "--sym", "one")
    assert code == 0 and err == ""
    assert "period length: 6" in out
    assert "phi: 0>00101;1>001" in out
    arrows = [tok for line in out.splitlines()[:6] for tok in line.split() if tok.startswith("--")]
    assert arrows == ["--G-->", "--E-->", "--G~-->", "--E-->", "--G-->", "--E-->"]


def test_cf_root_two():
    code, out, err = run("cf", "--alpha", "(0+1*sqrt(2))/1")
    assert (code, out.strip(), err) == (0, "preperiod=[1] period=[2]", "")


def test_word_rational_is_domain_error():
    code, out, err = run("word", "--alpha", "1/3", "--from", "0", "--to", "10")
    assert code == 1 and out == "" and "error" in err


def test_usage_errors():
    assert run("frobnicate")[0] == 2
    assert run("cf")[0] == 2
    code, _, err = run("cf", "--alpha", "(3-*sqrt(5))/2")
    assert code == 2 and "position 3" in err


def test_bad_seeds_domain_error():
    assert run("fixpoint", "--rules", "0>00101;1>001", "--seeds", "1|1", "--radius", "5")[0] == 1
    assert run("fixpoint", "--rules", "0>00101;1>001", "--seeds", "10", "--radius", "5")[0] == 1
    assert run("fixpoint", "--rules", "0>0;1>", "--seeds", "1|0", "--radius", "5")[0] == 1


def test_word_and_fixpoint_agree():
    code, word, _ = run("word", "--alpha", GOLDEN, "--start", "(3-1*sqrt(5))/4", "--from", "-5", "--to", "5")
    assert code == 0 and word.strip() == "10100100101"
    doc = machine("fixpoint", "--rules", "0>00101;1>001", "--seeds", "1|0", "--radius", "5")
    assert doc["window"] == {"origin": -5, "letters": "10100100101"}


def test_palindromes_output():
    doc = machine("palindromes", "--alpha", GOLDEN, "--radius", "3")
    assert set(doc["palindromes"]) == {"one", "zero", "gap"}
    assert doc["palindromes"]["gap"]["window"] == {"origin": -2, "letters": "010010"}
    for entry in doc["palindromes"].values():
        parse_number(entry["start"])
    code, out, _ = run("palindromes", "--alpha", GOLDEN, "--radius", "5")
    assert "...10100[1]00101..." in out


def test_machine_round_trip_induce_to_verify():
    for sym in ("one", "zero", "gap"):
        doc = machine("induce", "--alpha", "(5-1*sqrt(5))/10", "--sym", sym)
        assert parse_number(doc["alpha_from_phi"]) == parse_number(doc["cycle_start"]["alpha"])
        for entry in doc["trace"]:
            parse_number(entry["before"]["alpha"])
            parse_number(entry["after"]["alpha"])
        phi = parse_rules(doc["phi"])
        parse_rules(doc["psi"])
        cs = doc["cycle_start"]
        result = machine("verify", "--alpha", cs["alpha"], "--sym", cs["sym"], "--radius", "300", "--rules", doc["phi"])
        assert result["ok"] and all(result["verdicts"].values())
        assert parse_rules(result["rules"]) == phi


def test_verify_without_rules():
    doc = machine("verify", "--alpha", "(-1+1*sqrt(2))", "--sym", "gap", "--radius", "200")
    assert doc["verdicts"] == {"oracle_agrees": True, "regrowth_agrees": True, "fixed_window": True}


def test_verify_failure_exit_code():
    code, out, err = run("verify", "--alpha", GOLDEN, "--sym", "one", "--radius", "100", "--rules", "0>0;1>01")
    assert code == 1 and "fixed_window: FAIL" in out and err


def test_rauzy_machine():
    doc = machine("induce", "--alpha", "(-1+1*sqrt(2))", "--mode", "rauzy")
    assert [e["before"]["alpha"] for e in doc["trace"]] == ["(-1+1*sqrt(2))", "(0+1*sqrt(2))/2", "(2-1*sqrt(2))/2"]
    assert doc["phi"] == "0>10;1>010"


@pytest.mark.parametrize(
    "argv",
    [
        ("cf", "--alpha", GOLDEN),
        ("word", "--alpha", GOLDEN, "--from", "-3", "--to", "3"),
        ("palindromes", "--alpha", GOLDEN, "--radius", "10"),
        ("induce", "--alpha", GOLDEN, "--mode", "rauzy"),
        ("fixpoint", "--rules", "0>00101;1>001", "--seeds", "1|0", "--radius", "10"),
        ("verify", "--alpha", GOLDEN, "--radius", "50"),
    ],
)
def test_no_stderr_on_success(argv):
    for fmt in ("text", "machine"):
        code, out, err = run("--format", fmt, *argv)
        assert code == 0 and out and err == ""


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sturmpal", "cf", "--alpha", "(1+1*sqrt(5))/2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "preperiod=[] period=[1]"
