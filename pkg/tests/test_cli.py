import json

import pytest

from irratio.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, emit_report, main
from irratio.grammar import parse_group_spec
from irratio.suites import Item, SuiteResult


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_dihedral_fails_with_witness(capsys):
    code, out, _ = run(capsys, "check", "dihedral(8)", "--format", "json")
    assert code == EXIT_FAIL
    d = json.loads(out)
    assert d["verdict"] is False
    assert d["witness"] == {"x": "(1 2 3 4)", "k": 3, "g": d["witness"]["g"]}
    assert d["order"] == 8


def test_check_suzuki_two_irrational(capsys):
    code, out, _ = run(capsys, "check", "sz(8)", "--pi", "2")
    assert code == EXIT_PASS
    assert "pi-irrational for pi = {2}: yes" in out


def test_check_cyclic(capsys):
    code, out, _ = run(capsys, "check", "cyclic(12)", "--format", "json")
    assert code == EXIT_PASS and json.loads(out)["verdict"] is True


def test_check_odd_primes(capsys):
    code, out, _ = run(capsys, "check", "suzuki_2group(8)", "--pi", "2'", "--format", "json")
    assert code == EXIT_PASS and json.loads(out)["pi"] == []
    code, _, _ = run(capsys, "check", "symmetric(4)", "--pi", "2'")
    assert code == EXIT_FAIL


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "symmetric(4)", "--format", "json")
    assert code == EXIT_PASS and len(json.loads(out)["classes"]) == 5


def test_usage_errors(capsys):
    assert run(capsys, "check", "foo(3)")[0] == EXIT_USAGE
    assert run(capsys, "check", "cyclic(3")[0] == EXIT_USAGE
    assert run(capsys, "suite", "no_such_suite")[0] == EXIT_USAGE
    assert run(capsys, "bogus")[0] == EXIT_USAGE
    assert run(capsys, "check", "cyclic(4)", "--pi", "x")[0] == EXIT_USAGE


def test_budget_exit(capsys, monkeypatch):
    # main() exports --max-order; setenv first so the old value is restored afterwards
    monkeypatch.setenv("IRRATIO_MAX_ORDER", "500000")
    code, _, err = run(capsys, "check", "psl(2,13)", "--max-order", "100")
    assert code == EXIT_BUDGET and "budget" in err


def test_suite_json_is_byte_stable(capsys):
    a = run(capsys, "suite", "p3_groups", "--format", "json", "--no-timing", "--seed", "3")
    b = run(capsys, "suite", "p3_groups", "--format", "json", "--no-timing", "--seed", "3")
    assert a[0] == EXIT_PASS and a[1] == b[1]
    d = json.loads(a[1])
    assert list(d) == ["suite", "items", "pass", "version"]
    assert list(d["items"][0]) == ["desc", "spec", "expected", "observed", "pass"]


def test_suite_text(capsys):
    code, out, _ = run(capsys, "suite", "wreath_counterexample")
    assert code == EXIT_PASS and out.startswith("suite wreath_counterexample: PASS")
    assert "witness" in out


def test_empty_report():
    d = json.loads(emit_report(SuiteResult("empty")))
    assert d["items"] == [] and d["pass"] is True


def test_failing_item_carries_witness():
    item = Item("x", "cyclic(2)", True, False, False, witness={"x": "[1]", "k": 1, "g": "[0]"})
    d = json.loads(emit_report(SuiteResult("one", [item])))
    assert d["pass"] is False and d["items"][0]["witness"]["k"] == 1


def test_case_insensitive_names():
    assert str(parse_group_spec("PSL(2,7)")) == "psl(2,7)"
