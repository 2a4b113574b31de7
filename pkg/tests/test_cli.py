import json
import subprocess
import sys

import pytest

from vnum import checks
from vnum.cli import main

KEYS = ["check_id", "instance", "formula", "computed", "status", "notes"]


@pytest.fixture(autouse=True)
def reset_guards():
    yield
    checks.set_guards(None, None)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gens_and_alpha(capsys):
    code, out, _ = run(capsys, "gens", "I(path(4))")
    assert code == 0 and out.strip() == "(x1*x2, x2*x3, x3*x4)"
    code, out, _ = run(capsys, "alpha", "pow(I(path(4)),2)", "--format", "json")
    assert code == 0 and json.loads(out)["alpha"] == 4


def test_v_reports_witness(capsys):
    code, out, _ = run(capsys, "v", "I(path(8))", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["v"] == 2 and data["witness"] == "x2*x6"
    for method in ("colon", "witness"):
        code, out, _ = run(capsys, "v", "pow(I(path(8)),2)", "--method", method, "--format", "json")
        assert code == 0 and json.loads(out)["v"] == 4


def test_ass_marks_embedded(capsys):
    code, out, _ = run(capsys, "ass", "(x1^2, x1*x2)", "--format", "json")
    primes = json.loads(out)["primes"]
    assert code == 0 and primes == [{"prime": "(x1)", "embedded": False}, {"prime": "(x1, x2)", "embedded": True}]


def test_check_json_schema_and_known_issue_exit(capsys):
    code, out, err = run(capsys, "check", "prop-5.11-forest", "--range", "family=path,n=8,k=1", "--format", "json")
    (rep,) = json.loads(out)
    assert code == 0
    assert list(rep) == KEYS and rep["status"] == "DISAGREE"
    assert "1 known-issue DISAGREE" in err


def test_unexpected_disagree_exits_one(capsys):
    code, out, _ = run(capsys, "check", "thm-5.14-complete-symbolic", "--range", "n=3,k=3")
    assert code == 1 and "DISAGREE" in out


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "check", "no-such-check")[0] == 2
    assert run(capsys, "v", "pow(I(path(8)) 2)")[0] == 2
    assert run(capsys, "check", "thm-4.2-path-square", "--range", "q=1..2")[0] == 2
    assert run(capsys, "v", "I(path(4))", "--method", "stable-set")[0] == 0
    assert run(capsys, "v", "(x1^2, x1*x2)", "--method", "colon")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["v"])
    assert info.value.code == 2


def test_guard_exits_three(capsys):
    code, _, err = run(capsys, "v", "pow(I(cycle(9)),3)", "--method", "witness", "--max-witness-degree", "2")
    assert code == 3 and "guard" in err
    code, _, _ = run(capsys, "check", "thm-5.6-sandwich", "--range", "family=cycle,n=9,k=2",
                     "--max-witness-degree", "2")
    assert code == 3


def test_seed_feeds_tree_fixtures(capsys):
    code, out, _ = run(capsys, "check", "lem-2.23-forest-recursion", "--range", "family=tree,n=8,k=2",
                       "--seed", "5", "--format", "json")
    (rep,) = json.loads(out)
    assert code == 0 and rep["instance"]["seed"] == 5


def test_table_output_is_aligned(capsys):
    code, out, _ = run(capsys, "check", "thm-4.2-path-square", "--range", "n=4..6")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert lines[0].startswith("check") and set(lines[1]) <= {"-", " "}
    assert all(line.index("AGREE") == lines[2].index("AGREE") for line in lines[2:])


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "prop-5.11-forest" in out and "[known issue]" in out


def test_sweep_json_via_console_script():
    proc = subprocess.run([sys.executable, "-m", "vnum.cli", "sweep", "--suite", "all", "--format", "json"],
                          capture_output=True, text=True, timeout=600)
    reports = json.loads(proc.stdout)
    assert {r["check_id"] for r in reports} == set(checks.REGISTRY)
    assert all(list(r) == KEYS for r in reports)
    # thm-5.14 at (n, k) = (3, 3) and (4, 4) is the only unexpected failure in the default suite
    assert proc.returncode == 1
