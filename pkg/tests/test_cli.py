import json

import pytest
from click.testing import CliRunner

from simulcores.cli import cli


def run(*args):
    return CliRunner().invoke(cli, list(args), obj={})


def test_count_total():
    r = run("count", "--s", "3", "--t", "4")
    assert r.exit_code == 0 and r.output.splitlines()[-1] == "11"


def test_count_finite_progression():
    r = run("count", "--s", "2", "--t", "3", "--p", "1")
    assert r.exit_code == 0 and r.output.splitlines()[-1] == "3"


def test_count_needs_max_n_for_composite():
    assert run("count", "--s", "4", "--t", "2").exit_code == 2
    r = run("count", "--s", "4", "--t", "2", "--max-n", "5", "--format", "csv")
    assert r.exit_code == 0
    assert r.output.splitlines()[:3] == ["n,coefficient", "0,1", "1,1"]


def test_count_single_hook_is_usage_error():
    assert run("count", "--s", "3", "--t", "0").exit_code == 2


def test_genfun_csv():
    r = run("genfun", "--s", "2", "--t", "3", "--trunc", "4")
    assert r.output == "n,coefficient\n0,1\n1,1\n2,0\n3,1\n4,0\n"


def test_genfun_json_schema():
    r = run("--no-timestamp", "genfun", "--s", "6", "--t", "9", "--trunc", "10", "--format", "json")
    rec = json.loads(r.output)
    assert rec["schema"] == 1
    assert rec["meta"]["d"] == 3 and "timestamp" not in rec["meta"]
    assert [row["n"] for row in rec["rows"]] == list(range(11))


def test_json_is_deterministic():
    args = ("--no-timestamp", "genfun", "--s", "4", "--t", "6", "--trunc", "40", "--format", "json")
    assert run(*args).output == run(*args).output
    assert "timestamp" in json.loads(run(*args[1:]).output)["meta"]


def test_bad_arguments():
    assert run("genfun", "--s", "0", "--t", "3").exit_code == 2
    assert run("verify", "nonsense").exit_code == 2
    assert run("verify").exit_code == 2
    assert run("verify", "dream", "--p", "4", "--trunc", "50").exit_code == 2


@pytest.mark.parametrize("suite", ["dream", "pentagonal", "jacobi", "xiayao", "robbins", "extra"])
def test_verify_suites_pass(suite):
    r = run("verify", suite, "--trunc", "200")
    assert r.exit_code == 0, r.output
    assert "FAIL" not in r.output


def test_verify_structural_suites():
    for suite in ("g-recurrence", "f-recurrence", "constant-term", "conjecture2"):
        assert run("verify", suite, "--tmax", "8", "--smax", "6").exit_code == 0


def test_verify_catalogue_reports_refutation():
    r = run("verify", "--catalogue", "--trunc", "600")
    assert r.exit_code == 1
    failing = [line for line in r.output.splitlines() if line.startswith("FAIL ")]
    assert len(failing) == 1 and "16n+12" in failing[0]


def test_verify_json():
    r = run("--no-timestamp", "verify", "pentagonal", "--trunc", "100", "--format", "json")
    rec = json.loads(r.output)
    assert rec["meta"]["ok"] is True and rec["rows"][0]["check"] == "pentagonal"


def test_scan():
    r = run("--no-timestamp", "scan", "--s", "4", "--t", "2", "--mod", "0", "--amax", "11", "--trunc", "500")
    rec = json.loads(r.output)
    assert {"A": 11, "B": [9], "m": 0, "status": "verified-to-500"} in rec["rows"]
    assert run("scan", "--s", "4", "--t", "2", "--mod", "0", "--amax", "60", "--trunc", "500").exit_code == 2


def test_fayers():
    r = run("fayers", "--t", "3")
    assert r.output.splitlines()[0] == "s^2 + 9s + 14"
    r = run("fayers", "--t", "2", "--s", "5")
    assert "count 32" in r.output and "brute force 32" in r.output
    assert "FAIL" not in r.output
    assert run("fayers", "--t", "2", "--s", "4").exit_code == 2


def test_abacus_round_trip(tmp_path):
    r = run("abacus", "5,3,3", "--d", "3")
    assert r.exit_code == 0
    path = tmp_path / "view.txt"
    path.write_text(r.output)
    back = run("abacus", "--read", str(path))
    assert back.output.strip() == "(5,3,3)"


def test_abacus_rejects_bad_partition():
    assert run("abacus", "3,5").exit_code == 2
