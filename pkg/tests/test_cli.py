import csv
import io
import json
import subprocess
import sys

import pytest

from levelzero.cli import run


def call(*argv):
    code, text, _ = run(list(argv))
    return code, text


def test_coxeter_command():
    code, text = call("coxeter", "--type", "A", "--rank", "3")
    report = json.loads(text)
    assert code == 0 and report["status"] == "pass"
    assert report["indices"] == [1, 2, 3]
    assert len(report["checks"]) == 3 * report["xi_count"]
    assert report["config"]["rank"] == 3


def test_verify_drinfeld_command():
    code, text = call("verify", "--suite", "drinfeld-fund", "--type", "A", "--rank", "1")
    report = json.loads(text)
    assert code == 0
    assert report["witnesses"][0]["coefficient"] == "-q^-2"
    assert set(report) >= {"config", "suite", "status", "witnesses", "timings"}


def _rows(text, *cols):
    return {tuple(r[c] for c in cols[:2]): tuple(r[c] for c in cols[2:]) for r in csv.DictReader(io.StringIO(text))}


def test_census_matches_graded_dims():
    c1, census = call("census", "--type", "A", "--rank", "1", "--lambda", "2", "--band", "3", "--format", "csv")
    c2, verify = call("verify", "--suite", "graded-dims", "--type", "A", "--rank", "1", "--lambda", "2",
                      "--band", "3", "--format", "csv")
    assert c1 == c2 == 0
    left = {k: v[0] for k, v in _rows(census, "weight", "degree", "count").items()}
    right = _rows(verify, "weight", "degree", "census", "module", "status")
    assert left.keys() == right.keys()
    for key, count in left.items():
        assert right[key][0] == count
        if right[key][2] == "pass":
            assert right[key][1] == count


def test_failure_exit_code():
    code, text = call("verify", "--suite", "higher-p-vanishing")
    assert code == 1 and json.loads(text)["counterexamples"]


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "nope"],
    ["roots", "--type", "Q"],
    ["crystal", "--format", "csv"],
    ["census", "--lambda", "1,1"],
    ["frobnicate"],
    ["roots", "--rank", "x"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_config_file_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sample\nrank = 2\nband = 1\nseed=4\n")
    code, text = call("roots", "--config", str(cfg), "--band", "0")
    report = json.loads(text)
    assert report["config"]["rank"] == 2      # from the file
    assert report["config"]["band"] == 0      # flag wins
    assert report["config"]["seed"] == 4
    assert all(r["coeffs"] for r in report["roots"]) and len(report["roots"]) == 3


def test_bad_config_file(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = blue\n")
    assert call("roots", "--config", str(cfg))[0] == 2
    assert call("roots", "--config", str(tmp_path / "missing.cfg"))[0] == 2


def test_reports_are_deterministic(tmp_path):
    argv = ["verify", "--suite", "tensor-rule,forms", "--seed", "3", "--no-timings"]
    first = call(*argv)[1]
    second = call(*(argv + ["--jobs", "2"]))[1]
    assert first == call(*argv)[1]
    assert json.loads(first)["suites"] == json.loads(second)["suites"]
    assert [s["suite"] for s in json.loads(second)["suites"]] == ["forms", "tensor-rule"]


def test_output_file_and_dot(tmp_path):
    out = tmp_path / "c.dot"
    code, text = call("crystal", "--rank", "1", "--lambda", "2", "--band", "1", "--format", "dot", "--output", str(out))
    assert code == 0 and out.read_text() == text and text.startswith("digraph")


def test_crystal_json_flags_truncation():
    report = json.loads(call("crystal", "--rank", "2", "--lambda", "1,1", "--band", "1")[1])
    assert report["truncated"] and report["axiom_violations"] == []
    assert any(n["boundary"] for n in report["nodes"])


def test_convex_order_command():
    report = json.loads(call("convex-order", "--rank", "2", "--window", "30")[1])
    assert report["status"] == "pass" and report["window"] == [-30, 30]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "levelzero.cli", "roots", "--rank", "1", "--band", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["roots"]) == 4


def test_suite_params_from_flags_and_file(tmp_path):
    assert call("verify", "--suite", "higher-p-vanishing", "--param", "literal=false")[0] == 0
    code, text = call("verify", "--suite", "schur-image", "--param", "realization=direct",
                      "--param", 'shape={"1":2}')
    assert code == 0 and json.loads(text)["checks"] == 4
    cfg = tmp_path / "p.cfg"
    cfg.write_text("suite = schur-image\nparam = realization=direct\n")
    assert call("verify", "--config", str(cfg))[0] == 0
    assert call("verify", "--suite", "bar", "--param", "bogus=1")[0] == 2
    assert call("verify", "--suite", "bar", "--param", "novalue")[0] == 2
