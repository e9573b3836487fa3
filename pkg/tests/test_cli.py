import io
import json
import os
import subprocess
import sys

import pytest

from fockcan.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_canon_two_terms():
    code, out, _ = call("canon", "--sig", "1,1|2", "--weight", "0|3|2,3")
    assert code == 0
    data = json.loads(out)
    assert [t["coeff"] for t in data["terms"]] == [{"1": 1}, {"0": 1}]
    assert [t["weight"] for t in data["terms"]] == [[[0], [1], [1, 2]], [[0], [3], [2, 3]]]


def test_canon_text():
    code, out, _ = call("canon", "--sig", "1,1|2", "--weight", "0|3|2,3", "--format", "text")
    assert code == 0
    assert out.strip() == "(q)K(0|1|1,2) + K(0|3|2,3)"


def test_flag_three_rows():
    code, out, _ = call("flag", "--kind", "tilting", "--sig", "1,1|1", "--weight", "0,0|0")
    assert code == 0
    data = json.loads(out)
    assert data["rows"] == [["0|0|0", 1], ["0|-1|-1", 1], ["-1|0|-1", 1]]
    assert data["status"] == "Proven"


def test_order():
    code, out, _ = call("order", "--sig", "1,1|1", "--a", "0,-1|-1", "--b", "0,0|0")
    assert (code, json.loads(out)) == (0, {"leq": True})
    code, out, _ = call("order", "--sig", "1,1|1", "--a", "0,0|0", "--b", "0,-1|-1")
    assert json.loads(out) == {"leq": False}


def test_dual_is_cut_at_the_floor():
    code, out, _ = call("dual", "--sig", "1,1|1", "--weight", "0,0|0", "--radius", "2")
    data = json.loads(out)
    assert data["floor"] == -2
    assert {json.dumps(t["coeff"]) for t in data["terms"]} == {'{"0": 1}', '{"-1": -1}', '{"-2": 1}'}


def test_bar_table():
    code, out, _ = call("bar", "--sig", "1,1|1", "--weight", "0,0|0", "--radius", "2")
    data = json.loads(out)
    assert code == 0 and data["kind"] == "bar"
    assert [0, 0, {"0": 1}] in data["entries"]
    code, out, _ = call("bar", "--sig", "1,1|1", "--weight", "0,0|0", "--radius", "2", "--table", "u")
    assert json.loads(out)["kind"] == "U"


def test_block_report_json_and_dot():
    code, out, _ = call("block-report", "--bound", "3")
    data = json.loads(out)
    assert data["bound"] == 3 and data["projective_tilting"]["status"] == "Proven"
    code, out, _ = call("block-report", "--bound", "2", "--format", "dot")
    assert '"0|0|0" -> "0|-1|-1";' in out


def test_duality_check():
    code, out, _ = call("duality-check", "--sig", "1,1+6", "--weight", "1,0|1,-1,-2,-3,-4,-5")
    data = json.loads(out)
    assert code == 0 and data["ok"] is True and data["image"] == "1|0|0,2,3"


def test_output_is_byte_stable():
    a = call("canon", "--sig", "2,1|1", "--weight", "5,3|2|2")
    b = call("canon", "--sig", "2,1|1", "--weight", "5,3|2|2")
    assert a == b


def test_domain_error_is_json_with_exit_one():
    code, out, _ = call("canon", "--sig", "1,1|2", "--weight", "0|3|3,2")
    assert code == 1
    assert json.loads(out)["error"] == "DomainError"


def test_usage_errors_exit_two():
    code, _, err = call("canon", "--sig", "1,1|2", "--weight", "0|3")
    assert code == 2 and "usage:" in err
    code, _, err = call("canon", "--sig", "1,1|2")
    assert code == 2
    code, _, _ = call("frobnicate")
    assert code == 2
    code, _, _ = call("selftest", "--only", "99")
    assert code == 2


def test_selftest_subset():
    code, out, _ = call("selftest", "--only", "0,3,7")
    assert code == 0
    lines = [x for x in out.splitlines() if x.startswith("[")]
    assert [x[:6] for x in lines] == ["[PASS]"] * 3


def test_selftest_negative_control():
    code, out, _ = call("selftest", "--only", "0", "--perturb-straightening")
    assert code == 1
    assert out.startswith("[FAIL] 0.")
    # and the constant is restored afterwards
    code, out, _ = call("selftest", "--only", "0")
    assert code == 0


def test_selftest_skips_when_the_window_cap_is_too_small():
    env = dict(os.environ, FOCKCAN_MAX_WINDOW="3")
    proc = subprocess.run([sys.executable, "-m", "fockcan.cli", "selftest", "--only", "9"],
                          capture_output=True, text=True, env=env, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.startswith("[SKIP] 9.")


def test_report_writes_json_and_figures(tmp_path):
    pytest.importorskip("matplotlib")
    out = tmp_path / "report.json"
    code, stdout, _ = call("report", "--out", str(out), "--figures", str(tmp_path / "fig"), "--bound", "3")
    assert code == 0
    written = json.loads(stdout)["written"]
    assert json.loads(out.read_text())["bound"] == 3
    assert sorted(os.path.basename(p) for p in written[1:]) == [
        "poset.png", "projective.png", "tilting.png", "verma.png"]
    for p in written[1:]:
        assert os.path.getsize(p) > 1000
