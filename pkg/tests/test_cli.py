import csv
import io
import json
import subprocess
import sys

import pytest

from planepart import cli
from planepart.exactq import ZERO, parse_rf, rf_from_json
from planepart.report import Instance, VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_spp_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "spp", "--n", "2", "--c", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["rows", "norm", "odd_rows", "count_n"]
    assert len(rows) == 11
    assert sorted(int(r[1]) for r in rows[1:]) == [0, 1, 2, 2, 3, 3, 4, 4, 5, 6]


def test_enumerate_spp_json_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "spp", "--n", "1", "--c", "2", "--format", "json")
    objs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(objs) == 3
    assert {tuple(map(tuple, o["rows"])) for o in objs} == {(), ((1,),), ((1, 1),)}


def test_enumerate_gt(capsys):
    code, out, _ = run(capsys, "enumerate", "gt", "--r", "1", "--n", "1", "--c", "2", "--format", "json")
    objs = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [o["rows"][-1] for o in objs] == [[0, 0, 2], [0, 1, 2], [0, 2, 2]]


def test_enumerate_gt_text_with_top(capsys):
    code, out, _ = run(capsys, "enumerate", "gt", "--r", "0", "--n", "2", "--c", "3", "--top", "1,2")
    assert code == 0
    assert out.strip() == "0 1 2 3  inversions=0 sign=1 norm=3"


def test_enumerate_usage_errors(capsys):
    assert run(capsys, "enumerate", "gt", "--r", "1", "--n", "2", "--c", "2")[0] == 2
    assert run(capsys, "enumerate", "spp", "--n", "-1", "--c", "2")[0] == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["enumerate", "spp", "--format", "xml"])
    assert info.value.code == 2


def test_genfun_sources_agree(capsys):
    outs = set()
    for source in ("brute", "closed", "recursion"):
        code, out, _ = run(capsys, "genfun", "--source", source, "--n", "2", "--c", "2", "--p", "0", "--k", "1")
        assert code == 0
        outs.add(out)
    assert outs == {"q^2\n"}


def test_genfun_total_without_k(capsys):
    for source in ("brute", "closed", "recursion"):
        code, out, _ = run(capsys, "genfun", "--source", source, "--n", "2", "--c", "2", "--p", "0")
        assert code == 0 and out == "1 + q^2 + q^3 + q^4 + q^6\n"


def test_genfun_formats(capsys):
    _, out, _ = run(capsys, "genfun", "--n", "3", "--c", "1", "--p", "1", "--k", "-2", "--format", "json")
    value = rf_from_json(json.loads(out))
    _, text, _ = run(capsys, "genfun", "--n", "3", "--c", "1", "--p", "1", "--k", "-2", "--format", "canonical")
    assert parse_rf(text.strip()) == value
    _, shifted, _ = run(capsys, "genfun", "--n", "2", "--c", "2", "--p", "0", "--k", "1", "--times-qk")
    assert shifted == "q^3\n"


def test_genfun_zero_and_warning(capsys):
    code, out, err = run(capsys, "genfun", "--source", "brute", "--n", "1", "--c", "0", "--p", "0", "--k", "9")
    assert code == 0
    assert parse_rf(out.strip()) == ZERO
    assert "warning" in err


def test_verify_pass_and_report_shape(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "--suite", "zeros", "--max-n", "2", "--max-c", "2", "--out", str(dest))
    assert code == 0
    rep = json.loads(dest.read_text())
    assert rep["status"] == "pass" and rep["suite"] == "zeros"
    assert rep["summary"]["failed"] == 0
    assert all("elapsed_ms" not in i for i in rep["instances"])
    assert "passed" in err


def test_verify_timings_flag(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bk", "--max-n", "1", "--max-c", "1", "--timings")
    assert code == 0
    assert all("elapsed_ms" in i for i in json.loads(out)["instances"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(*args, **kwargs):
        return VerificationReport("zeros", {}, [Instance("zeros brute", {"n": 1}, False, ZERO, ZERO)])

    monkeypatch.setattr(cli, "run_suite", failing)
    code, out, _ = run(capsys, "verify", "--suite", "zeros")
    assert code == 1
    inst = json.loads(out)["instances"][0]
    assert inst["status"] == "fail" and "lhs" in inst and "rhs" in inst


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--max-n", "0")[0] == 2
    assert run(capsys, "verify", "--jobs", "0")[0] == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["verify", "--suite", "nope"])
    assert info.value.code == 2


def test_verify_jobs_from_environment(capsys, monkeypatch):
    seen = {}

    def spy(suite, max_n, max_c, jobs, fast_filter):
        seen["jobs"] = jobs
        return VerificationReport(suite, {})

    monkeypatch.setattr(cli, "run_suite", spy)
    monkeypatch.setenv("PLANEPART_JOBS", "3")
    run(capsys, "verify", "--suite", "bk")
    assert seen["jobs"] == 3


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "planepart", "genfun", "--n", "1", "--c", "2", "--p", "0"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert out.stdout == "1 + q^2\n"


def test_enumerate_empty_partition(capsys):
    code, out, _ = run(capsys, "enumerate", "spp", "--n", "0", "--c", "5")
    assert code == 0
    assert out.splitlines() == ["(empty)  norm=0 odd_rows=0 count_n=0"]


def test_verify_theorem_grid_default_bounds(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem1", "--max-n", "3", "--max-c", "4", "--no-fast-filter")
    rep = json.loads(out)
    assert code == 0 and rep["params"] == {"max_n": 3, "max_c": 4}
    assert rep["summary"]["total"] == rep["summary"]["passed"] > 0
