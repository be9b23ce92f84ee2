"""Acceptance criteria 1-9.

Each test carries a ``criterion`` marker; the run ends with one PASS/FAIL line
per criterion (see conftest.py).  Run alone with

    pytest tests/test_acceptance.py -v
"""

import os
import subprocess
import sys

import pytest

from planepart import closedform as cf
from planepart.exactq import ZERO, poly
from planepart.patterns import gt_to_spp, gt_validate, spp_to_gt, spp_validate
from planepart.verify import run_suite, suite_tasks

JOBS = int(os.environ.get("PLANEPART_JOBS", "1"))


def assert_suite(suite: str, max_n: int, max_c: int):
    report = run_suite(suite, max_n, max_c, jobs=JOBS)
    assert report.instances, f"{suite}: empty grid"
    bad = report.failures
    assert not bad, f"{suite}: {len(bad)} failures, first {bad[0].identity} {bad[0].params} {bad[0].note or ''}"
    return report


def identities(report) -> dict[str, int]:
    return report.summary()["by_identity"]


@pytest.mark.criterion(1, "closed form equals signed enumeration, n<=4, c<=5, k in [-n-1, c+n+1]")
def test_criterion_1_theorem_grid():
    rep = assert_suite("theorem1", 4, 5)
    expected = sum((n + 1) * (c + 2 * n + 3) for n in range(1, 5) for c in range(6))
    assert len(rep.instances) == expected


@pytest.mark.criterion(2, "G closed = G brute (n<=4, c<=6), sum over p = Bender-Knuth product, spot value")
def test_criterion_2_refined_bender_knuth():
    rep = assert_suite("bk", 4, 6)
    assert set(identities(rep)) == {"G closed", "Bender-Knuth"}
    total = sum((cf.G_closed(2, 2, p) for p in range(3)), ZERO)
    assert total == poly([1, 1, 2, 2, 2, 1, 1])


@pytest.mark.criterion(3, "oracle triangle: enumeration = row recursion, n<=3, all r, c<=3, k in [-2, c+2]")
def test_criterion_3_oracle_triangle():
    rep = assert_suite("oracle", 3, 3)
    by_id = identities(rep)
    assert by_id["row recursion"]["pass"] > 0 and by_id["linear combination"]["pass"] > 0
    signed = [i for i in rep.instances if i.identity == "row recursion" and any(k < 0 for k in i.params["k"])]
    assert signed, "signed regions must be covered"


@pytest.mark.criterion(4, "zeros and all four initial conditions, n<=4, c<=4")
def test_criterion_4_zeros_and_initial():
    assert_suite("zeros", 4, 4)
    rep = assert_suite("initial", 4, 4)
    assert len(identities(rep)) == 4


@pytest.mark.criterion(5, "L, M recursive = closed, denominators with nonzero check, n<=4, c<=5")
def test_criterion_5_recursion_and_denominator():
    assert_suite("recursion-vs-final", 4, 5)
    rep = assert_suite("denominator", 4, 5)
    whiches = {i.params["which"] for i in rep.instances if i.identity == "denominator"}
    assert whiches == {"main", "p0", "pn"}
    assert identities(rep)["denominator nonzero"]["pass"] > 0


@pytest.mark.criterion(6, "q-sum identities, n<=4 (n<=5 for the W sum and hypo), c<=6, both parities")
def test_criterion_6_qsums():
    rep = assert_suite("qsums", 4, 6)
    ns = {name: {i.params["n"] for i in rep.instances if i.identity == name} for name in identities(rep)}
    assert ns["sum W"] == ns["hypo"] == ns["hypo companion"] == {1, 2, 3, 4, 5}
    assert ns["U special"] == ns["sum U"] == {1, 2, 3, 4}
    whiches = {i.params["which"] for i in rep.instances if i.identity == "U special"}
    assert whiches == {"0", "-n", "1", "-n-1"}
    cs = {i.params["c"] % 2 for i in rep.instances}
    assert cs == {0, 1}


@pytest.mark.criterion(7, "signed part = L Y^(n-1), degree-2n-2 fit predicts held-out values, n<=4")
def test_criterion_7_structure():
    rep = assert_suite("degree", 4, 5)
    assert set(identities(rep)) == {"degree", "quasi-form"}


@pytest.mark.criterion(8, "bijection round trip and statistics n<=4, c<=4, plus the worked example")
def test_criterion_8_bijection():
    assert_suite("bijection", 4, 4)
    rows = [[1], [0, 2], [0, 1, 4], [0, 1, 2, 4], [0, 0, 1, 2, 4], [0, 0, 1, 2, 4, 5], [0, 0, 0, 2, 2, 4, 5]]
    g = gt_validate(6, 7, 5, rows)
    spp = spp_validate([[7, 6, 5, 5, 2], [5, 4, 2, 2], [4, 2], [2, 1]])
    assert gt_to_spp(g) == spp
    assert spp_to_gt(spp, 7, 5) == g
    assert spp.shape.parts == (5, 4, 2, 2) and spp.norm == g.norm == 47


@pytest.mark.criterion(9, "verify all is byte-identical for different --jobs")
def test_criterion_9_determinism(tmp_path):
    outs = []
    for jobs in ("1", "3"):
        dest = tmp_path / f"report-{jobs}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "planepart", "verify", "--suite", "all", "--jobs", jobs, "--out", str(dest)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1]
    assert len(suite_tasks("all", 3, 4)) > 1000
