import json
import subprocess
import sys

import pytest

from toposcope.cli import main
from toposcope.errors import BadParam, UnknownSuite
from toposcope.suites import SUITES, run_suite


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_counts(capsys):
    assert _run(capsys, "enumerate", "--n", "3", "--format", "count")[1] == "29\n"
    assert _run(capsys, "enumerate", "--n", "3", "--filter", "t0", "--format", "count")[1] == "19\n"
    assert _run(capsys, "enumerate", "--n", "4")[1] == "355\n"


def test_enumerate_json(capsys):
    code, out, _ = _run(capsys, "enumerate", "--n", "2", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 4
    assert {tuple(r["opens"]) for r in rows} == {(0, 1, 2, 3), (0, 1, 3), (0, 2, 3), (0, 3)}


def test_enumerate_dot_two_points(capsys):
    code, out, _ = _run(capsys, "enumerate", "--n", "2", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    labels = {}
    for line in out.splitlines():
        if "[label=" in line:
            node, rest = line.strip().split(" ", 1)
            labels[node] = rest
    edges = [tuple(line.strip(" ;").split(" -> ")) for line in out.splitlines() if "->" in line]
    assert len(labels) == 4 and len(edges) == 4
    bottom = next(k for k, v in labels.items() if v.count("{") == 3)  # {{}, {0,1}}
    top = next(k for k, v in labels.items() if v.count("{") == 5)
    assert sum(1 for a, _ in edges if a == bottom) == 2
    assert sum(1 for _, b in edges if b == top) == 2


def test_enumerate_caps(capsys):
    code, _, err = _run(capsys, "enumerate", "--n", "4", "--format", "dot")
    assert code == 2 and "too large" in err
    code, _, err = _run(capsys, "enumerate", "--n", "6")
    assert code == 2


def test_hasse_of_one_topology(capsys):
    code, out, _ = _run(capsys, "hasse", "3:0,4,6,7")
    assert code == 0
    assert "p0 -> p1;" in out and "p1 -> p2;" in out and "p0 -> p2" not in out
    code, out, _ = _run(capsys, "hasse", "2:0,3")
    assert "dir=both" in out
    code, _, err = _run(capsys, "hasse", "3:0,1")
    assert code == 2 and "NotATopology" in err


def test_verify_pass_and_report(capsys):
    code, out, _ = _run(capsys, "verify", "minimal-sober", "--n", "3")
    report = json.loads(out)
    assert code == 0 and report["verdict"] == "PASS"
    assert report["suite"] == "minimal-sober" and report["params"] == {"n": 3}
    assert report["elapsed_ms"] is None
    claims = [e["claim"] for e in report["evidence"]]
    assert "6 minimal sober topologies = 6 total orders" in claims
    assert all(e["counterexample"] is None for e in report["evidence"])


def test_verify_skip_on_cap(capsys):
    code, out, _ = _run(capsys, "verify", "t1-join", "--n", "5")
    report = json.loads(out)
    assert report["verdict"] == "SKIP" and code != 0
    assert "exceeds the cap" in report["evidence"][0]["claim"]


def test_verify_crt_chain(capsys):
    code, out, _ = _run(capsys, "verify", "crt-chain", "--max-index", "4")
    assert code == 0 and json.loads(out)["verdict"] == "PASS"


def test_verify_errors(capsys):
    code, _, err = _run(capsys, "verify", "no-such-suite")
    assert code == 2 and "UnknownSuite" in err
    code, _, err = _run(capsys, "verify", "crt-chain", "--n", "3")
    assert code == 2 and "BadParam" in err
    with pytest.raises(UnknownSuite):
        run_suite("nope")
    with pytest.raises(BadParam):
        run_suite("t1-join", {"n": -1})


def test_reports_are_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "tau-star", "--n", "3", "--out", str(a)]) == 0
    assert main(["verify", "tau-star", "--n", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    capsys.readouterr()


def test_timing_flag_fills_elapsed(capsys):
    _, out, _ = _run(capsys, "verify", "sobriety-collapse", "--n", "2", "--timing")
    assert isinstance(json.loads(out)["elapsed_ms"], float)


def test_env_override_raises_soft_cap(monkeypatch):
    monkeypatch.setenv("TOPOSCOPE_MAX_N", "2")
    assert run_suite("sobriety-collapse", {"n": 3}).verdict == "SKIP"
    monkeypatch.setenv("TOPOSCOPE_MAX_N", "9")  # clamped to the hard cap
    assert run_suite("sobriety-collapse", {"n": 3}).verdict == "PASS"


def test_failing_claim_carries_counterexample():
    from toposcope.suites import Ledger

    L = Ledger()
    L.check("always", True)
    L.check("sometimes", False, [1, 2])
    L.check("sometimes", False, [3])
    assert L.verdict == "FAIL"
    bad = [e for e in L.evidence if e.failed][0]
    assert bad.instances == 2 and bad.counterexample == [1, 2]


def test_suites_listing(capsys):
    code, out, _ = _run(capsys, "suites")
    assert code == 0
    assert all(name in out for name in SUITES)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "toposcope", "enumerate", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "4\n"
