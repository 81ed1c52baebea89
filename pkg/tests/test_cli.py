from __future__ import annotations

import json
import subprocess
import sys

import pytest

from dihedrants import cli
from dihedrants.errors import DihedrantError


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("spec,n", [
    ("cl:3", 12), ("mcl:5", 40), ("gp:5:2", 10), ("cay:dihedral:6:b,b.a,b.a^3", 12),
    ("bicay:dihedral:10:b,b.a|b,b.a^4|1", 40), ("family:1:n=15,l=2", 60), ("family:4:l=1", 192),
])
def test_build_spec(spec, n):
    assert cli.build_spec(spec).graph.n == n


@pytest.mark.parametrize("spec", ["zz:3", "cl:x", "gp:5", "family:1:n=15,l", "cay:dihedral:6:q"])
def test_bad_specs(spec):
    with pytest.raises(DihedrantError):
        cli.build_spec(spec)


def test_build_and_analyze_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    code, _, _ = run(["build", "gp:5:2", "-o", str(f)], capsys)
    assert code == 0 and f.exists()
    code, out, _ = run(["analyze", str(f)], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["vertex_transitive"] and rep["arc_transitive"] and rep["cayley"] == "no"
    assert rep["aut_order"] == 120


def test_analyze_dihedrant(capsys):
    code, out, _ = run(["analyze", "cay:dihedral:6:b,b.a,b.a^3"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["family_tag"] == "cross-ladder"


def test_analyze_family(capsys):
    code, out, _ = run(["analyze", "family:2:n=10,l=2"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["family_tag"] == "VNC-2" and rep["cayley"] == "no"


def test_analyze_unknown_exit_code(capsys):
    code, out, _ = run(["analyze", "mcl:5", "--budget", "1"], capsys)
    assert code == cli.EXIT_UNKNOWN and json.loads(out)["cayley"] == "unknown"


def test_iso(capsys):
    code, out, _ = run(["iso", "family:3:m=2", "mcl:5"], capsys)
    assert code == 0 and json.loads(out)["isomorphic"]
    code, out, _ = run(["iso", "gp:5:2", "gp:5:1"], capsys)
    assert code == 1 and not json.loads(out)["isomorphic"]


def test_usage_errors(capsys):
    assert run(["verify", "nope"], capsys)[0] == cli.EXIT_USAGE
    assert run(["analyze", "zz:1"], capsys)[0] == cli.EXIT_USAGE
    assert run(["census", "dihedrant", "--n-min", "9", "--n-max", "3"], capsys)[0] == cli.EXIT_USAGE
    assert run([], capsys)[0] == cli.EXIT_USAGE
    assert run(["frobnicate"], capsys)[0] == cli.EXIT_USAGE


def test_invalid_family_parameters_fail(capsys):
    code, _, err = run(["analyze", "family:1:n=15,l=3"], capsys)
    assert code == cli.EXIT_FAIL and "InvalidParameter" in err


def test_dihedrant_census(capsys, tmp_path):
    code, out, _ = run(["census", "dihedrant", "--n-min", "3", "--n-max", "8"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].split("\t") == list(cli.CENSUS_HEADER)
    rows = [l.split("\t") for l in lines[1:]]
    six = [r for r in rows if r[0] == "6"]
    assert [r[-1] for r in six].count("cross-ladder") == 1
    # determinism
    code2, out2, _ = run(["census", "dihedrant", "--n-min", "3", "--n-max", "8"], capsys)
    assert out2 == out


def test_bidihedrant_census_n10():
    rep, rows = cli.census("bidihedrant", 10, 10)
    tags = [r[-1] for r in rows]
    assert "VNC-2" in tags and "VNC-3" in tags
    for r in rows:
        if r[-1].startswith("VNC"):
            assert r[2] == "yes" and r[4] == "no"
    assert rep.summary["unknown"] == 0


def test_bidihedrant_census_rows_revalidate():
    from dihedrants import analysis as an
    rep, rows = cli.census("bidihedrant", 4, 4)
    assert len(rows) == len(rep.cases)
    for case, row in zip(rep.cases, rows):
        G = cli.build_spec(case.case).graph
        assert ("yes" if an.is_vertex_transitive(G) else "no") == row[2]


def test_odd_census_unmatched_arc_transitive_instance():
    # over D_10 the dodecahedron arises as BiCay(H, {a,a^-1}, {b,ba}, {1}); it is
    # vertex-transitive and non-Cayley but equivalent to none of the four families
    rep, rows = cli.census("bidihedrant", 5, 5)
    vnc = {r[1]: r[-1] for r in rows if r[-1].startswith("VNC")}
    assert vnc["({a,a^4}, {b,b.a}, {1})"] == "VNC-?"
    assert "VNC-1" in vnc.values()
    assert rep.exit_code == cli.EXIT_FAIL


@pytest.mark.parametrize("suite", ["lemma4.1", "lemma5.1", "lemma6.2", "thm1.3"])
def test_verify_suites(suite, capsys):
    code, out, _ = run(["verify", suite], capsys)
    rep = json.loads(out)
    assert code == 0, rep
    assert rep["summary"]["fail"] == 0 and rep["summary"]["unknown"] == 0


def test_suite_report_exit_codes():
    r = cli.SuiteReport("x", [cli.CaseOutcome("a", "pass", 0.0)])
    assert r.exit_code == 0
    r.cases.append(cli.CaseOutcome("b", "unknown", 0.0, budget=5))
    assert r.exit_code == 3
    r.cases.append(cli.CaseOutcome("c", "fail", 0.0, repro="mcl:5"))
    assert r.exit_code == 1


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "dihedrants", "iso", "cl:2", "cl:2"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["isomorphic"]
