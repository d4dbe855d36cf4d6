import csv
import io
import json
import subprocess
import sys

import pytest

from sl2ext import checks
from sl2ext.cli import main
from sl2ext.engine import ExtEngine


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ext_hom(capsys):
    code, out, _ = run(capsys, "ext", "-p", "2", "-q", "0", "--weyl", "3", "--simple", "3")
    assert code == 0
    assert "= 1" in out


def test_ext_trace(capsys):
    code, out, _ = run(capsys, "ext", "-p", "2", "-q", "6", "--weyl", "0", "--simple", "24", "--trace")
    assert code == 0
    assert "a-string (4,0,2) nontrivial" in out
    assert "a-string (4,2) trivial" in out
    assert "(3,3)" not in out


def test_ext_p5(capsys):
    code, out, _ = run(capsys, "--format", "json", "ext", "-p", "5", "-q", "2", "--weyl", "0", "--simple", "10")
    assert code == 0
    data = json.loads(out)
    assert data == {"p": 5, "results": [{"q": 2, "weyl": "0", "simple": "10", "dim": "1"}]}


def test_trace_needs_p2_weyl0(capsys):
    code, _, err = run(capsys, "ext", "-p", "5", "-q", "2", "--weyl", "0", "--simple", "10", "--trace")
    assert code == 2
    code, _, _ = run(capsys, "ext", "-p", "2", "-q", "2", "--weyl", "2", "--simple", "8", "--trace")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["ext", "-p", "4", "-q", "1", "--weyl", "0", "--simple", "2"],
        ["ext", "-p", "2", "-q", "-1", "--weyl", "0", "--simple", "2"],
        ["table", "r-twist", "--max-m", "5"],
        ["strings", "b", "-m", "3"],
        ["h2", "-p", "3", "--simple", "6"],
        ["h2", "-p", "5"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_coh_csv(capsys):
    code, out, _ = run(capsys, "coh", "-p", "2", "-m", "12", "--simple", "4096", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["m,weight,dim", "12,4096,159"]


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "self-twist", "--max-m", "31", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "m,weight,dim"
    assert len(lines) == 32
    assert lines[-1] == "31,2147483648,10506175"


def test_table_r_twist(capsys):
    code, out, _ = run(capsys, "table", "r-twist", "-r", "3", "--max-m", "32")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "H^3(G,L(6))=1"
    assert lines[-1] == f"H^32(G,L({3 * 2**30}))=13344508"


def test_table_single_row(capsys):
    code, out, _ = run(capsys, "table", "self-twist", "--max-m", "1", "--format", "csv")
    assert out.splitlines() == ["m,weight,dim", "1,2,1"]


def test_table_json_strings(capsys):
    code, out, _ = run(capsys, "--format", "json", "table", "self-twist", "--max-m", "5")
    data = json.loads(out)
    assert data["p"] == 2
    assert all(isinstance(r["dim"], str) and isinstance(r["simple"], str) for r in data["results"])


def test_strings(capsys):
    assert run(capsys, "strings", "partitions", "-m", "5")[1].strip() == "3"
    assert run(capsys, "strings", "c", "-k", "3")[1].strip() == "2"
    code, out, _ = run(capsys, "strings", "b", "-m", "4", "-n", "4")
    assert code == 0
    assert out.splitlines()[-1] == "2 b-strings"
    code, out, _ = run(capsys, "strings", "c", "-k", "3", "--list", "--format", "json")
    assert json.loads(out)["items"] == [[1, 1, 1], [1, 2, 0]]
    code, out, _ = run(capsys, "strings", "a", "-m", "6", "--simple", "24", "--format", "json")
    data = json.loads(out)
    assert data["nontrivial"] == "3"


def test_strings_cap(capsys):
    code, _, err = run(capsys, "--cap", "5", "strings", "a", "-m", "10", "--simple", "1024")
    assert code == 3
    code, _, _ = run(capsys, "strings", "b", "-m", "10", "-n", "10", "--cap", "3")
    assert code == 3


def test_h2(capsys):
    code, out, _ = run(capsys, "h2", "-p", "5", "--simple", "50", "--format", "json")
    res = json.loads(out)["results"][0]
    assert res["dim"] == "1"
    assert res["witness"] == {"nonzero": True, "reason": "2p", "twist": 1, "e": None}
    code, out, _ = run(capsys, "h2", "-p", "7", "--tower", "4")
    assert out.startswith("Ext^2(V_4,V_4) = 4")


def test_wall_reduce(capsys):
    code, out, _ = run(capsys, "wall-reduce", "-p", "2", "-q", "4", "--weyl", "4", "0", "--simple", "0", "8")
    assert code == 0 and out.rstrip().endswith("= 2    [p=2]")
    code, _, _ = run(capsys, "wall-reduce", "-p", "2", "-q", "1", "--weyl", "2", "0", "--simple", "1", "1")
    assert code == 2


def test_verify_tables(capsys):
    code, out, _ = run(capsys, "verify", "tables")
    assert code == 0
    assert "tables: 58/58 checks passed" in out


def test_verify_theorem1(capsys):
    code, out, _ = run(capsys, "verify", "theorem1")
    assert code == 0
    for p in (5, 7):
        for n in range(9):
            assert f"ok   p={p} n={n}" in out


def test_verify_fails_on_seeded_bug(capsys, monkeypatch):
    class OffByOne(ExtEngine):
        def cohomology_dim(self, m, simple, p):
            return super().cohomology_dim(m, simple, p) + (m == 10)

    monkeypatch.setattr(checks, "ExtEngine", OffByOne)
    code, out, _ = run(capsys, "verify", "all")
    assert code == 1
    assert "self-twist m=10 weight=1024: expected 50, actual 51" in out


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_round_trip_reverify(capsys, tmp_path, fmt):
    _, out, _ = run(capsys, "table", "self-twist", "--max-m", "31", "--format", fmt)
    path = tmp_path / f"t.{fmt}"
    path.write_text(out)
    code, report, _ = run(capsys, "verify", "tables", "--from", str(path))
    assert code == 0
    assert "28/28 checks passed" in report

    # corrupt one dimension: the verdict flips
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(out)))
        rows[12][2] = str(int(rows[12][2]) + 1)
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        path.write_text(buf.getvalue())
    else:
        data = json.loads(out)
        data["results"][11]["dim"] = str(int(data["results"][11]["dim"]) + 1)
        path.write_text(json.dumps(data))
    code, report, _ = run(capsys, "verify", "tables", "--from", str(path))
    assert code == 1


def test_round_trip_r3(capsys, tmp_path):
    _, out, _ = run(capsys, "table", "r-twist", "-r", "3", "--max-m", "32", "--format", "csv")
    path = tmp_path / "r3.csv"
    path.write_text(out)
    code, report, _ = run(capsys, "verify", "tables", "--from", str(path))
    assert code == 0
    assert "30/30 checks passed" in report


def test_cold_start_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "sl2ext", "verify", "all"], capture_output=True, text=True, timeout=300
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "checks passed" in proc.stdout
