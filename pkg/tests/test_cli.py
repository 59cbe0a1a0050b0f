import io
import shlex
from pathlib import Path

import pytest

from balpoly.cli import main

ROOT = Path(__file__).parent
GOLDEN = ROOT / "golden"
REPORTS = ROOT.parent / "reports"


def run(cmd):
    out, err = io.StringIO(), io.StringIO()
    code = main(shlex.split(cmd), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


CASES = [
    ("gen --family B --count 5 --format csv", "gen-B-csv.txt", 0),
    ("gen --family B --count 5 --at 1", "gen-B-at-1.txt", 0),
    ("gen --family C --count 1", "gen-C-1.txt", 0),
    ("gen --family C --count 4 --at 1/2 --format json", "gen-C-half-json.txt", 0),
    ("gen --family F --count 8 --format csv", "gen-F-csv.txt", 0),
    ("series --which gf-B --order 3", "series-gf-B.txt", 0),
    ("series --which egf-B2 --order 3 --format json", "series-egf-B2-json.txt", 0),
    ("series --which gf-C2 --order 2 --format csv", "series-gf-C2-csv.txt", 0),
    ("verify --suite lemmas --depth quick --no-timing", "verify-lemmas-quick.txt", 0),
    ("verify --suite ogf-theorems --depth quick --no-timing --format json", "verify-ogf-quick-json.txt", 1),
    ("verify --suite chebyshev --depth quick --no-timing --format csv", "verify-cheb-quick-csv.txt", 1),
    ("check corpus/thm-ogf.idl --no-timing", "check-thm-ogf.txt", 0),
    ("check corpus/thm-ogf-sum.idl --no-timing --format json", "check-thm-ogf-sum-json.txt", 1),
    ("bfile --family B --count 6", "bfile-B.txt", 0),
    ("bfile --family F --count 3", "bfile-F.txt", 0),
]


@pytest.mark.parametrize("cmd,golden,code", CASES, ids=[c[1] for c in CASES])
def test_golden(cmd, golden, code):
    got_code, out, _ = run(cmd)
    assert got_code == code
    assert out == (GOLDEN / golden).read_text()


def test_gen_examples():
    assert run("gen --family B --count 5 --format csv")[1].splitlines()[1:] == [
        "0,0,0,0,0", "1,1,0,0,0", "2,0,6,0,0", "3,-1,0,36,0", "4,0,-12,0,216"]
    assert run("gen --family B --count 5 --at 1")[1].split() == ["0", "1", "6", "35", "204"]
    assert run("gen --family C --count 1")[1] == "1\n"


def test_bfile_examples():
    assert run("bfile --family B --count 4")[1] == "0 0\n1 1\n2 6\n3 35\n"
    assert run("bfile --family F --count 3")[1] == "0 0\n1 1\n2 1\n"
    assert run("bfile --family B --count 6")[1].split()[1::2] == ["0", "1", "6", "35", "204", "1189"]


def test_bfile_non_integer_exits_2():
    code, out, err = run("bfile --family C --at 1/2")
    assert code == 2 and out == ""
    assert "3/2" in err


@pytest.mark.parametrize("cmd", [
    "gen --family Z",
    "gen --family B --count 0",
    "gen --family B --at one",
    "gen --family F --at 1/2",
    "series --which gf-Q",
    "series --which gf-B --order -1",
    "verify --suite nothing",
    "bfile --family B --count x",
    "frobnicate",
    "",
])
def test_usage_errors_exit_2(cmd):
    assert run(cmd)[0] == 2


def test_check_missing_file(tmp_path):
    code, _, err = run(f"check {tmp_path / 'missing-file.idl'}")
    assert code == 2 and "no such file" in err


def test_check_parse_error_is_located(tmp_path):
    path = tmp_path / "bad.idl"
    path.write_text("B(n) == C(n) for n in 1..3\nsum(k=1..n, B(k) == 0 for n in 1..2\n")
    code, _, err = run(f"check {path}")
    assert code == 2
    assert "line 2, col 18" in err


def test_check_failure_exits_1(tmp_path):
    path = tmp_path / "false.idl"
    path.write_text("B(n) == C(n) for n in 1..3\n")
    code, out, _ = run(f"check {path}")
    assert code == 1 and out.startswith("FAILS")


def test_verify_reading_filter():
    code, out, _ = run("verify --suite ogf-theorems --depth quick --no-timing --reading errata")
    assert code == 0
    verdicts = [line for line in out.splitlines() if not line.startswith(" ")]
    assert verdicts and all("/errata" in line for line in verdicts)


def test_timing_only_when_requested():
    assert " ms" in run("verify --suite lemmas --depth quick")[1]
    assert " ms" not in run("verify --suite lemmas --depth quick --no-timing")[1]


def test_committed_eps_report_is_current():
    code, out, _ = run("verify --suite fibonacci-eps --n-max 16 --s-max 8 --no-timing")
    assert code == 1
    assert out == (REPORTS / "fibonacci-eps.txt").read_text()


def test_check_evaluation_error_exits_2(tmp_path):
    path = tmp_path / "index.idl"
    path.write_text("B(n/2) == 0 for n in 1..3\n")
    code, _, err = run(f"check {path}")
    assert code == 2 and "line 1, col 4" in err
