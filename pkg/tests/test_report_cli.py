import csv
import io
import json
import subprocess
import sys

import pytest

from doppel.catalog import build
from doppel.cli import main
from doppel.core import parse_table
from doppel.report import COLUMNS, to_csv, to_json, to_markdown, to_text


def run(*argv, stdin=None):
    """Run the CLI in a subprocess; returns (code, stdout, stderr)."""
    proc = subprocess.run([sys.executable, "-m", "doppel", *argv], input=stdin,
                          capture_output=True, text=True, encoding="utf-8")
    return proc.returncode, proc.stdout, proc.stderr


def call(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_json_schema(report3):
    doc = json.loads(to_json(report3))
    assert set(doc) == {"n", "counts", "records"}
    assert doc["counts"] == {"total": 77, "commutative": 41, "strong": 65, "trivial": 24,
                             "dual_pairs": 18}
    assert all(tuple(r) == COLUMNS for r in doc["records"])
    for r in doc["records"]:
        assert parse_table(r["canon_left"]).n == 3


def test_csv_columns(report2):
    rows = list(csv.DictReader(io.StringIO(to_csv(report2))))
    assert len(rows) == 8 and tuple(rows[0]) == COLUMNS
    assert {r["strong"] for r in rows} == {"true"}


def test_markdown_sections_in_order(report3):
    md = to_markdown(report3)
    heads = [line for line in md.splitlines() if line.startswith("## ")]
    assert heads == ["## Trivial doppelsemigroups",
                     "## Non-trivial commutative doppelsemigroups",
                     "## Non-trivial non-commutative strong doppelsemigroups",
                     "## Non-strong doppelsemigroups"]
    assert md.count("\n| ") - 4 == 77


def test_ascii_rendering(report3):
    text = to_text(report3, ascii=True)
    assert "⋈" not in text and "><" in text
    assert "⋈" not in to_json(report3, ascii=True)


def test_classify_json_cli():
    code, out = call("classify", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["counts"]["total"] == 77


def test_interassociates_of_m22():
    code, out = call("interassociates", "--table", build("M{2,2}").encode())
    assert code == 0 and len(out.splitlines()) == 3


def test_interassociates_strong_and_canonical():
    t = build("LO{2}+0").encode()
    assert len(call("interassociates", "--table", t)[1].splitlines()) == 4
    assert len(call("interassociates", "--table", t, "--strong")[1].splitlines()) == 2
    # the two one-sided LO~0 members are isomorphic
    assert len(call("interassociates", "--table", t, "--canonical")[1].splitlines()) == 3


def test_aut_cli():
    assert call("aut", "--table", build("LO{3}").encode()) == (0, "S_3 (order 6)\n")
    code, out = call("aut", "--table", build("O{3}").encode(), "--right",
                     build("O{3,2}").encode(), "--format", "json")
    assert json.loads(out)["label"] == "C_1"


def test_iso_cli():
    a = build("LO{2}+1").encode()
    b = "S:3:0,0,0,1,1,1,2,1,2"
    assert call("iso", "--table", a, "--table", b) == (0, "false\n")
    assert call("iso", "--table", a, "--table", a) == (0, "true\n")


def test_recognize_cli():
    assert call("recognize", "--table", build("M{2,2}").encode()) == (0, "M{2,2}\n")
    code, out = call("recognize", "--table", build("O{2}").encode(), "--right",
                     build("L{2}").encode(), "--ascii")
    assert out == "O{2}><L{2}\n"


def test_stdin_batch():
    lines = "\n".join(build(x).encode() for x in ("C{3}", "LO{3}")) + "\n"
    code, out, _ = run("recognize", "--stdin", stdin=lines)
    assert code == 0 and out == "C{3}\nLO{3}\n"


@pytest.mark.parametrize("argv", [
    ("enum-semigroups", "--n", "2"),
    ("enum-semigroups", "--n", "3", "--canonical"),
    ("interassociates", "--table", "S:3:0,0,0,0,0,0,0,0,0"),
    ("interassociates", "--table", "S:3:0,0,0,0,0,0,0,0,0", "--canonical"),
])
def test_emitted_encodings_roundtrip(argv):
    code, out = call(*argv)
    assert code == 0
    for line in out.splitlines():
        assert parse_table(line).encode() == line


def test_classify_records_roundtrip(report3):
    for r in json.loads(to_json(report3))["records"]:
        assert parse_table(r["canon_left"]).encode() == r["canon_left"]


def test_parse_error_exit_code_and_position():
    code, out, err = run("aut", "--table", "S:2:0,0,z,0")
    assert code == 2 and out == ""
    assert "position 8" in err


@pytest.mark.parametrize("argv", [
    ("classify",),
    ("classify", "--n", "4"),
    ("classify", "--n", "9", "--budget-nodes", "100"),
    ("iso", "--table", "S:1:0"),
    ("aut",),
    ("interassociates", "--table", "S:2:1,0,0,0"),
    ("aut", "--table", "S:2:0,0,0,0", "--right", "D:2:0,0,0,0:0,0,0,0"),
    ("nonsense",),
])
def test_usage_errors_exit_2(argv):
    code, _, err = run(*argv)
    assert code == 2 and err


def test_budget_exceeded_exit_2():
    code, _, err = run("enum-semigroups", "--n", "4", "--budget-nodes", "20")
    assert code == 2 and "node limit" in err


def test_order4_opt_in():
    code, out = call("enum-semigroups", "--n", "4", "--canonical", "--budget-nodes", "10000000")
    assert code == 0 and len(out.splitlines()) == 188


def test_verify_exit_code_tracks_verifiers():
    code, out, _ = run("verify", "--max-n", "2")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run("verify", "--max-n", "3")
    assert code == 1 and "FAIL theorem counts n=3" in out


def test_deterministic_across_workers():
    a = run("classify", "--n", "3", "--format", "json", "--workers", "1")
    b = run("classify", "--n", "3", "--format", "json", "--workers", "3")
    assert a[0] == b[0] == 0 and a[1].encode() == b[1].encode()
