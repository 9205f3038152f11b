import json
import random
import subprocess
import sys
from math import factorial

import pytest

from splitstar.cli import main
from splitstar.data.printed_tables import PRINTED


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dcc_json(capsys):
    code, out, _ = run(capsys, "dcc", "--n", "4", "--u", "1234", "--v", "2134", "--len", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["c1"] == ["1234", "3124", "2314"]
    assert doc["case_trace"] == ["S4 base table 1"]


def test_dcc_text(capsys):
    code, out, _ = run(capsys, "dcc", "--n", "4", "--u", "1234", "--v", "2134", "--len", "3", "--format", "text")
    assert code == 0
    assert "c1 (3): 1234 3124 2314" in out


def test_dcc_half_length_n5(capsys):
    code, out, _ = run(capsys, "dcc", "--n", "5", "--u", "12345", "--v", "21345", "--len", "60")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["c1"]) == len(doc["c2"]) == 60


@pytest.mark.parametrize("argv,message", [
    (["dcc", "--n", "4", "--u", "1234", "--v", "1234", "--len", "3"], "u and v must differ"),
    (["dcc", "--n", "4", "--u", "1234", "--v", "2134", "--len", "13"], "--len"),
    (["dcc", "--n", "4", "--u", "1224", "--v", "2134", "--len", "3"], "--u"),
    (["dcc", "--n", "3", "--u", "123", "--v", "213", "--len", "3"], "--n"),
    (["dcc", "--n", "4"], "required"),
    (["sweep", "--n", "3"], "--n"),
    (["export", "--n", "6"], "--n"),
    (["nonsense"], "invalid choice"),
])
def test_bad_arguments_exit_2(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert message in err
    assert out == ""


def test_verify_roundtrip(capsys, tmp_path):
    rng = random.Random(99)
    for n in (4, 5, 6):
        for k in range(100):
            u = rng.sample(range(1, n + 1), n)
            v = rng.sample(range(1, n + 1), n)
            if u == v:
                continue
            ell = rng.randint(3, factorial(n) // 2)
            us, vs = "".join(map(str, u)), "".join(map(str, v))
            code, out, _ = run(capsys, "dcc", "--n", str(n), "--u", us, "--v", vs, "--len", str(ell))
            assert code == 0
            path = tmp_path / f"c{n}_{k}.json"
            path.write_text(out)
            code, out, _ = run(capsys, "verify", str(path))
            assert code == 0, out
            assert json.loads(out) == {"ok": True, "violations": []}


def test_verify_printed_erroneous_row(capsys, tmp_path):
    c1, c2 = (t.split(", ")[:-1] for t in PRINTED[1][3])
    doc = {"n": 4, "u": "1234", "v": "2134", "ell": 3, "c1": c1, "c2": c2, "case_trace": []}
    path = tmp_path / "row.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    report = json.loads(out)
    assert {"code": "RepeatedVertex", "detail": "2413"} in report["violations"]


@pytest.mark.parametrize("text", ['{"n": 4, "u": "1234"', '{"n": 4}', "[]", '{"n": 4, "u": "12", "v": "2134", "ell": 3, "c1": [], "c2": []}'])
def test_verify_parse_failure_exit_2(capsys, tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2
    assert "error" in err


def test_verify_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", str(tmp_path / "absent.json"))
    assert code == 2


def test_sweep(capsys):
    code, out, err = run(capsys, "sweep", "--n", "4", "--jobs", "1")
    assert code == 0
    assert out == "230/230 pass\n"
    assert "wall time" in err


def test_sweep_sample(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "7", "--sample", "5", "--seed", "1", "--jobs", "1")
    assert code == 0
    assert out == "5/5 pass\n"


def test_tables_check(capsys):
    code, out, _ = run(capsys, "tables", "--check")
    assert code == 0
    assert "table 1 ell= 3: repaired, pass" in out
    assert "table 2 ell= 3: repaired, pass" in out
    assert "table 1 ell= 4: pass (as printed)" in out
    assert "erratum RepeatedVertex: 2413" in out
    assert "FAIL" not in out
    assert out.rstrip().endswith("all rows valid")


def test_tables_without_data_is_a_configuration_error(capsys, monkeypatch):
    import splitstar.data.printed_tables as tables

    monkeypatch.setattr(tables, "PRINTED", {})
    code, _, err = run(capsys, "tables", "--check")
    assert code == 2
    assert "configuration" in err


@pytest.mark.parametrize("n,lines", [(3, 9), (4, 60), (5, 420)])
def test_export_edgelist(capsys, n, lines):
    code, out, _ = run(capsys, "export", "--n", str(n), "--format", "edgelist")
    assert code == 0
    rows = out.splitlines()
    assert len(rows) == lines
    a, b, kind = rows[0].split()
    assert kind in {"12"} | {f"s{i}{sign}" for i in range(3, n + 1) for sign in "+-"}


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "--n", "3", "--format", "dot")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graph S3 {" and lines[-1] == "}"
    assert lines[1:7] == [f'  "{p}";' for p in ("123", "132", "213", "231", "312", "321")]
    assert sum("--" in x for x in lines) == 9


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "splitstar", *argv], capture_output=True, check=False)


@pytest.mark.parametrize("argv", [
    ("dcc", "--n", "5", "--u", "31452", "--v", "24153", "--len", "41"),
    ("sweep", "--n", "6", "--sample", "20", "--seed", "4", "--jobs", "1"),
    ("export", "--n", "4", "--format", "dot"),
    ("tables", "--check"),
])
def test_output_is_byte_identical_across_runs(argv):
    first, second = _cli(*argv), _cli(*argv)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout
