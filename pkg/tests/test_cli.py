import csv
import io
import json
import subprocess
import sys

import pytest

from wedgelab.cli import SpecError, main, parse_space


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_space():
    assert parse_space("simplex:3").args == (3,)
    assert parse_space("skeleton:4:1").args == (4, 1)
    for bad in ["simplex", "simplex:a", "simplex:-1", "skeleton:3", "torus:2", "complete:0", "file:/nonexistent"]:
        with pytest.raises(SpecError):
            parse_space(bad)


@pytest.mark.parametrize(
    "space,k,fvec,euler",
    [("simplex:3", 2, ["12", "24", "14"], "2"), ("complete:5", 2, ["20", "60", "30"], "-10"), ("simplex:2", 3, ["6"], "6")],
)
def test_build(capsys, space, k, fvec, euler):
    code, out, _ = run(["build", space, "--k", str(k)], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["f_vector"] == fvec and doc["euler"] == euler


def test_homology_sphere(capsys):
    code, out, _ = run(["homology", "simplex:4", "--k", "2"], capsys)
    ranks = [d["rank"] for d in json.loads(out)["degrees"]]
    assert code == 0 and ranks == ["1", "0", "0", "1"]


def test_homology_unordered_torsion(capsys):
    code, out, _ = run(["homology", "simplex:3", "--k", "2", "--unordered"], capsys)
    degs = json.loads(out)["degrees"]
    assert code == 0 and degs[1]["torsion"] == ["2"] and degs[1]["rank"] == "0"


def test_homology_genus_six(capsys):
    code, out, _ = run(["homology", "complete:5", "--k", "2"], capsys)
    assert [d["rank"] for d in json.loads(out)["degrees"]] == ["1", "12", "1"]


def test_homology_selected_degrees(capsys):
    code, out, _ = run(["homology", "complete:5", "--k", "2", "--degrees", "1"], capsys)
    assert [d["d"] for d in json.loads(out)["degrees"]] == ["1"]


def test_file_space(tmp_path, capsys):
    f = tmp_path / "square.txt"
    f.write_text("# a 4-cycle\n1,2\n2,3\n3,4\n4,1\n")
    code, out, _ = run(["build", f"file:{f}", "--k", "2"], capsys)
    assert code == 0
    assert json.loads(out)["f_vector"] == ["12", "16", "4"]


def test_malformed_file_exits_one(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("1,2\nx,3\n")
    code, _, err = run(["build", f"file:{f}", "--k", "2"], capsys)
    assert code == 1 and "bad.txt:2" in err


def test_usage_errors_exit_two(capsys):
    for argv in (["build", "nope:1", "--k", "2"], ["build", "simplex:3"], ["frobnicate"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_verify_ok_and_csv(capsys, tmp_path):
    code, out, _ = run(["verify", "--max-n", "10", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 45 and all(r["status"] == "pass" for r in rows)
    dest = tmp_path / "t.json"
    code, out, _ = run(["verify", "--max-n", "4", "--with-homology", "--jobs", "1", "--out", str(dest)], capsys)
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["passed"] is True


def test_verify_injected_fault(capsys):
    code, _, err = run(["verify", "--max-n", "4", "--with-homology", "--jobs", "1", "--inject-fault", "3,4"], capsys)
    assert code == 1 and "k=3 n=4" in err


def test_jobs_env_override(capsys, monkeypatch):
    monkeypatch.setenv("WEDGELAB_JOBS", "1")
    a = run(["verify", "--max-n", "5", "--with-homology", "--jobs", "3"], capsys)
    monkeypatch.delenv("WEDGELAB_JOBS")
    b = run(["verify", "--max-n", "5", "--with-homology", "--jobs", "2"], capsys)
    assert a[0] == b[0] == 0 and a[1] == b[1]


def test_egf(capsys):
    code, out, _ = run(["egf", "--max-degree", "12"], capsys)
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 13 * 14 // 2
    assert all(r["euler_egf"] == r["euler_cells"] for r in rows)
    code, _, err = run(["egf", "--max-degree", "25"], capsys)
    assert code == 2 and "max-degree" in err


def test_table(capsys):
    code, out, _ = run(["table", "--max-n", "4"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert {"k": "3", "n": "3", "sphere_dim": "1", "betti": "13", "euler": "-12"} in rows


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "wedgelab", "build", "simplex:2", "--k", "2"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["f_vector"] == ["6", "6"]
