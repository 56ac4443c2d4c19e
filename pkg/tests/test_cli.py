from __future__ import annotations

import subprocess
import sys

import pytest

from ddcg.cli import main
from ddcg.graphs import complete_graph, graph6_encode, petersen_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_paley(capsys):
    code, out, _ = run(capsys, "construct", "paley", "--q", "5")
    lines = out.splitlines()
    assert code == 0 and lines[1] == "params 10 5 4 2 5 2" and lines[2].startswith("group ")


def test_construct_kron_allones(capsys):
    code, out, _ = run(capsys, "construct", "kron-allones", "--base", "K4", "--n", "2")
    assert code == 0 and out.splitlines()[1] == "params 8 6 6 4 4 2"


@pytest.mark.parametrize("argv, params", [
    (["kron-identity", "--base", "K4", "--t", "3"], "12 3 2 0 3 4"),
    (["kron-identity", "--base", "K4", "--t", "4", "--p", "2,3,0,1"], "16 3 2 0 4 4"),
    (["strong-k2", "--base", "paley:13"], "26 13 12 6 13 2"),
    (["hadamard", "--base", "K2", "--u", "-1"], "8 4 0 2 4 2"),
    (["hadamard", "--base", "empty2", "--u", "1"], "8 6 6 4 4 2"),
    (["kron-allones", "--base-g6", graph6_encode(complete_graph(3)), "--n", "2"], "6 4 4 2 3 2"),
])
def test_construct_variants(capsys, argv, params):
    code, out, _ = run(capsys, "construct", *argv)
    assert code == 0 and out.splitlines()[1] == f"params {params}"


def test_construct_errors(capsys):
    code, _, err = run(capsys, "construct", "paley", "--q", "7")
    assert code == 1 and "WrongResidueClass" in err
    code, _, err = run(capsys, "construct", "kron-identity", "--base", "K4", "--t", "3", "--p", "1,2,0")
    assert code == 1 and "NotSymmetricPermutation" in err
    code, _, err = run(capsys, "construct", "kron-allones", "--base", "X9")
    assert code == 1
    code, _, err = run(capsys, "construct", "hadamard", "--base", "K2", "--order", "8")
    assert code == 1 and "UnsupportedOrder" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--graph6", "Gj]ck[")
    assert code == 0 and out.splitlines()[0] == "8 4 0 2 4 2" and out.splitlines()[1].startswith("partition ")
    code, out, _ = run(capsys, "verify", "--graph6", graph6_encode(complete_graph(4)))
    assert code == 3 and out.strip() == "improper"
    code, out, _ = run(capsys, "verify", "--graph6", graph6_encode(petersen_graph()))
    assert code == 3 and out.strip() == "none"
    code, _, err = run(capsys, "verify", "--graph6", "A_x")
    assert code == 1 and "MalformedString" in err


def test_classify(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "--order", "8")
    records = [line for line in out.splitlines() if not line.startswith("#")]
    assert code == 0 and len(records) == 1 and records[0].startswith("8 4 0 2 4 2 ;")
    code, out, _ = run(capsys, "classify", "--order", "15", "--params", "15,4,0,1,5,3")
    assert code == 0 and "# records 0" in out and "# nonexistent (15,4,0,1,5,3)" in out
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(capsys, "classify", "--order", "12", "--out", str(a))[0] == 0
    assert run(capsys, "classify", "--order", "12", "--jobs", "2", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_classify_errors(capsys, tmp_path):
    assert run(capsys, "classify", "--order", "0")[0] == 1
    assert run(capsys, "classify", "--order", "8", "--params", "8,4,1,2,4,2")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--order", "8", "--jobs", "0"])
    assert exc.value.code == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("group 8 Z8\ngen 1 2 3 4 5 6 7 0\nend\n")
    assert run(capsys, "classify", "--order", "8", "--catalog", str(bad))[0] == 2
    assert run(capsys, "classify", "--order", "8", "--catalog", str(tmp_path / "missing.txt"))[0] == 2


def test_tables(capsys, tmp_path):
    code, _, _ = run(capsys, "tables", "--max-order", "12", "--out-dir", str(tmp_path))
    assert code == 0
    rows = (tmp_path / "table1.txt").read_text().splitlines()[1:]
    assert [r.split()[0] for r in rows] == ["8", "10", "12", "12", "12", "12"]
    assert [r.split()[-1] for r in rows] == ["1"] * 6
    assert (tmp_path / "table2.txt").exists()
    assert run(capsys, "tables", "--max-order", "28", "--out-dir", str(tmp_path))[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ddcg", "construct", "paley", "--q", "9"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "params 18 9 8 4 9 2"
