import json
import subprocess
import sys

import pytest

from colnum.cli import main

P4 = "4 3\n0 1\n1 2\n2 3\n"


@pytest.fixture()
def p4_file(tmp_path):
    f = tmp_path / "p4.g"
    f.write_text(P4)
    return str(f)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_eval(capsys, p4_file, tmp_path):
    sig = tmp_path / "p4.sigma"
    sig.write_text("0 1 2 3\n")
    code, doc = run_json(
        capsys, ["eval", p4_file, str(sig), "--r", "2", "--no-timestamp"]
    )
    assert code == 0
    by_kind = {rep["kind"]: rep for rep in doc["reports"]}
    assert by_kind["weak"]["value"] == 3
    assert by_kind["strong"]["value"] == 2
    assert by_kind["adm"]["value"] == 2


def test_eval_timestamp_toggle(capsys, p4_file, tmp_path):
    sig = tmp_path / "s"
    sig.write_text("0 1 2 3\n")
    _, doc = run_json(capsys, ["eval", p4_file, str(sig), "--r", "1"])
    assert "timestamp" in doc
    _, doc = run_json(
        capsys, ["eval", p4_file, str(sig), "--r", "1", "--no-timestamp"]
    )
    assert "timestamp" not in doc


def test_exact(capsys, p4_file):
    code, doc = run_json(
        capsys,
        ["exact", p4_file, "--r", "inf", "--kind", "weak",
         "--tw", "--td", "--no-timestamp"],
    )
    assert code == 0
    assert doc["treewidth"] == 1 and doc["treedepth"] == 3
    assert doc["results"][0]["value"] == 3
    assert doc["results"][0]["r"] == "inf"


def test_exact_cap_exit_code(capsys, tmp_path, monkeypatch):
    big = tmp_path / "big.g"
    lines = ["20 19"] + [f"{i} {i + 1}" for i in range(19)]
    big.write_text("\n".join(lines) + "\n")
    assert main(["exact", str(big), "--r", "1"]) == 3
    monkeypatch.setenv("COLNUM_CAP", "20")
    capsys.readouterr()
    code, doc = run_json(capsys, ["exact", str(big), "--r", "1", "--no-timestamp"])
    assert code == 0 and doc["results"][0]["value"] == 2


def test_input_errors_exit_2(tmp_path, capsys):
    assert main(["eval", str(tmp_path / "missing.g"), "x"]) == 2
    bad = tmp_path / "bad.g"
    bad.write_text("2 1\n0 0\n")
    sig = tmp_path / "s"
    sig.write_text("0 1\n")
    assert main(["eval", str(bad), str(sig)]) == 2
    g = tmp_path / "g.g"
    g.write_text(P4)
    assert main(["exact", str(g), "--r", "0"]) == 2
    capsys.readouterr()


def test_uniform_dyadic(capsys, p4_file, tmp_path):
    star = tmp_path / "sigma.out"
    code, doc = run_json(
        capsys,
        ["uniform", p4_file, "--dyadic", "--sigma", "exact",
         "--sigma-out", str(star), "--no-timestamp"],
    )
    assert code == 0 and doc["ok"]
    ids = [int(t) for t in star.read_text().split()]
    assert sorted(ids) == [0, 1, 2, 3]


def test_uniform_instance_file(capsys, tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps({
        "n": 4,
        "layers": [
            {"edges": [[0, 1], [1, 2], [2, 3]], "r": 1, "a": 2,
             "sigma": "degeneracy"},
            {"edges": [[0, 2], [1, 3]], "r": 2, "a": 1, "sigma": "exact"},
        ],
    }))
    code, doc = run_json(
        capsys, ["uniform", str(inst), "--audit", "--no-timestamp"]
    )
    assert code == 0 and doc["ok"]
    assert len(doc["layers"]) == 2
    assert all(entry["ok"] for entry in doc["audit"])


def test_uniform_requires_input(capsys):
    assert main(["uniform"]) == 2
    capsys.readouterr()


def test_example21_invalid_params_exit_2(capsys, tmp_path):
    code = main(["example21", "3", "4", "2", "4",
                 "--out-prefix", str(tmp_path / "x")])
    assert code == 2
    capsys.readouterr()


def test_example21_generate_and_verify(capsys, tmp_path):
    prefix = str(tmp_path / "fam")
    code, doc = run_json(
        capsys,
        ["example21", "4", "4", "2", "4", "--verify", "--samples", "3",
         "--seed", "7", "--out-prefix", prefix, "--no-timestamp"],
    )
    assert code == 0 and doc["ok"]
    assert doc["vertices"] == 124
    labels = json.loads((tmp_path / "fam.labels.json").read_text())
    assert len(labels) == 124
    header = (tmp_path / "fam.g").read_text().splitlines()[0]
    assert header.split()[0] == "124"


def test_verify_single_suite(capsys):
    code, doc = run_json(
        capsys, ["verify", "thm15", "--seed", "7", "--quiet", "--no-timestamp"]
    )
    assert code == 0
    assert doc["criteria"][0]["id"] == 6 and doc["ok"]


def test_verify_unknown_suite(capsys):
    assert main(["verify", "nope"]) == 2
    capsys.readouterr()


def test_console_entry_point(tmp_path):
    g = tmp_path / "p4.g"
    g.write_text(P4)
    proc = subprocess.run(
        [sys.executable, "-m", "colnum.cli", "exact", str(g),
         "--r", "1", "--no-timestamp"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"][0]["value"] == 2
