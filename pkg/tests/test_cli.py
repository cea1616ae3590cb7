import io
import json
import subprocess
import sys

import pytest

from octofano.cli import main
from octofano.tables import MultTable


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_galois():
    assert run("galois", "--n", "3", "--q", "2") == (0, "16\n")
    code, out = run("galois", "--n", "2", "--q", "2", "--format", "json")
    assert json.loads(out) == {"n": 2, "q": 2, "gaussian_binomials": [1, 3, 1], "galois_number": 5}


def test_fano_json():
    code, out = run("fano", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["lines"]) == 7
    assert ["010", "100", "110"] in data["lines"]
    assert all(line == sorted(line) for line in data["lines"])


def test_fano_text_exit_zero():
    code, out = run("fano")
    assert code == 0 and "self-dual: True" in out


def test_sweep():
    assert run("sweep", "--orientations") == (0, "16 of 128 orientation assignments validate\n")
    code, _ = run("sweep")
    assert code == 1


def test_subspaces_json():
    code, out = run("subspaces", "--n", "3", "--q", "2", "--k", "2", "--format", "json")
    assert len(json.loads(out)) == 7
    code, out = run("subspaces", "--n", "3", "--q", "2", "--dim", "1")
    assert out.count("\n") == 8


def test_lattice_formats():
    code, out = run("lattice", "--n", "3", "--q", "2", "--format", "json")
    data = json.loads(out)
    assert len(data["nodes"]) == 16 and len(data["covers"]) == 7 + 7 * 3 + 7
    code, out = run("lattice", "--n", "3", "--q", "2", "--format", "dot")
    assert out.startswith("digraph")


def test_octonion_table_json_round_trip(tmp_path):
    code, out = run("octonion-table", "--format", "json")
    t = MultTable.from_json(out)
    assert t.to_json() + "\n" == out
    path = tmp_path / "table.json"
    path.write_text(out)
    assert run("validate", "--table", str(path))[0] == 0
    m = json.loads(out)
    m[1][3] = -m[1][3]
    path.write_text(json.dumps(m))
    code, text = run("validate", "--table", str(path))
    assert code == 1 and "anticommutative: False" in text


def test_validate_json():
    code, out = run("validate", "--coding", "points", "--format", "json")
    assert code == 0 and json.loads(out)["norm_composing"] is True


def test_identity():
    code, out = run("identity", "--n", "2")
    assert (code, out) == (0, "(a1^2+a2^2)(b1^2+b2^2) = (a1b1-a2b2)^2 + (a2b1+a1b2)^2\n")
    code, out = run("identity", "--n", "16")
    assert code == 1 and "nonzero" in out
    code, out = run("identity", "--n", "8", "--source", "fano", "--format", "json")
    assert code == 0 and json.loads(out)["n"] == 8


def test_probe_json():
    code, out = run("probe", "--level", "3", "--law", "associative", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["holds"] is False
    assert data["counterexample"][0] == ["0", "1", "0", "0", "0", "0", "0", "0"]


def test_usage_and_domain_errors():
    assert run("bogus")[0] == 2
    assert run("galois", "--n", "3")[0] == 2
    assert run("galois", "--n", "3", "--q", "0")[0] == 1
    assert run("subspaces", "--n", "3", "--q", "4", "--k", "1")[0] == 1
    assert run("identity", "--n", "3")[0] == 1


def test_console_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "octofano", "probe", "--level", "2", "--law", "commutative", "--seed", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and b"fails" in first


@pytest.mark.parametrize("fmt", ["json"])
def test_json_outputs_round_trip(fmt):
    for argv in (
        ["galois", "--n", "4", "--q", "3"],
        ["fano"],
        ["lattice", "--n", "2", "--q", "2"],
        ["probe", "--level", "4", "--law", "moufang"],
        ["sweep", "--orientations"],
        ["validate"],
    ):
        _, out = run(*argv, "--format", fmt)
        assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out
