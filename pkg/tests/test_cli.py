import json

import pytest

from admatrix.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_info(capsys):
    code, data = run_json(capsys, "info", "--family", "cycle:6")
    assert code == 0
    assert data["diameter"] == 3 and data["ad_regular"] and data["distance_regular"]
    code, data = run_json(capsys, "info", "path:5")
    assert data["diametrical_bipartite"] is False


def test_info_disconnected_file(capsys, tmp_path):
    f = tmp_path / "g.edges"
    f.write_text("4 2\n0 1\n2 3\n")
    code, _, err = run(capsys, "info", "--file", str(f))
    assert code == 2 and "error" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "info", "--file", str(tmp_path / "nope.edges"))
    assert code == 2 and "cannot read" in err


def test_unknown_family(capsys):
    code, _, err = run(capsys, "info", "dodecahedron")
    assert code == 2


def test_spectrum_exact(capsys):
    code, data = run_json(capsys, "spectrum", "path:4", "--exact")
    assert code == 0 and data["charpoly"] == ["1", "0", "-12", "0", "4"]
    assert "spectrum" not in data


def test_spectrum_closed(capsys):
    code, data = run_json(capsys, "spectrum", "cycle:6", "--closed")
    assert code == 0
    assert len(data["closed"]["spectrum"]) == 6
    assert data["closed"]["max_mismatch"] <= 1e-9
    code, data = run_json(capsys, "spectrum", "double_star:3,4", "--closed")
    assert code == 0 and data["closed"]["agrees_with_exact"]
    code, _, _ = run(capsys, "spectrum", "complete:4", "--closed")
    assert code == 2


def test_spectrum_numeric_text(capsys):
    code, out, _ = run(capsys, "spectrum", "complete:4", "--numeric")
    assert code == 0 and "3.000000, -1.000000, -1.000000, -1.000000" in out


def test_det(capsys):
    code, data = run_json(capsys, "det", "star:4")
    assert code == 0
    assert data == {"name": "star:4", "n": 4, "det_exact": "-12", "det_partitions": "-12",
                    "match": True, "partition_count": 6}


def test_invariants(capsys):
    code, data = run_json(capsys, "invariants", "cycle:6", "--planar")
    assert code == 0
    assert data["addegrees"] == [5] * 6 and data["alpha_ad"] == 3
    assert any(b["name"] == "planar-four-colour" and b["applicable"] for b in data["bounds"])


def test_verify(capsys):
    code, data = run_json(capsys, "verify", "2.2", "--population", "cycle:4..24")
    assert code == 0 and data["passed"] and data["instances"] == 21
    code, data = run_json(capsys, "verify", "5.1", "--population", "exhaustive:5")
    assert code == 0 and data["failures"] == []


def test_verify_failure_exit_code(capsys):
    code, data = run_json(capsys, "verify", "cor5.1", "--population", "path:3")
    assert code == 1 and len(data["failures"]) == 1


def test_verify_unknown_and_list(capsys):
    code, _, err = run(capsys, "verify", "9.9")
    assert code == 2 and "unknown theorem" in err
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "clique" in out and "cartesian" in out


def test_verify_seed_is_deterministic(capsys):
    a = run_json(capsys, "--seed", "5", "verify", "6.1", "--population", "random:20:9")[1]
    b = run_json(capsys, "verify", "6.1", "--population", "random:20:9", "--seed", "5")[1]
    assert a["seed"] == b["seed"] == 5
    assert a["instances"] == b["instances"] == 20


@pytest.mark.parametrize("argv, case", [
    (["--kind", "lex", "--g", "path:4", "--h", "complete:2"], "diameter>2"),
    (["--kind", "cartesian", "--g", "cycle:6", "--h", "cycle:6"], None),
])
def test_product_check(capsys, argv, case):
    code, data = run_json(capsys, "product", *argv, "--check")
    assert code == 0 and data["match"]
    assert data["case"] == case
    assert data["max_mismatch"] <= 1e-7


def test_product_join(capsys):
    code, data = run_json(capsys, "product", "--kind", "join", "--g", "complete:1",
                          "--h", "empty:3")
    assert code == 0 and data["determinant"] == "-12" and data["n"] == 4


def test_gen(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "cycle:4..5")
    assert code == 0 and out.count("# cycle") == 2
    code, _, _ = run(capsys, "gen", "exhaustive:4", "--out", str(tmp_path))
    files = sorted(tmp_path.glob("*.edges"))
    assert code == 0 and len(files) == 9
    code, data = run_json(capsys, "info", str(files[-1]))
    assert code == 0 and data["n"] == 4
