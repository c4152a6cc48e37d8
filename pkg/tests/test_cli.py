import json

import pytest

from superspin import cli


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_strict_partitions(capsys):
    rc, out = run(capsys, "strict-partitions", "4")
    assert rc == 0
    assert out.splitlines() == ["4", "3,1"]
    rc, out = run(capsys, "strict-partitions", "4", "--json")
    obj = json.loads(out)
    assert obj["schema"] == "superspin/1"
    assert obj["partitions"] == [[4], [3, 1]]


def test_tableaux(capsys):
    rc, out = run(capsys, "tableaux", "3,1", "--json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["tableaux"] == [[[1, 2, 3], [4]], [[1, 2, 4], [3]]]


def test_spectrum_example(capsys):
    rc, out = run(capsys, "spectrum", "3,1")
    assert rc == 0
    obj = json.loads(out)
    assert obj["schema"] == "superspin/1"
    assert obj["spectra"] == [
        {"b": [0, 1, 2, 0], "a": [0, 1, 3, 0]},
        {"b": [0, 1, 0, 2], "a": [0, 1, 0, 3]},
    ]


def test_spectrum_oracle(capsys):
    rc, out = run(capsys, "spectrum", "2,1", "--oracle")
    assert rc == 0
    assert json.loads(out)["oracle_checked"] is True


def test_spectrum_invalid_partition(capsys):
    rc = cli.main(["spectrum", "1,3"])
    assert rc == 2


def test_branching_graph_dot(capsys):
    rc, out = run(capsys, "branching-graph", "3", "--dot")
    assert rc == 0
    # 4 orbits and 2 orbit-level cover edges at the top transition
    assert out.count("label=") >= 5
    assert "style=dashed" in out
    rc, out = run(capsys, "branching-graph", "3")
    obj = json.loads(out)
    assert obj["source"] == "combinatorial"
    rc, out = run(capsys, "branching-graph", "3", "--oracle")
    assert rc == 0
    assert json.loads(out)["source"] == "from_reps"


def test_build_verify_roundtrip(tmp_path, capsys):
    path = tmp_path / "rep.json"
    rc = cli.main(["build-rep", "2,1", "--out", str(path)])
    assert rc == 0
    rc, out = run(capsys, "verify", str(path))
    assert rc == 0
    report = json.loads(out)["report"]
    assert all(r["status"] == "pass" for r in report)
    # mutate one sign and expect failure
    obj = json.loads(path.read_text())
    entry = obj["generators"][0]["matrix"][0]
    for i, cell in enumerate(entry):
        if cell["terms"]:
            cell["terms"][0]["coeff"] = "-" + cell["terms"][0]["coeff"].lstrip("-")
            break
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    rc, out = run(capsys, "verify", str(bad))
    assert rc == 1


def test_verify_missing_file(capsys):
    rc = cli.main(["verify", "/definitely/not/there.json"])
    assert rc == 2


def test_supercenter(capsys):
    rc, out = run(capsys, "supercenter", "3")
    assert rc == 0
    obj = json.loads(out)
    assert obj["dimension"] == 2
    assert len(obj["basis"]) == 2


def test_gz(capsys):
    rc, out = run(capsys, "gz", "3")
    assert rc == 0
    obj = json.loads(out)
    assert obj["maximality_flag"] is True
    assert obj["gz_dim"] == 3


def test_decompose_regular(capsys):
    rc, out = run(capsys, "decompose-regular", "A", "3")
    assert rc == 0
    obj = json.loads(out)
    assert obj["schema"] == "superspin/1"
    assert [b["type"] for b in obj["blocks"]] == ["Q", "M"]


def test_determinism(capsys):
    _, out1 = run(capsys, "branching-graph", "4")
    _, out2 = run(capsys, "branching-graph", "4")
    assert out1 == out2
    _, out1 = run(capsys, "decompose-regular", "A", "3")
    _, out2 = run(capsys, "decompose-regular", "A", "3")
    assert out1 == out2


def test_check_all_small(capsys):
    rc, out = run(capsys, "check-all", "--max-n", "2", "--json")
    assert rc == 0
    results = json.loads(out)["results"]
    assert all(r["status"] == "pass" for r in results)


def test_check_all_negative_control(capsys):
    rc, out = run(capsys, "check-all", "--max-n", "2", "--negative-control")
    assert rc == 1
    assert "FAIL" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "parts.json"
    rc = cli.main(["strict-partitions", "5", "--json", "--out", str(path)])
    assert rc == 0
    assert json.loads(path.read_text())["partitions"] == [[5], [4, 1], [3, 2]]
