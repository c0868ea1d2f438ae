import json

import pytest

import satake


def test_build_a1xa1():
    doc = satake.build("A1xA1", [1, 1])
    assert doc["dim"] == 4
    assert sorted(w["degree"] for w in doc["weights"]) == [-2, 0, 0, 2]


def test_verify_g2():
    report = satake.verify("G2", "0,1")
    assert report["passed"]
    names = {c["name"] for c in report["checks"]}
    assert "serre 2,1: (ad e_2)^4 e_1=0" in names


def test_verify_file_roundtrip(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(satake.build("B2", [1, 1])))
    assert satake.verify_file(path)["passed"]


def test_decompose():
    doc = satake.decompose("A2", [1, 0], [0, 1])
    assert doc["components"] == [
        {"coweight": [0, 0], "multiplicity": 1},
        {"coweight": [1, 1], "multiplicity": 1},
    ]


def test_character_and_dimension():
    ch = satake.character("G2", [1, 0])
    assert ch[(0, 0)] == 2
    assert sum(ch.values()) == satake.weyl_dimension("G2", [1, 0]) == 14
    assert satake.classify("G2", [0, 1]) == "quasi-minuscule"


def test_cells_and_feasibility():
    table = satake.cells("G2", [0, 1])
    e1f2 = [w for w in table["words"] if w["word"] == ["e1", "f2"]]
    assert len(e1f2) == 7
    assert all(w["violated"] == "(alpha_2,mu)=4 impossible" for w in e1f2)
    assert satake.support_feasible("G2", [0, 1], [-1, 2], ["f2"]) == (True, "")


def test_errors():
    with pytest.raises(ValueError):
        satake.build("Q7", [1])
    with pytest.raises(ValueError):
        satake.build("A2", [-1, 0])
    with pytest.raises(satake.CapExceeded):
        satake.build("G2", [1, 0], cap=5)
    code, out, err = satake.run_cli(["cells", "--type", "G2", "--coweight", "1,0"])
    assert code == 2 and out == "" and "neither" in err
