import json

import pytest

from lexham.cli import main
from lexham.graphs import complete_graph, empty_graph
from lexham.product import ProductSpec

from conftest import figure_layer


@pytest.fixture
def files(tmp_path):
    h = figure_layer()

    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return {
        "h": write("h.json", h.to_dict()),
        "empty": write("e.json", empty_graph(4).to_dict()),
        "dense": write("k30.json", complete_graph(30).to_dict()),
        "p3": write("p3.json", {"m": 3, "layer": h.to_dict()}),
        "p5": write("p5.json", {"m": 5, "layer": h.to_dict()}),
        "p6": write("p6.json", {"m": 6, "layers": [empty_graph(2).to_dict()] * 6}),
        "p4": write("p4.json", ProductSpec.uniform(4, complete_graph(2)).to_dict()),
        "broken": write("broken.json", {"m": 2}),
        "dir": tmp_path,
        "write": write,
    }


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_pi(files, capsys):
    code, out = run(capsys, "pi", files["h"])
    assert code == 0 and out.startswith("pi = 2")
    code, out = run(capsys, "pi", files["empty"])
    assert code == 0 and "pi = 0" in out
    assert run(capsys, "pi", files["dense"])[0] == 3
    code, out = run(capsys, "pi", files["h"], "--json")
    assert json.loads(out)["pi"] == 2


def test_decide(files, capsys):
    code, out = run(capsys, "decide", files["p3"], "--property", "hamiltonian")
    data = json.loads(out)
    assert code == 1 and data["verdict"] is False
    bad = [c for c in data["ledger"] if not c["satisfied"]]
    assert bad[0]["required"] == 6 and bad[0]["actual"] == 4
    assert run(capsys, "decide", files["p5"])[0] == 0
    assert run(capsys, "decide", files["p6"], "--property", "traceable")[0] == 0
    assert run(capsys, "decide", files["p4"], "--property", "ham-connected")[0] == 1


def test_construct_and_verify_round_trip(files, capsys):
    code, out = run(capsys, "construct", files["p5"])
    assert code == 0
    witness = files["write"]("w.json", json.loads(out))
    code, out = run(capsys, "verify", files["p5"], witness)
    assert code == 0 and json.loads(out)["ok"]

    data = json.loads(open(witness).read())
    data["walk"][0], data["walk"][1] = data["walk"][1], data["walk"][0]
    corrupted = files["write"]("bad.json", data)
    code, out = run(capsys, "verify", files["p5"], corrupted)
    assert code == 1 and json.loads(out)["code"] == "not-adjacent"


def test_construct_xy_path(files, capsys):
    code, out = run(capsys, "construct", files["p4"], "--goal", "xy-path", "--x", "2:0", "--y", "3:1", "--dump-multiple")
    data = json.loads(out)
    assert code == 0 and data["walk"][0] == [2, 0] and data["walk"][-1] == [3, 1]
    assert "multiple" in data
    witness = files["write"]("xy.json", {"closed": data["closed"], "walk": data["walk"]})
    assert run(capsys, "verify", files["p4"], witness, "--x", "2:0", "--y", "3:1")[0] == 0
    assert run(capsys, "verify", files["p4"], witness, "--x", "3:1", "--y", "2:0")[0] == 1


def test_construct_infeasible_and_dot(files, capsys):
    code, out = run(capsys, "construct", files["p3"])
    assert code == 1 and json.loads(out)["verdict"] is False
    code, out = run(capsys, "construct", files["p5"], "--emit", "dot")
    assert code == 0 and out.startswith("graph product")
    assert out.count("cluster_") == 5 and out.count("penwidth=3") == 30


def test_product(files, capsys):
    code, out = run(capsys, "product", files["p5"])
    data = json.loads(out)
    assert code == 0 and data["n"] == 30 and len(data["edges"]) == 154
    assert run(capsys, "product", files["p5"], "--emit", "dot")[0] == 0


def test_oracle_single_and_corpus(files, capsys, tmp_path):
    code, out = run(capsys, "oracle", files["p3"], "--property", "traceable")
    assert code == 1 and json.loads(out)["verdict"] is False
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    for name in ("p3", "p4"):
        (corpus / f"{name}.json").write_text(open(files[name]).read())
    code, out = run(capsys, "oracle", corpus, "--property", "hamiltonian")
    assert code == 0 and "0 disagreements" in out


def test_input_errors(files, capsys, tmp_path):
    assert run(capsys, "decide", files["broken"])[0] == 2
    assert run(capsys, "decide", tmp_path / "missing.json")[0] == 2
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert run(capsys, "pi", garbage)[0] == 2
    assert run(capsys, "construct", files["p4"], "--goal", "xy-path", "--x", "2-0", "--y", "3:1")[0] == 2
