import json
import subprocess
import sys

import pytest

from cofrac.cli import main, parse_range, split_graph_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_helpers():
    assert split_graph_list("petersen,c5,star:3,0") == ["petersen", "c5", "star:3,0"]
    assert split_graph_list("random:10,1/2,3,k3") == ["random:10,1/2,3", "k3"]
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("20,30") == [20, 30]


def test_compute_plain_and_json(capsys):
    code, out, _ = run(capsys, "compute", "--graph", "gen:cycle:5", "--param", "z_f")
    assert code == 0 and out.splitlines()[0] == "5/2"
    code, out, _ = run(capsys, "compute", "--graph", "gen:star:3,0", "--param", "z_f", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["value"] == "5/3" and obj["parameter"] == "z_f"
    assert obj["graph"] == {"family": "star", "params": [3, 0]}


@pytest.mark.parametrize(
    "param, graph, value",
    [("alpha", "gen:petersen", "4"), ("omega", "gen:k3", "3"), ("chi", "gen:c5", "3"), ("z", "gen:star:3,0", "2")],
)
def test_compute_integer_parameters(capsys, param, graph, value):
    code, out, _ = run(capsys, "compute", "--graph", graph, "--param", param)
    assert code == 0 and out.strip() == value


def test_json_output_is_byte_stable(capsys):
    argv = ["compute", "--graph", "gen:petersen", "--param", "chi_f", "--json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_compute_from_file(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "compute", "--graph", str(path), "--param", "chi_f")
    assert code == 0 and out.splitlines()[0] == "3"


def test_verify_round_trip_and_tamper(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    assert main(["compute", "--graph", "gen:star:3,0", "--param", "z_f", "--json", "--out", str(cert)]) == 0
    code, out, _ = run(capsys, "verify", "--graph", "gen:star:3,0", "--cert", str(cert))
    assert code == 0 and out.strip() == "ok"
    obj = json.loads(cert.read_text())
    first = obj["cover"][0]
    first["weight"] = str(__import__("fractions").Fraction(first["weight"]) / 2)
    cert.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", "--graph", "gen:star:3,0", "--cert", str(cert), "--json")
    result = json.loads(out)
    assert code == 1 and result["valid"] is False and "< 1" in result["reason"]


def test_verify_against_wrong_graph(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    main(["compute", "--graph", "gen:c5", "--param", "chi_f", "--json", "--out", str(cert)])
    code, _, _ = run(capsys, "verify", "--graph", "gen:k3", "--cert", str(cert))
    assert code == 1


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--graph", "gen:cycle:4")
    assert code == 0 and out == "4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_check_verbs(capsys):
    code, out, _ = run(capsys, "check", "example1", "--t", "1..3", "--s", "0..1")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 6 and {x["verdict"] for x in lines} == {"holds"}
    code, out, _ = run(capsys, "check", "thm6", "--graphs", "c5,star:2,1", "--seed", "1")
    verdicts = [json.loads(x)["verdict"] for x in out.splitlines()]
    assert code == 0 and verdicts == ["holds", "exception"]
    code, out, _ = run(capsys, "check", "thm7")
    assert code == 0 and all(json.loads(x)["verdict"] == "holds" for x in out.splitlines())


def test_experiments(capsys):
    code, out, _ = run(capsys, "experiment", "remark6", "--n", "12", "--seed", "4")
    assert code == 0 and json.loads(out)["verdict"] == "holds"
    code, out, _ = run(capsys, "experiment", "aks", "--graph", "gen:petersen", "--seed", "2")
    assert code == 0 and "kept_vertices" in json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "thm6"],
        ["experiment", "gap"],
        ["compute", "--graph", "gen:c5"],
        ["compute", "--graph", "gen:bogus:1", "--param", "z_f"],
        ["compute", "--graph", "/nonexistent/graph.txt", "--param", "z_f"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_parse_error_names_line(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n0 7\n")
    code, _, err = run(capsys, "compute", "--graph", str(path), "--param", "z_f")
    assert code == 2 and "line 3" in err


def test_capability_limit_exits_3(capsys):
    code, _, err = run(capsys, "compute", "--graph", "gen:random:70,1/2,1", "--param", "z_f")
    assert code == 3 and "limit" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cofrac", "compute", "--graph", "gen:kneser:5,2", "--param", "chi_f"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0 and proc.stdout.splitlines()[0] == "5/2"
