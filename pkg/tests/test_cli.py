import json
import subprocess
import sys

import jsonschema
import pytest

from origamikit import cli
from origamikit.degeneration import DualGraph
from origamikit.origami import SCHEMA, get_origami, origami_from_json
from origamikit.schema import SCHEMAS

COMMANDS = [
    ["info", "S"],
    ["info", "torus"],
    ["cylinders", "S", "--dir", "v"],
    ["veech", "S"],
    ["domain", "S"],
    ["boundary", "S"],
    ["curve-verify"],
    ["locus", "--point", "2,2/3"],
    ["catalog"],
]


def run(capsys, argv):
    code = cli.run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_text_output_is_deterministic(capsys, argv):
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2 and out1


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_json_output_matches_schema(capsys, argv):
    code, out, _ = run(capsys, argv + ["--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == SCHEMA
    jsonschema.validate(doc, SCHEMAS[doc["command"]])


def test_json_round_trips(capsys):
    _, out, _ = run(capsys, ["info", "S", "--format", "json"])
    doc = json.loads(out)
    o = origami_from_json({"schema": SCHEMA, **doc["origami"]})
    assert o == get_origami("S")
    _, out, _ = run(capsys, ["boundary", "S", "--format", "json"])
    graphs = [DualGraph.from_json(c["graph"]) for c in json.loads(out)["cusps"]]
    assert graphs[0] == DualGraph((0,), ((0, 0), (0, 0)))


def test_veech_summary(capsys):
    _, out, _ = run(capsys, ["veech", "S"])
    assert "index in SL2(Z): 4" in out
    assert "cusps: 2" in out
    assert "quotient genus: 0" in out


def test_info_torus(capsys):
    _, out, _ = run(capsys, ["info", "torus"])
    assert "genus: 1" in out and "no zeros" in out


def test_curve_verify_prints_relation(capsys):
    code, out, _ = run(capsys, ["curve-verify"])
    assert code == 0
    assert "m*(l + 1) - l = 0" in out
    assert out.count("PASS") == 5


def test_verification_failure_exits_1(capsys, monkeypatch):
    from origamikit import elliptic
    from origamikit.algebra import RatFunc

    real = elliptic.family_record
    monkeypatch.setattr(
        cli.elliptic, "family_record", lambda mu=None: real(RatFunc.var() / (RatFunc.var() + 3) if mu is None else mu)
    )
    code, out, err = run(capsys, ["curve-verify"])
    assert code == 1
    assert "FAIL  x([2]P1) = 0" in out


def test_member_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(cli.veech, "is_member", lambda w, o: False)
    code, _, err = run(capsys, ["veech", "S"])
    assert code == 1 and "membership" in err


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["info", "h=(1 2; v=()"], "line 1, column 3"),
        (["info", "h=(1 2)(3 4); v=()"], "transitive"),
        (["info"], "exactly one"),
        (["nonsense"], ""),
        (["cylinders", "S", "--dir", "x"], ""),
        (["locus", "--point", "2,x"], "column"),
    ],
)
def test_usage_errors_exit_2(capsys, argv, needle):
    code, _, err = run(capsys, argv)
    assert code == 2
    assert needle in err


def test_file_input(capsys, tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("S;\nh=(1 2 3)(4 5 6);\nv=(2 4)(3 5;\n")
    code, _, err = run(capsys, ["info", "--file", str(p)])
    assert code == 2 and "line 3, column 8" in err
    p.write_text(json.dumps(get_origami("S").to_json()))
    code, out, _ = run(capsys, ["info", "--file", str(p)])
    assert code == 0 and "genus: 2" in out


def test_svg_and_dot(capsys, tmp_path):
    svg = tmp_path / "d.svg"
    code, _, _ = run(capsys, ["domain", "S", "--svg", str(svg)])
    assert code == 0 and svg.read_text().startswith("<svg")
    _, out, _ = run(capsys, ["domain", "S", "--format", "svg"])
    assert out.startswith("<svg")
    _, out, _ = run(capsys, ["boundary", "S", "--format", "dot"])
    assert out.count("graph cusp") == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    run(capsys, ["catalog", "--format", "json", "-o", str(target)])
    assert json.loads(target.read_text())["command"] == "catalog"


def test_module_entry_point_is_byte_identical():
    cmd = [sys.executable, "-m", "origamikit", "veech", "S", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["index"] == 4
