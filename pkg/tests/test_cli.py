import json

import pytest

from gnegard import presets
from gnegard.cli import main
from gnegard.presets import PresetSpec


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_porteous(capsys):
    assert run(capsys, "porteous", "--E", "0,0,0", "--F", "1,1,2") == (0, "17\n", "")
    assert run(capsys, "porteous", "--E", "0,0,0", "--F", "1,1,1")[1] == "6\n"
    assert run(capsys, "porteous", "--E", "1,1,1,1,1,-2", "--F", "T")[1] == "9\n"


def test_shape(capsys):
    code, out, _ = run(capsys, "shape", "--E", "0,0,0,0", "--F", "1,1,1,1")
    assert out.strip() == "0 -> O(-8) -> O^16(-5) -> O^30(-4) -> O^16(-3) -> O"


def test_ideal_and_betti(capsys):
    code, out, _ = run(capsys, "ideal", "--E", "0,0,0", "--F", "1,1,1", "--r", "5")
    assert code == 0 and "codimension 4" in out and "degree      6" in out
    code, out, _ = run(capsys, "betti", "--E", "0,0,0", "--F", "1,1,1", "--r", "5")
    assert " 1:  .  9 16  9  ." in out


def test_saturate(capsys):
    code, out, _ = run(capsys, "saturate", "--E", "1,1,1,1,1,-2", "--r", "6", "--seed", "3")
    assert "4 generators of degrees [1, 1, 3, 3]" in out and "degree      9" in out


def test_cohomology(capsys):
    code, out, _ = run(capsys, "cohomology", "--E", "0,0,0", "--F", "1,1,2", "--r", "7")
    assert out.splitlines() == ["h^0=1 h^1=0 h^2=0 h^3=1", "canonical twist 0"]
    code, _, err = run(capsys, "cohomology", "--E", "0,0,0", "--F", "1,1,2", "--r", "5")
    assert code == 1 and "undetermined" in err


def test_run_writes_json(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "run", "deg20", "--r", "6", "--seed", "7", "--mode", "full", "--out", str(out))
    assert code == 0
    assert "[FAIL]" not in text
    data = json.loads(out.read_text())
    for key in ("schemaVersion", "preset", "r", "prime", "seed", "degree", "dimension",
                "hilbertPolynomial", "sectionalGenus", "chiO", "pg", "q", "Ksquared",
                "diamond", "bettiTable", "checks"):
        assert key in data
    assert data["degree"] == {"value": 20, "source": "computed"}
    assert data["hilbertPolynomial"]["value"] == [[8, 1], [-10, 1], [10, 1]]
    assert data["diamond"]["h11"]["value"] == 60
    assert all(c["pass"] for c in data["checks"])


def test_run_json_to_stdout(capsys):
    code, text, _ = run(capsys, "run", "delpezzo", "--r", "5", "--json")
    data = json.loads(text)
    assert code == 0 and data["bettiTable"]["value"] == [[0, 0, 1], [1, 2, 9], [2, 3, 16], [3, 4, 9], [4, 6, 1]]


def test_degenerate_sample_exits_nonzero(capsys, monkeypatch):
    monkeypatch.setattr(presets, "codimension", lambda I: 3)
    code, _, err = run(capsys, "run", "deg20", "--r", "6", "--seed", "5")
    assert code == 2 and "--seed 6" in err


def test_invalid_range(capsys):
    assert run(capsys, "run", "deg20", "--r", "9")[0] == 2
    with pytest.raises(SystemExit):
        main(["run", "nosuch"])


def test_preset_defaults():
    assert PresetSpec("deg20", 6).mode == "full"
    assert PresetSpec("deg20", 7).mode == "fast"
    assert PresetSpec("deg20", 6).prime == 101
    with pytest.raises(ValueError):
        PresetSpec("deg20", 4)
