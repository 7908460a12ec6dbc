import io
import json
import subprocess
import sys

import pytest

from laurentcodes.catalog import toric2d
from laurentcodes.cli import RunConfig, InputError, run
from laurentcodes.groebner import CAPS, set_caps


@pytest.fixture(autouse=True)
def restore_caps():
    saved = dict(CAPS)
    yield
    set_caps(saved["pairs"], saved["basis"])


def call(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_catalog():
    code, out, _ = call("check", "--catalog", "toric2d")
    assert code == 0
    assert json.loads(out) == {"code": "toric2d", "commuting": True}


def test_check_noncommuting_from_stdin(monkeypatch):
    bad = json.dumps({"name": "bad", "dimension": 1, "qubits_per_site": 1,
                      "generators": [["1", "0"], ["0", "1"]]})
    code, out, _ = call("check", "--input", "-", stdin=bad, monkeypatch=monkeypatch)
    assert code == 1
    res = json.loads(out)
    assert res["commuting"] is False
    assert res["witness"] == {"i": 0, "j": 1, "value": "1"}


def test_malformed_json_reports_position(monkeypatch):
    code, _, err = call("check", "--input", "-", stdin='{"name": \n  oops}',
                        monkeypatch=monkeypatch)
    assert code == 2
    assert "line 2 column 3" in err


def test_input_file(tmp_path):
    path = tmp_path / "code.json"
    path.write_text(toric2d().to_json())
    code, out, _ = call("degeneracy", "--input", str(path), "--L", "3")
    assert code == 0
    assert json.loads(out) == {"code": "toric2d", "dimK": 4, "k": 2, "method": "rank",
                               "sizes": [3, 3]}


def test_degeneracy_multiple_sizes_and_csv():
    code, out, _ = call("degeneracy", "--catalog", "chamon", "--sizes", "2,2,2",
                        "--sizes", "4,2,2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "code,dimK,k,method,sizes"
    assert lines[1:] == ['chamon,16,8,rank,"[2, 2, 2]"', 'chamon,16,8,rank,"[4, 2, 2]"']


def test_degeneracy_output_is_reproducible():
    a = call("degeneracy", "--catalog", "toric2d", "--L", "2", "--L", "3")[1]
    b = call("degeneracy", "--catalog", "toric2d", "--L", "2", "--L", "3", "--jobs", "2")[1]
    assert a == b
    timed = json.loads(call("degeneracy", "--catalog", "toric2d", "--L", "2", "--timing")[1])
    assert "elapsed_ms" in timed


def test_exactness_and_witness():
    code, out, _ = call("exactness", "--catalog", "ising2d")
    assert code == 1
    res = json.loads(out)
    assert res["exact"] is False and res["witness"]
    assert call("exactness", "--catalog", "toric3d")[0] == 0


def test_chardim_text_format():
    code, out, _ = call("chardim", "--catalog", "cubic", "--format", "text")
    assert code == 0
    assert "char_dim: 1" in out


def test_fractal_commands():
    code, out, _ = call("fractal", "--catalog", "newman-moore")
    assert code == 0
    assert json.loads(out)["fractal"]["f"] == "1+x^-1+y^-1"
    code, out, _ = call("fractal", "--catalog", "chamon", "--f", "1+x*y^-1")
    assert code == 0
    assert json.loads(out)["fractal"]["v"] == ["1+x*y"]
    assert call("fractal", "--catalog", "toric4d")[0] == 1


def test_torsion_period():
    code, out, _ = call("torsion", "--catalog", "toric2d")
    res = json.loads(out)
    assert code == 0
    assert res["torsion_free"] is False
    assert res["period_L"] == 1


def test_classify1d_transcript(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"name": "chain", "dimension": 1, "qubits_per_site": 1,
                                "generators": [["0", "1+x+x^2"]]}))
    code, out, _ = call("classify1d", "--input", str(path), "--transcript")
    res = json.loads(out)
    assert code == 0
    assert (res["coarse_factor"], res["ising_copies"], res["free_qubits"]) == (3, 2, 1)
    assert res["transcript"][0] == {"move": "CoarseGrain", "basis": [[3]]}


def test_process_json_csv_and_pgm(tmp_path):
    code, out, _ = call("process", "--catalog", "newman-moore", "--r-max", "3")
    res = json.loads(out)
    assert code == 0 and res["ok"] and len(res["rows"]) == 4
    code, out, _ = call("process", "--catalog", "newman-moore", "--r-max", "2",
                        "--format", "csv", "--pgm", str(tmp_path / "nm"))
    lines = out.strip().splitlines()
    assert lines[0] == "energy,step"
    assert lines[1] == "0,0"
    assert len(lines) == 1 + 9 + 1
    img = (tmp_path / "nm_row1.pgm").read_text()
    assert img.startswith("P2\n")


def test_catalog_list_and_export():
    code, out, _ = call("catalog", "list")
    names = [r["name"] for r in json.loads(out)]
    assert "levin-wen" in names and len(names) == 10
    code, out, _ = call("catalog", "export", "toric2d")
    assert json.loads(out) == toric2d().to_dict()
    assert call("catalog", "export")[0] == 2
    assert call("catalog", "export", "nope")[0] == 2


def test_oracle_random():
    code, out, _ = call("oracle", "--random", "3", "--bound", "8", "--seed", "7")
    rows = json.loads(out)
    assert code == 0
    assert rows and all(r["match"] for r in rows)


def test_caps_exit_code():
    code, _, err = call("exactness", "--catalog", "levin-wen", "--pair-cap", "1")
    assert code == 3
    assert "cap exceeded" in err
    code, _, err = call("degeneracy", "--catalog", "toric2d", "--L", "40", "--cell-limit", "10")
    assert code == 3


@pytest.mark.parametrize("argv", [
    ["degeneracy", "--catalog", "toric2d"],
    ["degeneracy", "--catalog", "toric2d", "--sizes", "2"],
    ["degeneracy", "--catalog", "toric2d", "--sizes", "a,b"],
    ["fractal", "--catalog", "toric2d", "--f", "1+q"],
    ["check"],
    ["bogus"],
    ["check", "--catalog", "toric2d", "--jobs", "0"],
])
def test_input_errors(argv):
    assert call(*argv)[0] == 2


def test_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "text", "r_max": 1}))
    code, out, _ = call("chardim", "--catalog", "toric2d", "--config", str(cfg))
    assert code == 0 and "char_dim: 0" in out
    cfg.write_text(json.dumps({"colour": "red"}))
    assert call("chardim", "--catalog", "toric2d", "--config", str(cfg))[0] == 2


def test_run_config_validation():
    with pytest.raises(InputError):
        RunConfig.from_json('{"jobs": -1}')
    assert RunConfig.from_json("{}") == RunConfig()


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "laurentcodes.cli", "check", "--catalog",
                           "ising1d"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["commuting"] is True
