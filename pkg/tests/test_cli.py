import json
import subprocess
import sys

import pytest

from jacobi_gkn.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_degenerate_exit_code(capsys):
    code, out = run(["apply", "--alpha", "0", "--beta", "0", "--n", "2", "psi+:0"], capsys)
    assert code == 3
    assert json.loads(out)["error"]["type"] == "DegenerateParameter"


def test_domain_minimal(capsys):
    code, out = run(["domain", "--n", "2", "--check", "minimal", "phi+:3"], capsys)
    data = json.loads(out)
    assert code == 0 and data["result"] is True and data["schema"] == 1
    assert data["config"]["n"] == 2


def test_extension_identity(capsys):
    code, out = run(["extension", "--n", "1", "--unitary", '[["1","0"],["0","1"]]'], capsys)
    data = json.loads(out)
    assert code == 0 and data["glazman_symmetric"] and data["independent_mod_minimal"]


def test_not_unitary_is_usage_error(capsys):
    code, _ = run(["extension", "--n", "1", "--unitary", '[["1","1"],["0","1"]]'], capsys)
    assert code == 2


def test_parse_errors(capsys):
    assert run(["apply", "P:x"], capsys)[0] == 2
    assert run(["apply", "nonsense"], capsys)[0] == 2
    assert run(["domain", "--check", "minimal", "terms:[{\"coeff\":\"1\",\"a\":\"-3/2\",\"b\":\"0\"}]"], capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["apply", "--alpha", "x", "P:1"])
    assert exc.value.code == 2


def test_sesqui_regression(capsys):
    code, out = run(["sesqui", "--alpha", "1/2", "--beta", "2/5", "--n", "1", "phi+:0", "psi+:0"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["result"]["full"] == [{"coeff": "1/1", "pow2": "2/5"}]


def test_verify_claims(capsys):
    code, out = run(["verify", "m-rank", "--n", "2", "--alpha", "1/3", "--beta", "2/5"], capsys)
    assert code == 0 and json.loads(out)["evidence"]["rank"] == {"+1": 4, "-1": 4}
    code, out = run(["verify", "any-jacobi", "--n", "2", "--indices", "4,7"], capsys)
    assert code == 0


def test_matrix_and_apply_text(capsys):
    code, out = run(["matrix", "--n", "1", "--side", "+1"], capsys)
    assert code == 0 and json.loads(out)["matrices"][0]["rank"] == 2
    code, out = run(["apply", "--n", "2", "--mode", "symmetric", "P:2", "--output", "text"], capsys)
    assert code == 0 and out.startswith("schema: 1")


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "jacobi_gkn", "verify", "any-jacobi", "--n", "2", "--seed", "7"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout
