from __future__ import annotations

import json
import subprocess
import sys

import pytest

from joinring.cli import main, run
from joinring.groups import cyclic
from joinring.fields import Field
from joinring.join import JoinElement


def invoke(argv, payload=None, monkeypatch=None, capsys=None):
    import io

    text = "" if payload is None else (payload if isinstance(payload, str) else json.dumps(payload))
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, payload=None: invoke(argv, payload, monkeypatch, capsys)


def test_classify(cli):
    code, out = cli(["classify", "--field", "Fp:2", "--groups", "Z/2,Z/2"])
    assert code == 0
    assert out == {"center_dim": 3, "is_semisimple": False, "is_frobenius": False, "irreducible_count": 2, "radical_dim": 4}


def test_spectrum_k23(cli):
    code, out = cli(["spectrum"], {"outer": [[0, 1], [1, 0]], "inner": [[0, 0], [0, 0, 0]]})
    assert code == 0
    r6 = 6**0.5
    vals = sorted(complex(*z).real for z in out["eigenvalues"])
    assert vals == pytest.approx([-r6, 0, 0, 0, r6], abs=1e-9)


def test_check_round_trip(cli):
    a = JoinElement.random([cyclic(2), cyclic(3)], Field.rationals(), __import__("random").Random(1))
    code, out = cli(["check"], a.to_json())
    assert code == 0 and out == {"ok": True}


def test_check_matrix_not_a_join(cli):
    m = {"rows": 4, "cols": 4, "field": "Q", "entries": [1 if k == 3 else 0 for k in range(16)]}
    code, out = cli(["check", "--field", "Q", "--groups", "Z/2,Z/2"], {"matrix": m})
    assert code == 2 and out["error"] == "not-a-join"


def test_count_units(cli):
    assert cli(["count-units", "--field", "Fp:2", "--groups", "Z/2,Z/2"]) == (0, {"count": 16})
    code, out = cli(["count-units", "--field", "Fp:2", "--groups", "Z/2,Z/3"])
    assert code == 2 and out["error"] == "not-p-groups"


def test_malformed(cli):
    code, out = cli(["units"], "{not json")
    assert code == 1 and out["error"] == "malformed-input"
    code, out = cli(["classify", "--field", "Fp:4", "--groups", "Z/2"])
    assert code == 1
    code, out = cli(["classify", "--field", "Q", "--groups", "Q/2"])
    assert code == 1
    code, out = cli(["units", "--field", "Q", "--groups", "Z/2"], {"blocks": [[1, 2, 3]]})
    assert code == 1


def test_mul(cli):
    f = Field.prime(5)
    rng = __import__("random").Random(2)
    a, b = (JoinElement.random([cyclic(2), cyclic(3)], f, rng) for _ in range(2))
    code, out = cli(["mul"], {"factors": [a.to_json(), b.to_json()]})
    assert code == 0
    assert JoinElement.from_json(out["product"]) == a * b


def test_units_modular(cli):
    payload = {"blocks": [[0, 1], [1, 0]], "off": [[0, 1], [1, 0]]}
    code, out = cli(["units", "--field", "Fp:2", "--groups", "Z/2,Z/2"], payload)
    assert code == 0 and out["is_unit"] is True
    assert out["structure"]["torus"] == [1, 1]
    code, out = cli(["units", "--field", "Fp:2", "--groups", "Z/2,Z/2"], {"blocks": [[1, 1], [1, 0]]})
    assert out == {"is_unit": False, "inverse": None}


def test_radical_and_center(cli):
    code, out = cli(["radical", "--field", "Fp:2", "--groups", "Z/2,Z/3"])
    assert code == 0 and out["dim"] == 3 and len(out["basis"]) == 3
    code, out = cli(["center", "--field", "Q", "--groups", "S/4,Z/2"])
    assert out["dim"] == 6


def test_frobenius_witness(cli):
    lam = [1, 0, 1, 1, 0, 1, 1]
    code, out = cli(["frobenius", "--field", "Fp:2", "--groups", "Z/2,Z/3"], {"functional": lam})
    assert code == 0 and out["is_frobenius"] is False
    v = JoinElement.from_json(out["witness"]["generator"])
    assert sum(x * y for x, y in zip(lam, v.coords())) % 2 == 0 and not v.is_zero()
    assert cli(["frobenius", "--field", "C", "--groups", "Z/2,Z/3"]) == (0, {"is_frobenius": True})


def test_diagonalize(cli):
    payload = {"groups": [{"kind": "cyclic", "n": 3}] * 2, "blocks": [[0, 1, 1], [0, 1, 1]], "off": [[0, 1], [1, 0]]}
    code, out = cli(["diagonalize"], payload)
    assert code == 0
    assert out["circulant_eigs"] == [[-1.0, 0.0]] * 4
    assert out["reduced"]["entries"] == [[2.0, 0.0], [3.0, 0.0], [3.0, 0.0], [2.0, 0.0]]
    code, out = cli(["diagonalize", "--normalized", "--groups", "Z/2,Z/3"], {"blocks": [[0, 0], [0, 0, 0]], "off": [[0, 1], [1, 0]]})
    assert out["reduced"]["entries"][1] == [6**0.5, 0.0] or abs(out["reduced"]["entries"][1][0] - 6**0.5) < 1e-11


def test_diagonalize_non_cyclic(cli):
    code, out = cli(["diagonalize", "--groups", "D/6"], {"blocks": [[1, 0, 0, 0, 0, 0]]})
    assert code == 2 and out["error"] == "not-cyclic"


def test_out_file(cli, tmp_path):
    dest = tmp_path / "r.json"
    import io

    code, _ = run(["count-units", "--field", "Fp:3", "--groups", "Z/3", "--out", str(dest)])
    assert code == 0
    assert main(["count-units", "--field", "Fp:3", "--groups", "Z/3", "--out", str(dest)]) == 0
    assert json.loads(dest.read_text()) == {"count": 18}


def test_in_file(tmp_path, capsys):
    src = tmp_path / "job.json"
    src.write_text(json.dumps({"outer": [[0, 1], [1, 0]], "inner": [[0, 1, 1], [0, 1, 1]]}))
    assert main(["spectrum", "--in", str(src)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [round(z[0], 9) for z in out["eigenvalues"]] == [-1.0] * 5 + [5.0]


def test_deterministic_subprocess(tmp_path):
    src = tmp_path / "job.json"
    src.write_text(json.dumps({"outer": [[0, 2, 1], [2, 0, 1], [1, 1, 0]], "inner": [[0, 1, 0, 1], [0, 1, 1], [1, 0]]}))
    cmd = [sys.executable, "-m", "joinring.cli", "spectrum", "--in", str(src)]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]


def test_exit_codes_subprocess():
    cmd = [sys.executable, "-m", "joinring.cli", "count-units", "--field", "Fp:2", "--groups", "S/3"]
    r = subprocess.run(cmd, capture_output=True, text=True, stdin=subprocess.DEVNULL)
    assert r.returncode == 2 and json.loads(r.stdout)["error"] == "not-p-groups"
    r = subprocess.run(cmd[:4] + ["--field", "nonsense"], capture_output=True, text=True, stdin=subprocess.DEVNULL)
    assert r.returncode == 1
