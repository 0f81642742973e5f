import json
import pathlib
import subprocess
import sys

import pytest

from singprod import io
from singprod.cli import run

FIX = pathlib.Path(__file__).parent / "fixtures"


def f(name):
    return str(FIX / name)


# (argv, expected exit code)
MATRIX = [
    (["audit", f("phi12.json")], 0),
    (["audit", f("psi24.json")], 0),
    (["audit", f("phi12_on_d20.json")], 1),
    (["audit", f("double_zero.json")], 1),
    (["audit", f("float_weight.json")], 2),
    (["audit", f("bad_exponent.json")], 2),
    (["audit", f("truncated.json")], 2),
    (["audit", f("missing.json")], 2),
    (["lattice-info", "2U+D20"], 0),
    (["lattice-info", f("u_a1.json")], 0),
    (["lattice-info", f("odd_gram.json")], 0),
    (["lattice-info", f("asymmetric_gram.json")], 2),
    (["lattice-info", "no-such-lattice"], 2),
    (["enumerate", "D4", "--norm", "2"], 0),
    (["enumerate", "U", "--norm", "2"], 2),
    (["enumerate", "D4", "--norm", "0"], 2),
    (["enumerate", "D4"], 2),
    (["series", "laplace", "--series", f("order_two.json"), "--lattice", f("u_a1.json")], 0),
    (["series", "order", "--series", f("mirror_pair.json"), "--lattice", f("u_a1.json"), "--v", "1,1,0"], 0),
    (["series", "witness", "--series", f("mirror_pair.json"), "--lattice", f("u_a1.json"), "--v", "1,1,0"], 0),
    (["series", "witness", "--series", f("order_two.json"), "--lattice", f("u_a1.json"), "--v", "0,0,1"], 0),
    (["series", "antiinv", "--series", f("mirror_pair.json"), "--lattice", f("u_a1.json"), "--v", "1,1,0"], 0),
    (["series", "antiinv", "--series", f("not_anti.json"), "--lattice", f("u_a1.json"), "--v", "1,1,0"], 1),
    (["series", "order", "--series", f("mirror_pair.json"), "--lattice", f("u_a1.json")], 2),
    (["series", "order", "--series", f("mirror_pair.json"), "--lattice", f("u_a1.json"), "--v", "1,-1,0"], 2),
    (["series", "order", "--series", f("bad_series.json"), "--lattice", f("u_a1.json"), "--v", "1,1,0"], 2),
    (["series", "order", "--series", f("mirror_pair.json"), "--lattice", "D4", "--v", "1,1,0,0"], 2),
    (["series", "fourier", "--series", f("mirror_pair.json"), "--lattice", f("u_a1.json")], 2),
    (["rank-verdict", "21"], 0),
    (["rank-verdict", "26"], 0),
    (["rank-verdict", "2"], 2),
    (["rank-verdict", "x"], 2),
    (["bookkeep", "--s", "10", "--w", "24", "--mmax", "8"], 1),
    (["bookkeep", "--s", "10", "--w", "24", "--mmax", "2"], 0),
    (["bookkeep", "--s", "0", "--w", "24", "--mmax", "2"], 2),
    (["bookkeep", "--s", "1/0", "--w", "24", "--mmax", "2"], 2),
    (["catalog"], 0),
    (["catalog", "list"], 0),
    (["catalog", "show", "Phi12"], 0),
    (["catalog", "show", "Leech"], 0),
    (["catalog", "show", "Nope"], 2),
    (["catalog", "show"], 2),
    (["audit", f("phi12.json"), "--bogus"], 2),
    (["frobnicate"], 2),
    ([], 2),
]


def call(argv):
    try:
        return run(argv)
    except SystemExit as exc:
        return exc.code


@pytest.mark.parametrize("argv,code", MATRIX, ids=[" ".join(a[:2]) + f" ->{c}" for a, c in MATRIX])
def test_exit_code_matrix(argv, code, capsys):
    assert call(argv) == code
    assert call(argv + ["--json"]) == code
    capsys.readouterr()


def test_errors_go_to_stderr(capsys):
    assert call(["audit", f("truncated.json")]) == 2
    out, err = capsys.readouterr()
    assert out == "" and "not valid UTF-8 JSON" in err


def test_text_outputs(capsys):
    call(["rank-verdict", "21"])
    assert capsys.readouterr().out.strip() == "NONE_EXISTS"
    call(["bookkeep", "--s", "10", "--w", "24", "--mmax", "8"])
    assert "infeasible" in capsys.readouterr().out
    call(["audit", f("phi12.json")])
    assert capsys.readouterr().out.strip().endswith("verdict: PASS")


JSON_CASES = [
    ["audit", f("phi12.json")],
    ["audit", f("psi24.json")],
    ["audit", f("double_zero.json")],
    ["lattice-info", "D4"],
    ["enumerate", "D4", "--norm", "2"],
    ["series", "witness", "--series", f("order_two.json"), "--lattice", f("u_a1.json"), "--v", "0,0,1"],
    ["series", "laplace", "--series", f("order_two.json"), "--lattice", f("u_a1.json")],
    ["rank-verdict", "26"],
    ["bookkeep", "--s", "10", "--w", "24", "--mmax", "2"],
    ["catalog", "show", "Psi24"],
]


@pytest.mark.parametrize("argv", JSON_CASES, ids=[" ".join(a[:2]) for a in JSON_CASES])
def test_json_round_trip_is_byte_stable(argv, capsys):
    call(argv + ["--json"])
    first = capsys.readouterr().out
    assert io.dumps(json.loads(first)) == first
    call(argv + ["--json"])
    assert capsys.readouterr().out == first


def _scalars(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _scalars(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _scalars(v)
    else:
        yield obj


def test_json_has_no_floats(capsys):
    for argv in JSON_CASES:
        call(argv + ["--json"])
        data = json.loads(capsys.readouterr().out)
        assert not any(isinstance(x, float) for x in _scalars(data))


def test_audit_json_fields(capsys):
    call(["audit", f("phi12.json"), "--json"])
    d = json.loads(capsys.readouterr().out)
    assert d["verdict"] == "PASS" and d["signature"] == [26, 2] and d["m_K"] == 1
    assert d["divisor"] == [{"coset": ["0"] * 26, "m": "1", "norm": "2",
                             "representative": ["1", "1"] + ["0"] * 26, "multiplicity": 1,
                             "reflective": True}]


def test_catalog_form_round_trips_through_audit(tmp_path, capsys):
    call(["catalog", "show", "Phi12", "--json"])
    cand = json.loads(capsys.readouterr().out)["candidate"]
    p = tmp_path / "phi.json"
    p.write_text(io.dumps(cand), encoding="utf-8")
    assert call(["audit", str(p)]) == 0
    assert io.candidate_to_json(io.candidate_from_json(cand), K_ref=cand["K"]) == cand


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "singprod", "rank-verdict", "26"],
                         capture_output=True, text=True, timeout=60)
    assert res.returncode == 0 and res.stdout.strip() == "ONLY_PHI12"
    res = subprocess.run([sys.executable, "-m", "singprod", "bookkeep", "--s", "10", "--w", "24",
                          "--mmax", "8"], capture_output=True, text=True, timeout=60)
    assert res.returncode == 1
    res = subprocess.run([sys.executable, "-m", "singprod", "nope"], capture_output=True, text=True,
                         timeout=60)
    assert res.returncode == 2
