import json
import subprocess
import sys

import pytest

from twoadic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def example1(tmp_path, capsys):
    path = tmp_path / "b.bits"
    code, out, _ = run(capsys, "gen", "--family", "twoprime", "--p", "3", "--out", str(path))
    assert code == 0
    return path


def test_gen_twoprime(example1, capsys):
    assert example1.read_text() == "15\n100101110111111\n"


def test_gen_provenance_gmw(tmp_path, capsys):
    path = tmp_path / "a.bits"
    code, out, _ = run(capsys, "gen", "--family", "gmw", "--k", "2", "--out", str(path))
    assert code == 0
    prov = json.loads(out)
    assert prov["n"] == 15 and prov["constant_column"] == 0 and len(prov["shifts"]) == 4
    assert prov["modulus"] == "0x13"
    code, out, _ = run(capsys, "autocorr", "--in", str(path))
    assert json.loads(out)["histogram"] == {"-1": 2, "3": 12, "15": 1}


def test_gen_to_stdout_json(capsys):
    code, out, err = run(capsys, "gen", "--family", "twoprime", "--p", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["n"] == 35
    assert json.loads(err)["pair"] == [5, 7]


def test_gen_modulus_override(capsys):
    code, out, _ = run(capsys, "gen", "--family", "gmw", "--k", "3", "--modulus", "67")
    assert code == 0
    code, _, err = run(capsys, "gen", "--family", "gmw", "--k", "3", "--modulus", "41")
    assert code == 2 and "not a primitive" in err


def test_gen_bad_params(capsys):
    code, _, err = run(capsys, "gen", "--family", "twoprime", "--p", "9")
    assert code == 2
    assert "p and p+2 must both be prime" in err
    code, _, _ = run(capsys, "gen", "--family", "gmw")
    assert code == 2
    code, _, _ = run(capsys, "gen", "--family", "nope")
    assert code == 2


def test_complexity_example1(example1, capsys):
    code, out, _ = run(capsys, "complexity", "--in", str(example1))
    rep = json.loads(out)
    assert code == 0
    assert (rep["s2"], rep["g"], rep["qmin"]) == ("32489", "1", "32767")
    assert rep["phi2"] == pytest.approx(14.99996, abs=1e-5)


def test_autocorr_all_ones(tmp_path, capsys):
    path = tmp_path / "ones.bits"
    path.write_text("4\n1111\n")
    code, out, _ = run(capsys, "autocorr", "--in", str(path))
    assert json.loads(out)["values"] == [4, 4, 4, 4]


def test_approx(example1, capsys):
    code, out, _ = run(capsys, "approx", "--in", str(example1), "--prefix-len", "32")
    rep = json.loads(out)
    assert code == 0
    assert rep == {"f": "-32489", "q": "32767", "phi_measure": rep["phi_measure"], "prefix_len": 32, "verified": True}
    code, out, _ = run(capsys, "approx", "--in", str(example1), "--format", "text")
    assert "verified: True" in out


def test_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.bits"
    bad.write_text("5\n1011\n")
    for cmd in ("autocorr", "complexity", "approx"):
        code, _, err = run(capsys, cmd, "--in", str(bad))
        assert code == 2 and "length mismatch" in err
    code, _, _ = run(capsys, "complexity", "--in", str(tmp_path / "missing.bits"))
    assert code == 2


def test_verify_example1(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "example1", "--jobs", "1")
    assert code == 0
    (rep,) = json.loads(out)["reports"]
    assert rep["pass"] and rep["measured"]["s2"] == "32489" and rep["measured"]["qmin"] == "32767"
    assert rep["measured"]["modulus_factors"] == "7*31*151"


def test_verify_lemma2_p_limit(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "lemma2", "--p-limit", "31", "--jobs", "1")
    reports = json.loads(out)["reports"]
    assert code == 0
    assert [r["params"]["p"] for r in reports] == [3, 5, 11, 17, 29]
    assert all(r["pass"] for r in reports)


def test_verify_text_and_ordering(capsys):
    code, out, _ = run(
        capsys, "verify", "--claim", "eq2", "--claim", "eq1", "--k-range", "2..3",
        "--p-limit", "11", "--format", "text", "--jobs", "2",
    )
    lines = out.splitlines()
    assert code == 0
    assert lines[:5] == ["PASS eq1 k=2", "PASS eq1 k=3", "PASS eq2 p=3", "PASS eq2 p=5", "PASS eq2 p=11"]
    assert lines[-1] == "seed=0 total=5 failed=0"


def test_verify_lemma3_deterministic(capsys):
    args = ("verify", "--claim", "lemma3", "--k-range", "2..2", "--p-limit", "5", "--seed", "7", "--jobs", "1")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    obj = json.loads(first)
    assert obj["seed"] == 7 and obj["pass"]


def test_verify_out_of_range(capsys):
    assert run(capsys, "verify", "--k-range", "2..7")[0] == 2
    assert run(capsys, "verify", "--p-limit", "101")[0] == 2
    assert run(capsys, "verify", "--k-range", "x")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    import twoadic.verify as verify

    monkeypatch.setattr(verify, "EXAMPLE1_BITS", "0" * 15)
    code, out, _ = run(capsys, "verify", "--claim", "example1", "--jobs", "1")
    assert code == 1 and json.loads(out)["pass"] is False


def test_console_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "twoadic.cli", "gen", "--family", "twoprime", "--p", "3"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "15\n100101110111111\n"
