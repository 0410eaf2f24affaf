"""The command-line surface: problem/certificate files, exit codes,
and determinism."""

import io
import contextlib

from frobsplit.cli import main, parse_problem, parse_mrat, CLIError
from frobsplit.fields import FieldSpec

import pytest

IDENTITY = """\
[field]
p = 2
ell = 1

[map]
n = 1
entry_1_1 = 1

[question]
d = 1
"""

DIAG_FF = """\
[field]
p = 2
ell = 1

[map]
n = 2
entry_1_1 = F
entry_1_2 = 0
entry_2_1 = 0
entry_2_2 = F

[question]
d = 1
"""

F_PLUS_1 = """\
[field]
p = 2
ell = 1

[map]
n = 1
entry_1_1 = 1 + F

[question]
d = 1
density_m = 25
density_d = 3
"""

LAMBDA = """\
[field]
p = 2
ell = 1

[lambda]
lambda = t1 + 1
c = 1 ; 1
"""


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_parse_rejects_unknown_keys():
    with pytest.raises(CLIError):
        parse_problem("[field]\np = 2\nell = 1\nbogus = 3\n")
    with pytest.raises(CLIError):
        parse_problem("[bogus]\nx = 1\n")
    with pytest.raises(CLIError):
        parse_problem(IDENTITY + "entry_9_9 = F\n")


def test_parse_rejects_bad_modulus():
    code, _, _ = run_with_file("[field]\np = 2\nell = 2\nmodulus = [1,0,1]\n",
                               lambda p: ["tools", "minpoly", p])
    assert code == 1


def run_with_file(text, argv_fn, tmp_name="problem.txt"):
    import tempfile, os
    d = tempfile.mkdtemp()
    path = os.path.join(d, tmp_name)
    with open(path, "w") as fh:
        fh.write(text)
    return run(argv_fn(path)) + (path,)


def test_classify_identity_is_B(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text(IDENTITY)
    cert = tmp_path / "c.txt"
    code, out = run(["classify", str(prob), "--out", str(cert)])
    assert code == 0
    assert "verdict = B" in out
    code, out = run(["verify", str(cert), str(prob)])
    assert code == 0
    assert "v*A^1 = v" in out


def test_classify_diag_is_C_and_tamper_fails(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text(DIAG_FF)
    cert = tmp_path / "c.txt"
    code, out = run(["classify", str(prob), "--out", str(cert)])
    assert code == 0 and "verdict = C" in out
    assert "r = 1" in cert.read_text()
    code, _ = run(["verify", str(cert), str(prob)])
    assert code == 0
    tampered = tmp_path / "bad.txt"
    tampered.write_text(cert.read_text().replace("r = 1", "r = 2"))
    code, out = run(["verify", str(tampered), str(prob)])
    assert code == 4 and "identity fails" in out


def test_digest_mismatch(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text(DIAG_FF)
    other = tmp_path / "q.txt"
    other.write_text(IDENTITY)
    cert = tmp_path / "c.txt"
    assert run(["classify", str(prob), "--out", str(cert)])[0] == 0
    code, _ = run(["verify", str(cert), str(other)])
    assert code == 3


def test_classify_A_with_density(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text(F_PLUS_1)
    cert = tmp_path / "c.txt"
    code, out = run(["classify", str(prob), "--out", str(cert)])
    assert code == 0 and "verdict = A" in out
    assert "outcome = dense-up-to-D" in cert.read_text()
    code, out = run(["verify", str(cert), str(prob)])
    assert code == 0


def test_classify_unknown_exit_2(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text("[field]\np = 2\nell = 2\n\n[map]\nn = 1\n"
                    "entry_1_1 = [0,1]*F\n\n[question]\nd = 1\n")
    code, _ = run(["classify", str(prob), "--cap", "1"])
    assert code == 2
    code, _ = run(["classify", str(prob)])
    assert code == 0


def test_non_dominant_exit_1(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text("[field]\np = 2\nell = 1\n\n[map]\nn = 1\n"
                    "entry_1_1 = 0\n\n[question]\nd = 1\n")
    code, _ = run(["classify", str(prob)])
    assert code == 1


def test_determinism_byte_identical(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text(F_PLUS_1)
    outs = []
    for _ in range(2):
        code, out = run(["classify", str(prob), "--seed", "5"])
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_tools_minpoly_and_tilde(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text("[field]\np = 2\nell = 2\n\n[map]\nn = 1\n"
                    "entry_1_1 = F\n")
    code, out = run(["tools", "minpoly", str(prob)])
    assert code == 0 and out.strip() == "minpoly = (s) + x^2"
    code, out = run(["tools", "tilde", str(prob)])
    assert code == 0
    assert "t_1_2 = [1,0]" in out and "t_2_1 = s" in out
    assert "t_1_1 = 0" in out and "t_2_2 = 0" in out


def test_tools_split_orbit_density(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text(DIAG_FF)
    code, out = run(["tools", "split", str(prob)])
    assert code == 0 and "blocks = (1,2)" in out
    pt = tmp_path / "pt.txt"
    pt.write_text(F_PLUS_1.replace("[question]\nd = 1\ndensity_m = 25\n"
                                   "density_d = 3\n",
                                   "[point]\nnvars = 1\nx_1 = (1) / (t1)\n"))
    code, out = run(["tools", "orbit", str(pt), "--M", "3"])
    assert code == 0 and out.splitlines()[0] == "(1) / (t1)"
    code, out = run(["tools", "density", str(pt), "--M", "25", "--D", "3"])
    assert code == 0 and "outcome = dense-up-to-D" in out


def test_tools_lambda_density(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text(LAMBDA)
    code, out = run(["tools", "lambda-density", str(prob), "--M", "512"])
    assert code == 0
    assert "count = 10/512" in out
    lines = out.splitlines()
    assert lines[0] == "m,solvable,tuple"
    assert lines[1] == "1,1,(1,)"
    assert lines[2] == "2,1,(2,)"
    assert lines[3] == "3,0,"


def test_tools_fset_and_independence(tmp_path):
    prob = tmp_path / "p.txt"
    prob.write_text("[field]\np = 2\nell = 1\n\n[fset]\ngamma0 = 0\n"
                    "gamma_1 = t1\nk_1 = 1\nb = 3\nmodule_bound = 0\n")
    code, out = run(["tools", "fset", str(prob)])
    assert code == 0 and "count = 3" in out
    assert "t1^2" in out and "t1^8" in out
    code, out = run(["tools", "independence", str(prob), "--M", "2",
                     "--D", "4"])
    assert code == 0 and "independent = true" in out


def test_parse_mrat_roundtrip():
    spec = FieldSpec.get(2, 1)
    for text in ("t1", "(1) / (t1)", "t1^2 + t1 + 1",
                 "(t1^3 + 1) / (t1^2 + t1)"):
        f = parse_mrat(text, spec, 1)
        assert parse_mrat(repr(f), spec, 1) == f
