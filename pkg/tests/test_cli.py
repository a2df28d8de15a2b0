import io
import json

import pytest

from cremona.cli import main, run_fixture, FIXTURES


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip() else None), err.getvalue()


@pytest.fixture
def f23_file(tmp_path):
    p = tmp_path / "f23.map"
    p.write_text("map P2 [(2*x + y)*z, 3*y*(x + z), z*(x + z)]\n")
    return str(p)


def test_degrees(f23_file):
    code, out, _ = run(["degrees", "--map", f23_file, "--k", "6"])
    assert code == 0
    assert out["degrees"] == [2, 2, 3, 3, 4, 4]
    assert "report_schema_version" in out


def test_classify(f23_file):
    code, out, _ = run(["classify", "--map", f23_file, "--k", "20"])
    assert code == 0 and out["class"] == "Jonquieres"


def test_basepoints(f23_file):
    code, out, _ = run(["basepoints", "--map", f23_file])
    assert code == 0


def test_mu(f23_file):
    code, out, _ = run(["mu", "--map", f23_file, "--pencil", "1:0:0"])
    assert code == 0 and out["mu"] == 1


def test_lattice_cmd():
    code, out, _ = run(["lattice", "--lam", "L", "--delta", "E1 - E2", "--n", "3"])
    assert code == 0


def test_kappa_cmd():
    code, out, _ = run(["kappa", "--delta", "E1 - E2", "--m", "2"])
    assert code == 0 and out["kappa"] == {"num": 36, "den": 1}


def test_conj_diag_cmd():
    code, out, _ = run(["conj-diag", "--torus", "torus: N=5, free=1", "--psi", "(1;0)", "(0;1)",
                        "--mn", "2", "3"])
    assert code == 0 and out["verdict"] == "NotConjugate"


def test_reduce_cmd(tmp_path):
    p = tmp_path / "tri.map"
    p.write_text("map A2 [x + 1, y + x^2 + 3*x]\n")
    code, out, _ = run(["reduce", "--map", str(p)])
    assert code == 0 and out["verified"]


def test_bs_cmd():
    code, out, _ = run(["bs", "2", "3"])
    assert code == 0 and out["verdict"] == "NoEmbedding"


def test_gl2q_cmd():
    code, out, _ = run(["gl2q", "--k", "1", "--verify", "10"])
    assert code == 0
    code, _, _ = run(["gl2q", "--k", "2"])
    assert code == 2


def test_input_errors(tmp_path):
    assert run(["degrees", "--map", str(tmp_path / "missing.map")])[0] == 2
    bad = tmp_path / "bad.map"
    bad.write_text("map P2 [x^2, y, z]\n")
    assert run(["degrees", "--map", str(bad)])[0] == 2
    assert run(["no-such-command"])[0] == 2


def test_pretty_output(f23_file):
    out = io.StringIO()
    main(["--pretty", "degrees", "--map", f23_file, "--k", "3"], stdout=out, stderr=io.StringIO())
    assert "\n  " in out.getvalue()


@pytest.mark.parametrize("name", sorted(n for n in FIXTURES if n != "halphen-9-4"))
def test_fixtures_pass(name):
    assert run_fixture(name)["pass"]


def test_fixture_list():
    code, out, _ = run(["fixtures", "--list"])
    assert code == 0 and "sigma-involution" in json.dumps(out)


def test_degrees_csv(f23_file):
    out = io.StringIO()
    code = main(["degrees", "--map", f23_file, "--k", "4", "--csv"], stdout=out, stderr=io.StringIO())
    assert code == 0
    assert out.getvalue().splitlines() == ["k,degree", "1,2", "2,2", "3,3", "4,3"]
