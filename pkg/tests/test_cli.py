import io
import json

import pytest

from qcasimir.casimir import CasimirExpression
from qcasimir.cli import run
from qcasimir.mpoly import MPoly, dumps
from qcasimir.qfield import QField
from qcasimir import symfun as sf


def cli(*argv, fault=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), fault=fault, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_g_text():
    assert cli("g", "--n", "2", "--k", "1", "--format", "text") == (0, "q*(L1 + L2)\n", "")


def test_g_range_text():
    code, out, _ = cli("g", "--n", "2", "--kmax", "2")
    assert code == 0
    assert out.splitlines() == ["k=0: q + q^-1", "k=1: q*(L1 + L2)", "k=2: q*L1^2 + (q - q^-1)*L1*L2 + q*L2^2"]


@pytest.mark.parametrize("method", ["direct", "recursive", "two_term", "character"])
def test_g_methods_agree(method):
    assert cli("g", "--n", "3", "--k", "3", "--method", method)[1] == cli("g", "--n", "3", "--k", "3")[1]


def test_eigen_text():
    assert cli("eigen", "--n", "2", "--weight", "1,0", "--k", "1", "--format", "text") == (0, "q^2\n", "")


@pytest.mark.parametrize("method", ["image", "character"])
def test_eigen_methods_agree(method):
    base = cli("eigen", "--weight", "2,1,0", "--kmax", "3")[1]
    assert cli("eigen", "--weight", "2,1,0", "--kmax", "3", "--method", method)[1] == base


def test_hc_and_schur():
    code, out, _ = cli("hc", "--n", "1", "--k", "1")
    assert code == 0 and out == "(q/(q^2 - 1))*(L1 - 1)\n"
    code, out, _ = cli("schur", "--n", "2", "--partition", "2")
    assert out == "L1^2 + L1*L2 + L2^2\n"
    assert cli("schur", "--n", "3", "--partition", "2,1", "--method", "tableaux")[1] == \
        cli("schur", "--n", "3", "--partition", "2,1")[1]


def test_express_h2():
    code, out, _ = cli("express", "--n", "2", "--k", "2", "--format", "json")
    assert code == 0
    expr = CasimirExpression.from_json(json.loads(out))
    assert expr.reconstruct() == sf.complete_homogeneous(2, 2)


def test_express_input_file(tmp_path):
    path = tmp_path / "inv.json"
    path.write_text(MPoly.monomial(2, (-1, -1)).dumps())
    assert cli("express", "--input", str(path)) == (0, "c^2*(1)\n", "")


@pytest.mark.parametrize("argv", [
    ("g", "--n", "2", "--kmax", "3", "--format", "json"),
    ("hc", "--n", "2", "--k", "2", "--format", "json"),
    ("eigen", "--weight", "1,0", "--kmax", "2", "--format", "json"),
    ("express", "--n", "3", "--k", "2", "--format", "json"),
    ("verify", "--n", "2", "--kmax", "2", "--format", "json"),
])
def test_json_round_trips_bytes(argv):
    code, out, _ = cli(*argv)
    assert code == 0
    assert dumps(json.loads(out)) + "\n" == out


def test_json_eigen_single_is_qfield():
    out = cli("eigen", "--weight", "1,0", "--k", "1", "--format", "json")[1]
    assert QField.from_json(json.loads(out)) == QField.q(2)


def test_out_file(tmp_path):
    path = tmp_path / "g.txt"
    code, out, _ = cli("g", "--n", "2", "--k", "1", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text() == "q*(L1 + L2)\n"


@pytest.mark.parametrize("argv", [
    ("g", "--n", "0", "--k", "1"),
    ("g", "--n", "2", "--k", "-1"),
    ("g", "--n", "2"),
    ("eigen", "--weight", "0,1", "--k", "1"),
    ("eigen", "--n", "3", "--weight", "1,0", "--k", "1"),
    ("eigen", "--weight", "a,b", "--k", "1"),
    ("schur", "--n", "2", "--partition", "1,2"),
    ("express", "--n", "2", "--k", "1", "--jobs", "0"),
    ("bogus",),
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = cli(*argv)
    captured = capsys.readouterr()
    assert code == 2
    assert "error" in (err + captured.err)


def test_express_asymmetric_input_is_usage_error(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(MPoly.var(2, 1).dumps())
    code, _, err = cli("express", "--input", str(path))
    assert code == 2 and "symmetric" in err


def test_verify_small_passes():
    code, out, err = cli("verify", "--n", "3", "--kmax", "3")
    assert code == 0 and err == ""
    assert out.splitlines()[-1].startswith("result: PASS")


def test_verify_jobs_deterministic():
    one = cli("verify", "--n", "3", "--kmax", "3", "--jobs", "1")[1]
    many = cli("verify", "--n", "3", "--kmax", "3", "--jobs", "3")[1]
    assert one == many


def test_g_jobs_deterministic():
    assert cli("g", "--n", "3", "--kmax", "4", "--jobs", "2")[1] == cli("g", "--n", "3", "--kmax", "4")[1]


@pytest.mark.parametrize("identity,witness", [
    ("direct_eq_recursive", "n=1, k=0"),
    ("eigenvalue_coherence", "n=1, weight=(1), k=0"),
    ("casimir_generation", "n=1, k=1"),
])
def test_fault_injection_exits_1(identity, witness):
    code, out, err = cli("verify", "--n", "2", "--kmax", "2", "--weight-bound", "1", fault=identity)
    assert code == 1
    assert f"identity failure: {identity} at {witness}" in err
    assert f"first failing identity: {identity} at {witness}" in out


def test_bench_table():
    code, out, _ = cli("bench", "--n", "2", "--kmax", "1")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split() == ["n", "k", "direct_s", "recursive_s", "character_s", "hc_product_s"]
    assert len(lines) == 1 + 2 * 2
