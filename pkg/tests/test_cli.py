import io
import subprocess
import sys

import pytest

from seifertkit.cli import main

from conftest import HOPF_DOC, TREFOIL_BAND_DOC


def run(args, doc=TREFOIL_BAND_DOC):
    out, err = io.StringIO(), io.StringIO()
    code = main(args, stdin=io.StringIO(doc), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_conway_hopf_text():
    assert run(["conway"], HOPF_DOC) == (0, "nabla_L = z\n", "")


def test_alpha_text_is_bare():
    assert run(["alpha", "--n", "2", "--i", "1", "--j", "1"])[:2] == (0, "1\n")
    assert run(["beta", "--k", "1", "--l", "1"])[:2] == (0, "-1\n")


def test_machine_golden_trefoil_band():
    code, out, _ = run(["alexander", "--format", "machine"])
    assert out == ("delta_K=1 - 1*t + 1*t^2\n"
                   "potential_K=1*s^-2 - 1 + 1*s^2\n"
                   "potential_L=-1*s^-3 + 3*s^-1 - 3*s + 1*s^3\n")
    assert run(["conway", "--format", "machine"])[1] == "nabla_L=z^3\n"
    assert run(["conway-knot", "--format", "machine"])[1] == "nabla_K=1 + 1*z^2\nnabla_K(0)=1\n"
    assert run(["pairing", "--format", "machine"])[1] == "p_1_1=(1 - 2*t + 1*t^2) / (1 - 1*t + 1*t^2)\n"
    assert run(["taylor", "--order", "4", "--format", "machine"])[1] == "taylor_1_1=u^2 - u^3 + O(u^4)\n"
    assert run(["eta", "--format", "machine"])[1] == "eta_1=(1 - 2*t + 1*t^2) / (1 - 1*t + 1*t^2)\n"


def test_validate_output():
    assert run(["validate"])[1] == "valid: g=1 m=1\n"
    assert run(["validate", "--format", "machine"], HOPF_DOC)[1] == "valid=true\ng=0\nm=1\n"


def test_verify_all_passes():
    code, out, err = run(["verify", "--all"])
    assert code == 0, out + err
    assert out.endswith("all checks passed\n")
    assert "[FAIL]" not in out
    code, out, _ = run(["verify", "--format", "machine"], HOPF_DOC)
    assert code == 0
    assert out.endswith("verified=true\n")


def test_verify_selected_checks():
    code, out, _ = run(["verify", "--series", "--order", "6", "--format", "machine"])
    assert (code, out) == (0, "check.inverse_series=pass\nverified=true\n")


def test_verification_failure_exit_code(monkeypatch):
    import seifertkit.invariants as inv
    from seifertkit.arith import LaurentPoly
    monkeypatch.setattr(inv, "knot_potential", lambda M: LaurentPoly.const(2, "s"))
    code, out, _ = run(["verify", "--factorization", "--format", "machine"])
    assert code == 2
    assert "verified=false" in out


def test_validation_exit_code():
    code, out, err = run(["conway"], TREFOIL_BAND_DOC.replace("-1 1\n0 -1", "0 0\n0 0"))
    assert code == 1 and out == ""
    assert "invalid Seifert data" in err


def test_index_error_exit_code():
    assert run(["pairing"])[0] == 0
    assert run(["alpha", "--n", "1", "--i", "2"])[0] == 1
    assert run(["beta", "--k", "0", "--l", "1"])[0] == 1


def test_parse_exit_code():
    code, _, err = run(["conway"], "seifert-data v1\ng 1\n")
    assert code == 3
    assert "line 3" in err


def test_usage_exit_code():
    assert run(["nope"])[0] == 3
    assert run(["alpha"])[0] == 3
    assert run(["taylor", "--order", "0"])[0] == 3


def test_missing_file(tmp_path):
    assert run(["conway", str(tmp_path / "absent.txt")])[0] == 3


def test_reads_files(tmp_path):
    p = tmp_path / "h.txt"
    p.write_text(HOPF_DOC)
    assert run(["conway", str(p), "--format", "machine"])[1] == "nabla_L=z\n"


def test_report_is_deterministic():
    a = run(["report"])
    b = run(["report"])
    assert a == b and a[0] == 0
    assert "nabla_L = z^3" in a[1]


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "seifertkit", "conway", "--format", "machine"],
                         input=HOPF_DOC, capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == "nabla_L=z\n"
