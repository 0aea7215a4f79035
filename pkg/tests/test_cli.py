import json
import subprocess
import sys

from chowring.cli import main


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_f4(capsys):
    code, out, _ = run_cli("roots", "--type", "F4", capsys=capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 24


def test_roots_json(capsys):
    code, out, _ = run_cli("roots", "--type", "A2", "--format", "json",
                           capsys=capsys)
    payload = json.loads(out)
    assert len(payload) == 3
    assert payload[-1] == {"coords": [1, 1], "height": 2}


def test_roots_from_cartan_file(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("2 -1\n-1 2\n")
    code, out, _ = run_cli("roots", "--cartan-file", str(path), capsys=capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_unknown_type_is_usage_error(capsys):
    code, _, err = run_cli("roots", "--type", "E9", capsys=capsys)
    assert code == 2
    assert "unknown root system" in err


def test_bad_theta_is_usage_error(capsys):
    code, _, err = run_cli("weyl", "longest", "--type", "F4",
                           "--theta", "1,9", capsys=capsys)
    assert code == 2


def test_weyl_order_and_longest(capsys):
    code, out, _ = run_cli("weyl", "order", "--type", "F4", capsys=capsys)
    assert (code, out) == (0, "1152\n")
    code, out, _ = run_cli("weyl", "longest", "--type", "F4",
                           "--theta", "1,2,3", capsys=capsys)
    assert code == 0
    assert "length 9" in out


def test_weyl_cosets(capsys):
    code, out, _ = run_cli("weyl", "cosets", "--type", "F4",
                           "--theta", "2,3,4", capsys=capsys)
    assert code == 0
    assert out.strip().splitlines()[-1] == "count 24"


def test_hasse_dot_output(capsys):
    code, out, _ = run_cli("hasse", "--type", "F4", "--theta", "2,3,4",
                           "--format", "dot", capsys=capsys)
    assert code == 0
    assert out.count("->") == 30
    assert len([l for l in out.splitlines() if "label=" in l and "->" not in l]) == 24


def test_hasse_pieri_json(capsys):
    code, out, _ = run_cli("hasse", "--type", "F4", "--theta", "2,3,4",
                           "--pieri", "--format", "json", capsys=capsys)
    payload = json.loads(out)
    assert len(payload["edges"]) == 32


def test_chow_basis(capsys):
    code, out, _ = run_cli("chow", "basis", "--type", "F4",
                           "--theta", "2,3,4", "--codim", "4", capsys=capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert any("h1^4" in line for line in lines)


def test_chow_mult(capsys):
    code, out, _ = run_cli("chow", "mult", "--type", "F4", "--theta", "2,3,4",
                           "--lhs", "h1^4", "--rhs", "h1^4", capsys=capsys)
    assert code == 0
    assert out.strip() == "8*h1^8 + 6*h2^8"


def test_chow_giambelli_lift(capsys):
    code, out, _ = run_cli("chow", "giambelli-lift", "--type", "F4",
                           "--theta", "2,3,4", "--class", "h1^1",
                           capsys=capsys)
    assert code == 0
    assert out.strip() == "w1"


def test_chow_table_matches_fixture(capsys):
    from chowring.f4pipeline import _data_text
    code, out, _ = run_cli("chow", "table", "--type", "F4", "--theta", "2,3,4",
                           "--format", "json", capsys=capsys)
    assert code == 0
    assert json.loads(out) == json.loads(_data_text("pieri_table_p1.json"))
    code, out, _ = run_cli("chow", "table", "--type", "F4", "--theta", "1,2,3",
                           "--format", "json", capsys=capsys)
    assert json.loads(out) == json.loads(_data_text("pieri_table_p4.json"))


def test_chow_table_text_deterministic(capsys):
    code, out1, _ = run_cli("chow", "table", "--type", "F4",
                            "--theta", "1,2,3", capsys=capsys)
    code, out2, _ = run_cli("chow", "table", "--type", "F4",
                            "--theta", "1,2,3", capsys=capsys)
    assert out1 == out2
    assert "g1^1*g1^7" in out1


def test_corr_diagonal_and_roundtrip(tmp_path, capsys):
    code, out, _ = run_cli("corr", "diagonal", "--variety", "x4",
                           capsys=capsys)
    assert code == 0
    payload = json.loads(out)
    assert len(payload["terms"]) == 24
    path = tmp_path / "delta.json"
    path.write_text(out)
    code, out2, _ = run_cli("corr", "compose", str(path), str(path),
                            capsys=capsys)
    assert code == 0
    assert json.loads(out2) == payload
    code, out3, _ = run_cli("corr", "transpose", str(path), capsys=capsys)
    assert json.loads(out3)["terms"] == payload["terms"]


def test_verify_f4_single_eps(capsys):
    code, out, _ = run_cli("verify", "f4", "--eps", "1", capsys=capsys)
    assert code == 0
    assert "PASS overall" in out


def test_verify_writes_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli("verify", "f4", "--eps", "both", "--report",
                           str(path), capsys=capsys)
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["passed"] is True
    assert len(payload["checks"]) == 21


def test_cli_subprocess_deterministic():
    cmd = [sys.executable, "-m", "chowring.cli", "hasse", "--type", "F4",
           "--theta", "1,2,3", "--format", "dot"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0
    assert a.stdout == b.stdout
