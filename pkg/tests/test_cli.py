import json

import pytest

from jordeform.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_hopf_h6(capsys):
    code, out, _ = run(capsys, "verify", "--order", "4", "--suites", "hopf", "--algebra", "h6")
    assert code == 0
    assert out.strip().endswith("45/45 identities passed")
    assert "PASS  hopf:h6  morphism[A-,B-]" in out


def test_verify_order_zero(capsys):
    code, out, _ = run(capsys, "verify", "--order", "0", "--dim", "8", "--fb-degree", "6")
    assert code == 0 and "FAIL" not in out


def test_verify_rmatrix_json(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "rmatrix", "--algebra", "schrodinger",
                       "--format", "json")
    assert code == 0
    body = json.loads(out)
    ids = [r["identity"] for r in body["records"]]
    assert "qybe" in ids and "triangularity" in ids and "intertwining[C]" in ids
    for r in body["records"]:
        assert set(r) == {"suite", "identity", "anchor", "status", "residual_terms", "millis"}


def test_json_is_deterministic(capsys, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--suites", "classical,iso", "--format", "json", "--no-timing"]
    assert main(args + ["--output", str(out1)]) == 0
    assert main(args + ["--output", str(out2), "--jobs", "2"]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--suites", "nope")[0] == 2
    assert run(capsys, "verify", "--order", "-1")[0] == 2
    assert run(capsys, "verify", "--algebra", "sl2")[0] == 2
    assert run(capsys, "verify", "--suites", "fock", "--algebra", "schrodinger")[0] == 2
    code, _, err = run(capsys, "matrices", "--gen", "H")
    assert code == 2 and "unknown generator" in err
    assert run(capsys)[0] == 2


def test_env_default_order(capsys, monkeypatch):
    monkeypatch.setenv("JORDEFORM_DEFAULT_ORDER", "1")
    code, out, _ = run(capsys, "tables", "--algebra", "h6")
    assert code == 0 and "(order 1)" in out
    monkeypatch.setenv("JORDEFORM_DEFAULT_ORDER", "many")
    assert run(capsys, "tables")[0] == 2


def test_failure_exit_code(capsys, monkeypatch):
    import jordeform.cli as cli
    from jordeform.report import VerificationReport

    def broken(*args, **kw):
        rep = VerificationReport("broken")
        rep.record("always-false", "x", False, "residual")
        return rep

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--suites", "hopf", "--algebra", "h6", "-v")
    assert code == 1 and "FAIL" in out and "residual: residual" in out


def test_matrices_b_plus(capsys):
    code, out, _ = run(capsys, "matrices", "--gen", "B+", "--dim", "5", "--basis", "normalized",
                       "--format", "json")
    assert code == 0
    grid = json.loads(out)["entries"]
    assert grid[3][0][1] == {"q_num": -1, "q_den": 1, "radicand": 6}
    assert grid[4][0][2] == {"q_num": 7, "q_den": 6, "radicand": 6}
    assert grid[2][0][0] == {"q_num": 1, "q_den": 1, "radicand": 2}


def test_matrices_m_is_identity(capsys):
    code, out, _ = run(capsys, "matrices", "--gen", "M", "--dim", "4", "--basis", "unnormalized",
                       "--format", "json")
    grid = json.loads(out)["entries"]
    for i in range(4):
        for j in range(4):
            want = 1 if i == j else 0
            assert grid[i][j][0] == {"num": want, "den": 1}
            assert all(e["num"] == 0 for e in grid[i][j][1:])


def test_matrices_a_minus_rational(capsys):
    code, out, _ = run(capsys, "matrices", "--gen", "A-", "--dim", "5", "--basis", "unnormalized",
                       "--format", "json")
    body = json.loads(out)
    assert code == 0 and body["entries"][1][1][1] == {"num": 1, "den": 1}
    assert all(set(e) == {"num", "den"} for row in body["entries"] for cell in row for e in cell)


def test_matrices_fb_text(capsys):
    code, out, _ = run(capsys, "matrices", "--gen", "A-", "--algebra", "h6-dual",
                       "--realization", "fb", "--dim", "4", "--basis", "unnormalized")
    assert code == 0 and "<0|A-|1> = 1" in out and "<2|A-|3> = 3" in out


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--algebra", "h6")
    assert code == 0 and "[A-,B-] = -z*A-^2" in out
    code, out, _ = run(capsys, "tables", "--algebra", "schrodinger")
    assert "[K,C] = -(z/2)*K^2" in out
    code, out, _ = run(capsys, "tables", "--algebra", "all", "--format", "json")
    body = json.loads(out)
    assert [t["algebra"] for t in body] == ["h6", "h6-dual", "schrodinger"]


def test_tables_at_zero_are_classical(capsys):
    from jordeform.liebialg import schrodinger_algebra

    code, out, _ = run(capsys, "tables", "--algebra", "schrodinger", "--order", "0", "--format", "json")
    body = json.loads(out)[0]
    g = schrodinger_algebra()
    for e in body["commutators"]:
        x, y = e["lhs"][1:-1].split(",")
        want = {h: c for h, c in g.bracket_gen(x, y).items()}
        got = {t["monomial"]: t["coefficient"][0] for t in e["terms"]}
        assert {h: [c.numerator, c.denominator] for h, c in want.items()} == got
