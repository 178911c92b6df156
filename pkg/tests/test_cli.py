import json

import pytest

from surgeul.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_csv_worked_example(capsys):
    code, out, _ = run(capsys, "table", "--torus-knot", "2,3",
                       "--p", "5", "--q", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "label,T,S,eul_unknot,eul_knot"
    s_column = [line.split(",")[2] for line in lines[1:]]
    assert s_column == ["0", "0", "1", "0", "1"]


def test_table_json_schema_and_roundtrip(capsys):
    code, out, _ = run(capsys, "table", "--knot", "-1,1",
                       "--p", "5", "--q", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["p"] == 5 and data["q"] == 2 and data["x"] == 2
    assert data["spin_label"] == 3
    assert data["lambda_prime_knot"] == "2"
    assert [r["S"] for r in data["rows"]] == ["0", "0", "1", "0", "1"]
    assert set(data["rows"][0]) == {"label", "T", "S", "eul_unknot", "eul_knot"}
    # emitted JSON round-trips byte-identically
    assert json.dumps(data, indent=2) + "\n" == out


def test_table_decimal_adds_column_keeps_exact(capsys):
    code, out, _ = run(capsys, "table", "--knot", "-1,1", "--p", "5", "--q", "2",
                       "--format", "json", "--decimal", "3")
    data = json.loads(out)
    row = data["rows"][2]
    assert row["eul_knot"] == "4/5"
    assert row["eul_knot_approx"] == "0.800"


def test_table_pretty(capsys):
    code, out, _ = run(capsys, "table", "--torus-knot", "2,5", "--p", "7", "--q", "1")
    assert code == 0
    assert "spin_label" in out and "eul_knot" in out


def test_lens_subcommand(capsys):
    code, out, _ = run(capsys, "lens", "--p", "2", "--q", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert sorted(data["d"]) == ["-1/4", "1/4"]


def test_verify_sweep_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--torus-knot", "2,3",
                       "--p", "5", "--q", "2", "--n-range", "-2,2")
    assert code == 0
    assert out.count("pass") == 5


def test_verify_small_slope(capsys):
    code, out, _ = run(capsys, "verify", "--knot", "3,-1", "--p", "1", "--q", "2")
    assert code == 0
    assert "small-slope" in out


def test_obstruct_pass_and_fail(capsys, tmp_path):
    from surgeul import SurgerySlope, eul_table, make_poly
    from surgeul.serialize import format_rational

    table = eul_table(make_poly([-1, 1]), SurgerySlope(5, 2))
    d = [-2 * v for v in table.eul_knot]
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"d": [format_rational(v) for v in d]}))
    code, out, _ = run(capsys, "obstruct", "--d-file", str(good), "--p", "5", "--q", "2")
    assert code == 0 and out.startswith("PASS")
    assert '"0": "1"' in out

    d[1] += 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"d": [format_rational(v) for v in d]}))
    code, out, _ = run(capsys, "obstruct", "--d-file", str(bad), "--p", "5", "--q", "2")
    assert code == 1 and out.startswith("FAIL")


def test_obstruct_wrong_length_is_input_error(capsys, tmp_path):
    f = tmp_path / "wrong_len.json"
    f.write_text(json.dumps({"d": ["0", "0", "0"]}))
    code, _, err = run(capsys, "obstruct", "--d-file", str(f), "--p", "5", "--q", "2")
    assert code == 2
    assert "error:" in err and err.count("\n") == 1


def test_input_errors_exit_two(capsys):
    assert run(capsys, "table", "--knot", "0,1", "--p", "5", "--q", "2")[0] == 2
    assert run(capsys, "table", "--knot", "-1,x", "--p", "5", "--q", "2")[0] == 2
    assert run(capsys, "table", "--knot", "-1,1", "--p", "4", "--q", "2")[0] == 2
    assert run(capsys, "table", "--torus-knot", "2,4", "--p", "5", "--q", "1")[0] == 2


def test_unchecked_flag_allows_experiments(capsys):
    code, _, _ = run(capsys, "table", "--knot", "0,1", "--unchecked",
                     "--p", "5", "--q", "2")
    assert code == 0


def test_selftest_deterministic_and_env_seed(capsys, monkeypatch):
    code1, out1, _ = run(capsys, "selftest", "--cases", "6")
    code2, out2, _ = run(capsys, "selftest", "--cases", "6")
    assert code1 == code2 == 0
    assert out1 == out2

    monkeypatch.setenv("SURGEUL_SEED", "12345")
    _, out3, _ = run(capsys, "selftest", "--cases", "6")
    assert "seed=12345" in out3
    assert out3 != out1


def test_selftest_fault_injection_fails(capsys):
    code, out, _ = run(capsys, "selftest", "--cases", "4", "--inject-fault")
    assert code == 1
    assert "FAIL" in out
