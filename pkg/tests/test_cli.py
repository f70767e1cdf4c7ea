import json

import pytest

from spindle import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dynkin_text_golden(capsys):
    code, out, _ = run(
        ["compute", "dynkin", "--type", "G", "--rank", "2",
         "--weight", "1,0"], capsys)
    assert code == 0
    assert out == "1 + q + q^2 + q^3 + q^4 + q^5 + q^6\n"


def test_lusztig_json_golden(capsys):
    code, out, _ = run(
        ["compute", "lusztig", "--type", "A", "--rank", "1",
         "--weight", "0", "--mu", "0", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out) == {"coefficients": ["1"], "variable": "q"}


def test_f_lambda_text_and_csv(capsys):
    argv = ["compute", "f-lambda", "--type", "C", "--rank", "3",
            "--weight", "0,1,0"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == ("1 + q + 2*q^2 + 2*q^3 + 3*q^4 + 2*q^5 + 3*q^6 "
                   "+ q^7 + q^8\n")
    code, out, _ = run(argv + ["--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "exponent,coefficient"
    assert lines[1] == "0,1"
    assert lines[-1] == "8,1"


def test_root_system_table(capsys):
    code, out, _ = run(
        ["compute", "root-system", "--type", "G", "--rank", "2",
         "--format", "json"], capsys)
    assert code == 0
    rows = {r["property"]: r["value"] for r in json.loads(out)}
    assert rows["weyl_order"] == 12
    assert rows["degrees"] == "2 6"


def test_character_rows(capsys):
    code, out, _ = run(
        ["compute", "character", "--type", "A", "--rank", "2",
         "--weight", "1,1", "--format", "csv"], capsys)
    assert code == 0
    assert "(0,0),2" in out
    assert "(1,1),1" in out


def test_end_alg_a_table(capsys):
    code, out, _ = run(
        ["compute", "end-alg-a", "--n", "2", "--kind", "S2",
         "--format", "json"], capsys)
    assert code == 0
    rows = {r["property"]: r["value"] for r in json.loads(out)}
    assert rows["dimension"] == 6
    assert rows["commutant_dimension"] == 6
    assert rows["socle_dimension"] == 1
    assert rows["commutative"] is True


def test_poincare_series_text(capsys):
    code, out, _ = run(
        ["compute", "poincare-cg", "--type", "A", "--rank", "1",
         "--weight", "2"], capsys)
    assert code == 0
    assert out == "(1 + q + q^2) / (1 - q^2)\n"


def test_truncsym(capsys):
    code, out, _ = run(
        ["compute", "truncsym", "--n", "2", "--m", "2"], capsys)
    assert code == 0
    assert out == "(1 + q + q^2)(1 + q^2)\n"


def test_exit_code_usage_error(capsys):
    code, _, err = run(
        ["compute", "dynkin", "--type", "Z", "--rank", "2",
         "--weight", "1,0"], capsys)
    assert code == 2
    assert "error:" in err
    code, _, err = run(
        ["compute", "dynkin", "--type", "A", "--rank", "2",
         "--weight", "1"], capsys)
    assert code == 2
    code, _, err = run(
        ["compute", "truncsym", "--n", "2"], capsys)
    assert code == 2


def test_exit_code_budget(capsys):
    code, _, err = run(
        ["compute", "character", "--type", "E", "--rank", "8",
         "--weight", "1,0,0,0,0,0,0,0", "--dim-budget", "100"], capsys)
    assert code == 3
    assert "budget" in err


def test_output_is_deterministic(capsys):
    argv = ["compute", "jump", "--type", "C", "--rank", "3",
            "--weight", "0,1,0", "--format", "json"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second


def test_cache_round_trip(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("SPINDLE_CACHE_DIR", raising=False)
    argv = ["--cache-dir", str(tmp_path), "compute", "dynkin", "--type",
            "A", "--rank", "3", "--weight", "0,1,0", "--format", "json"]
    code, cold, _ = run(argv, capsys)
    assert code == 0
    entries = list(tmp_path.iterdir())
    assert len(entries) == 1
    code, warm, _ = run(argv, capsys)
    assert code == 0
    assert warm == cold


def test_cache_corruption_recovery(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("SPINDLE_CACHE_DIR", raising=False)
    argv = ["--cache-dir", str(tmp_path), "compute", "dynkin", "--type",
            "A", "--rank", "3", "--weight", "0,1,0", "--format", "json"]
    _, cold, _ = run(argv, capsys)
    entry = next(tmp_path.iterdir())
    entry.write_text("garbage")
    code, again, err = run(argv, capsys)
    assert code == 0
    assert again == cold
    assert "corrupt cache entry" in err


def test_verify_suite_output(capsys):
    code, out, _ = run(["verify", "kostant-t0"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert all(l.startswith("PASS [kostant-t0]") for l in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_respects_options(capsys):
    code, out, _ = run(["verify", "hermite", "--max-rank", "3"], capsys)
    assert code == 0
    assert "checks passed" in out


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit):
        cli.main(["verify", "nonsense"])
    capsys.readouterr()
