import json

import pytest

pytest.importorskip("colorama")

from src import config
from src.harness import console
from src.harness.corpus import TableCheck
from src.main import build_parser, main


@pytest.fixture(autouse=True)
def restore_config(monkeypatch):
    for key in ("CENSUS_CAP", "TIME_BUDGET", "DEFAULT_SEED"):
        monkeypatch.setattr(config, key, getattr(config, key))


def test_no_command_prints_help(capsys):
    assert main([]) == 0
    assert "analyze" in capsys.readouterr().out


def test_analyze_json(capsys):
    assert main(["analyze", "S(4)", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["name"] == "S(4)"
    assert data["order"] == 24
    assert [v["bound_id"] for v in data["verdicts"]][-1] == "chieflen"


def test_verify_bounds_csv(capsys):
    assert main(["verify-bounds", "D(4)", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("bound_id,")
    assert len(lines) == 7


def test_verify_bounds_text(capsys):
    assert main(["verify-bounds", "S(5)"]) == 0
    out = capsys.readouterr().out
    assert "[EXEMPT]" in out
    assert "[PASS]" in out


def test_bad_expression_exit_code(capsys):
    assert main(["analyze", "Foo(3)", "--format", "json"]) == 2
    assert "error" in capsys.readouterr().err


def test_corpus_json(tmp_path, capsys):
    path = tmp_path / "small.txt"
    path.write_text("S(4)\nFoo(3)\n", encoding="utf-8")
    assert main(["corpus", str(path), "--format", "json"]) == 0
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert data["summary"]["errors"] == 1
    assert "Foo(3)" in captured.err
    assert data["entries"][1]["name"] == "Foo(3)"


def test_corpus_text(tmp_path, capsys):
    path = tmp_path / "small.txt"
    path.write_text("C(4)\n", encoding="utf-8")
    assert main(["corpus", str(path)]) == 0
    captured = capsys.readouterr()
    assert "SUMMARY" in captured.out
    assert "C(4)" in captured.err


def test_lemmas_json(capsys):
    assert main(["lemmas", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [r["passed"] for r in data["numerical"]] == [True, True]
    assert data["quotient"] == []


def test_lemmas_over_corpus(tmp_path, capsys):
    path = tmp_path / "small.txt"
    path.write_text("GL(2,4)\nS(5)\n", encoding="utf-8")
    assert main(["lemmas", "--corpus", str(path), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [q["name"] for q in data["quotient"]] == ["GL(2,4)"]
    assert data["quotient"][0]["holds"]


def test_atlas_command(capsys):
    assert main(["atlas", "GL24d15", "--format", "json"]) == 0
    assert capsys.readouterr().out.startswith("degree 15\n")


def test_flags_override_config():
    args = build_parser().parse_args(["analyze", "S(3)", "--census-cap", "50", "--seed", "9"])
    from src.main import apply_overrides
    apply_overrides(args)
    assert config.CENSUS_CAP == 50
    assert config.DEFAULT_SEED == 9


def test_table_printer_reports_mismatch(capsys):
    console.print_tables([TableCheck("GL24d15", (180, 15, 2, 12), (180, 15, 3, 12))])
    out = capsys.readouterr().out
    assert "[FAIL]" in out
    assert "expected (180, 15, 2, 12)" in out


def test_corpus_errors_do_not_fail_the_run(tmp_path, capsys):
    path = tmp_path / "small.txt"
    path.write_text("C(4)\nGL(2,6)\n", encoding="utf-8")
    assert main(["corpus", str(path), "--format", "csv"]) == 0
    captured = capsys.readouterr()
    assert "GL(2,6)" in captured.err
    assert "[ERROR]" in captured.err


def test_atlas_needs_a_name(capsys):
    assert main(["atlas", "--format", "json"]) == 2
    assert "name" in capsys.readouterr().err
