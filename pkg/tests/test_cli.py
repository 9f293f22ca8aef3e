"""CLI integration: commands, formats and exit codes."""

import io

import pytest

from rogetsim.cli import main
from tests.conftest import FIXTURE_PATH, data_path


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_fixture(*argv):
    return run("--thesaurus", FIXTURE_PATH, *argv)


def test_sim(thesaurus):
    code, out, _ = run_fixture("sim", "feline", "lynx")
    assert code == 0
    assert "14" in out and "Intermediate" in out


def test_sim_tsv():
    code, out, _ = run("--thesaurus", FIXTURE_PATH, "--format", "tsv",
                       "sim", "feline", "lynx")
    assert code == 0
    assert out == "14\t1\tIntermediate\n"


def test_sim_self():
    code, out, _ = run("--thesaurus", FIXTURE_PATH, "--format", "tsv",
                       "sim", "monk", "monk")
    assert code == 0
    assert out.startswith("16\t")


def test_sim_not_found():
    code, out, err = run_fixture("sim", "feline", "zzzz")
    assert code == 1
    assert "not found: zzzz" in err


def test_distance():
    code, out, _ = run("--thesaurus", FIXTURE_PATH, "--format", "tsv",
                       "distance", "feline", "lynx")
    assert code == 0
    assert out == "2\t1\tIntermediate\n"


def test_missing_thesaurus_path():
    code, _, err = run("sim", "feline", "lynx")
    assert code == 2
    assert "thesaurus" in err


def test_thesaurus_env_fallback(monkeypatch):
    monkeypatch.setenv("ROGET_THESAURUS", FIXTURE_PATH)
    code, out, _ = run("--format", "tsv", "sim", "feline", "lynx")
    assert code == 0
    assert out.startswith("14\t")


def test_unreadable_thesaurus():
    code, _, err = run("--thesaurus", "/nonexistent/th.rt", "sim", "a", "b")
    assert code == 2
    assert "/nonexistent/th.rt" in err


def test_paths_ode_poem():
    code, out, _ = run_fixture("paths", "ode", "poem")
    assert code == 0
    assert "ode N. to poem N., length = 2, 2 path(s) of this length" in out


def test_paths_feline_lynx():
    code, out, _ = run_fixture("paths", "feline", "lynx")
    assert code == 0
    assert "feline → cat ← lynx" in out


def test_paths_same_word():
    code, out, _ = run_fixture("paths", "lynx", "lynx")
    assert code == 0
    assert "length = 0" in out


def test_validate():
    code, out, _ = run_fixture("validate")
    assert code == 0
    assert "Heads: 25" in out
    assert "VIOLATION" not in out


def test_solve_fixture_question():
    code, out, _ = run_fixture("solve", data_path("questions_fixture.tsv"))
    assert code == 0
    assert "Roget thinks that ode means poem: CORRECT" in out
    assert "Percent: 100.00" in out


def test_solve_mixed_file():
    code, out, _ = run_fixture("solve", data_path("questions_mixed.tsv"))
    assert code == 0
    assert "Questions not found: 1" in out
    assert "Percent: 62.50" in out
    assert "Questions with ties: 1" in out


def test_solve_nouns_only():
    # zzzz (problem unindexed) and the feline question (choice "inspired"
    # has only an adjective reading) are filtered out, leaving 2 questions
    # worth 1 + 1/2 credit.
    code, out, _ = run_fixture("solve", "--nouns-only",
                               data_path("questions_mixed.tsv"))
    assert code == 0
    assert "Percent: 75.00" in out
    assert "Questions not found: 0" in out


def test_solve_malformed_file(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("ode\tpoem\t1\n")
    code, _, err = run_fixture("solve", str(bad))
    assert code == 2
    assert "line 1" in err


def test_solve_missing_file():
    code, _, err = run_fixture("solve", "/nonexistent/q.tsv")
    assert code == 2
    assert "/nonexistent/q.tsv" in err


def test_bench_linear_fixture():
    code, out, _ = run_fixture("bench", data_path("pairs_fixture.tsv"))
    assert code == 0
    assert out.splitlines()[-1].startswith("Correlation\t1.000\t1.000")


def test_bench_policy_zero(tmp_path):
    pairs = tmp_path / "p.tsv"
    pairs.write_text("scale\t0\t4\nfeline\tlynx\t3.5\nmonk\toracle\t3.0\n"
                     "zzzz\tfeline\t0.5\n")
    code, out, err = run_fixture("bench", "--policy", "zero", str(pairs))
    assert code == 0
    assert "NOT-FOUND" not in out
    code, out, err = run_fixture("bench", "--policy", "skip", str(pairs))
    assert code == 0
    assert "NOT-FOUND" in out
    assert "pairs skipped as not found: 1" in err


def test_bench_constant_scores_undefined(tmp_path):
    pairs = tmp_path / "p.tsv"
    pairs.write_text("scale\t0\t4\nmonk\toracle\t2.0\nglass\tjewel\t2.0\n")
    code, _, err = run_fixture("bench", str(pairs))
    assert code == 1
    assert "correlation undefined" in err


def test_import_excerpt(tmp_path):
    code, out, err = run("import", data_path("gutenberg_excerpt.txt"))
    assert code == 0
    assert out.startswith("C 1 ")
    assert "Heads converted: 5" in err
    # output re-parses and is queryable
    converted = tmp_path / "converted.rt"
    converted.write_text(out)
    code, out2, _ = run("--thesaurus", str(converted), "--format", "tsv",
                        "sim", "existence", "subsistence")
    assert code == 0
    assert out2.startswith("16\t")


def test_import_missing_file():
    code, _, err = run("import", "/nonexistent/roget.txt")
    assert code == 2
    assert "/nonexistent/roget.txt" in err


def test_import_empty_file(tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code, _, err = run("import", str(empty))
    assert code == 2


def test_outputs_deterministic():
    first = run_fixture("solve", data_path("questions_mixed.tsv"))
    second = run_fixture("solve", data_path("questions_mixed.tsv"))
    assert first == second
