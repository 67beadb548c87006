"""
Tests for the tame-langlands command line
"""

import json

import pytest
from click.testing import CliRunner

from tame_langlands.commands import EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_OK, cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), catch_exceptions=False)


def test_orbits(runner):
    result = invoke(runner, "orbits", "p=3", "m=2")
    assert result.exit_code == EXIT_OK
    lines = result.stdout.splitlines()
    assert lines[0].startswith("# field\tm\torbit")
    assert len(lines) == 4
    assert len(invoke(runner, "orbits", "p=2", "m=2").stdout.splitlines()) == 2


def test_orbits_rejects_bad_fields(runner):
    assert invoke(runner, "orbits", "p=3", "e=3").exit_code == EXIT_INPUT
    assert invoke(runner, "orbits", "p=3", "m=two").exit_code == EXIT_INPUT


def test_signs(runner):
    ok = invoke(runner, "signs", "module p=3 C=4 mu=1 varpi=1 varpi_alpha=1 summands=a:1")
    assert ok.exit_code == EXIT_OK
    assert ok.stdout.splitlines()[1].endswith("\tpass")
    known = invoke(runner, "signs", "module p=3 C=4 mu=2 varpi=1 varpi_alpha=3 summands=a:1")
    assert known.exit_code == EXIT_COUNTEREXAMPLE
    assert known.stdout.splitlines()[1].endswith("\tfail:known")


def test_signs_sweep_exits_ok_on_known_exceptions(runner, tmp_path):
    config = tmp_path / "project.json"
    config.write_text(json.dumps({"sweep": {"primes": [3], "max_operator_order": 4, "max_summands": 2}}))
    result = invoke(runner, "--config", str(config), "signs", "--sweep")
    assert result.exit_code == EXIT_OK
    rows = result.stdout.splitlines()[1:]
    assert rows
    assert all(row.endswith("\tyes") for row in rows)


def test_glauberman(runner):
    result = invoke(runner, "glauberman", "action G=5x5 A=4 aut=1,0;0,2")
    assert result.exit_code == EXIT_OK
    assert len(result.stdout.splitlines()) == 6


def test_glauberman_non_cyclic_operators(runner):
    result = invoke(runner, "glauberman", "perms G=(0,1,2);(3,4,5) A=(1,2);(4,5)")
    assert result.exit_code == EXIT_OK
    rows = result.stdout.splitlines()[1:]
    assert len(rows) == 1
    assert rows[0].endswith("\tn/a\tn/a")
    assert invoke(runner, "glauberman", "perms G=(0,1,2) A=(0,3)").exit_code == EXIT_INPUT


def test_mu_text(runner):
    result = invoke(runner, "mu", "tame-p3-n2", "--format", "text")
    assert result.exit_code == EXIT_OK
    assert "mu∘N = chi2" in result.stdout
    assert "checks=pass" in result.stdout


def test_mu_corpus(runner):
    result = invoke(runner, "mu", "--corpus")
    assert result.exit_code == EXIT_OK
    assert len(result.stdout.splitlines()) == 7


def test_mu_errors(runner):
    unknown = invoke(runner, "mu", "aniso-p7")
    assert unknown.exit_code == EXIT_INPUT
    assert "neither a datum literal" in unknown.output
    assert invoke(runner, "mu").exit_code == EXIT_INPUT


def test_mu_input_file(runner, tmp_path):
    path = tmp_path / "data.txt"
    path.write_text("# shipped names\ntame-p3-n2\ntame-p5-n3\n")
    result = invoke(runner, "mu", "--input", str(path))
    assert result.exit_code == EXIT_OK
    assert len(result.stdout.splitlines()) == 3


def test_table(runner, cache_dir):
    result = invoke(runner, "table", "S3", "--cache-dir", str(cache_dir))
    assert result.exit_code == EXIT_OK
    assert len(result.stdout.splitlines()) == 4
    assert (cache_dir / "S3.tbl").exists()
    gl = invoke(runner, "table", "GL2(F2)", "--cache-dir", str(cache_dir))
    assert len(gl.stdout.splitlines()) == 4
    assert invoke(runner, "table", "X9").exit_code == EXIT_INPUT


@pytest.mark.parametrize("args", [["--format", "xml"], ["--jobs", "0"], ["--bound-dim", "-1"]])
def test_bad_options(runner, args):
    assert invoke(runner, "glauberman", "action G=7 A=3 aut=2", *args).exit_code == EXIT_INPUT


def test_output_file(runner, tmp_path):
    out = tmp_path / "mu.tsv"
    result = invoke(runner, "mu", "tame-p3-n2", "--output", str(out))
    assert result.exit_code == EXIT_OK
    assert result.stdout == ""
    assert out.read_text().startswith("# datum\t")


def test_config_file_sets_format(runner, tmp_path):
    config = tmp_path / "project.json"
    config.write_text(json.dumps({"output_format": "text"}))
    result = invoke(runner, "--config", str(config), "mu", "tame-p3-n2")
    assert result.stdout.startswith("tame-p3-n2: ")


@pytest.mark.slow
def test_selftest_quick(runner, cache_dir):
    result = invoke(runner, "selftest", "--quick", "--cache-dir", str(cache_dir))
    assert result.exit_code == EXIT_OK
    assert result.stdout.splitlines()[0] == "🔍 TAME LANGLANDS SELF-TEST (quick)"
    assert "🎉 ALL CHECKS PASSED" in result.stdout
