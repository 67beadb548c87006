"""
Tests for the (is_valid, errors) validators
"""

from tame_langlands.utils.validators import validate_job_options, validate_literal, validate_literal_file


def test_validate_literal():
    assert validate_literal("ext p=3 e=2") == (True, [])
    ok, errors = validate_literal("")
    assert not ok and errors == ["Literal cannot be empty"]
    ok, errors = validate_literal("ext p=3", kinds=("module",))
    assert not ok and "Unexpected literal kind" in errors[0]
    ok, errors = validate_literal("ext p=3 e=3")
    assert not ok and len(errors) == 1


def test_validate_literal_file(tmp_path):
    path = tmp_path / "mixed.txt"
    path.write_text("ext p=3\n# comment\next p=3 colour=red\next p=5 e=5\n")
    ok, errors = validate_literal_file(path)
    assert not ok
    assert [e.split(":")[0] for e in errors] == ["line 3", "line 4"]
    ok, errors = validate_literal_file(tmp_path / "missing.txt")
    assert not ok and errors[0].startswith("cannot read")


def test_validate_job_options():
    assert validate_job_options() == (True, [])
    assert validate_job_options("text", 4, 100, 6) == (True, [])
    ok, errors = validate_job_options("xml", 0)
    assert not ok
    assert errors == ["Unknown output format 'xml'", "--jobs must be positive"]
