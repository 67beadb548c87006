"""
Tests for the text literal parsers
"""

import pytest

from tame_langlands.exceptions import InputError
from tame_langlands.plugins.correspondence import datum_by_name
from tame_langlands.plugins.glauberman import OperatorAction
from tame_langlands.plugins.symplectic import FormType
from tame_langlands.plugins.tame_fields import FieldSkeleton, make_extension
from tame_langlands.utils.literals import (
    parse_action,
    parse_any,
    parse_datum,
    parse_field,
    parse_module,
    parse_space,
    read_literals,
    split_tokens,
)


def test_parse_field():
    E = parse_field("ext p=3 e=2")
    assert E == make_extension(FieldSkeleton(3), 2, 1, 0)
    assert parse_field(E.literal()) == E


@pytest.mark.parametrize(
    "text",
    [
        "ext p=3 colour=red",
        "ext p=3 p=5",
        "ext p=3 e",
        "ext p=three",
        "field p=3",
    ],
    ids=["unknown-key", "duplicate", "no-equals", "not-int", "wrong-kind"],
)
def test_parse_field_errors(text):
    with pytest.raises(InputError):
        parse_field(text)


def test_split_tokens_repeated():
    fields = split_tokens("space p=3 act=1 act=2", "space", repeated=("act",))
    assert fields == {"act": ["1", "2"], "p": "3"}


def test_parse_module():
    M = parse_module("module p=3 C=4x2 mu=1.0 varpi=0.1 summands=a:1.0")
    assert M.group.orders == (4, 2)
    assert M.mu == (1, 0)
    assert [s.form for s in M.summands] == [FormType.ANISOTROPIC]
    assert parse_module(M.literal()) == M
    with pytest.raises(InputError):
        parse_module("module p=3 C=4 summands=x:1")
    with pytest.raises(InputError):
        parse_module("module p=3 C=4x2 mu=1")


def test_parse_space_dimension_must_match():
    X = parse_space("space p=3 C=4 dim=2 gram=0,1;2,0 act=0,2;1,0")
    assert len(X.gram) == 2
    with pytest.raises(InputError):
        parse_space("space p=3 C=4 dim=3 gram=0,1;2,0 act=0,2;1,0")


def test_datum_literal_round_trip():
    datum = datum_by_name("aniso-p3-e2")
    assert parse_datum(datum.literal()).literal() == datum.literal()
    with pytest.raises(InputError):
        parse_datum("datum p=3 e=2 r=1 m=2")


def test_parse_action():
    action = parse_action("action G=5x5 A=4 aut=1,0;0,2")
    assert isinstance(action, OperatorAction)
    assert action.fixed_group().order == 5
    with pytest.raises(InputError):
        parse_action("action G=5x5 A=4 aut=1,0")


def test_parse_any_dispatches_on_kind():
    assert parse_any("ext p=5 e=2").e == 2
    with pytest.raises(InputError):
        parse_any("matrix 1,2;3,4")
    with pytest.raises(InputError):
        parse_any("   ")


def test_read_literals_skips_comments(tmp_path):
    path = tmp_path / "fields.txt"
    path.write_text("# fields\next p=3\n\n  ext p=5 e=2\n")
    assert list(read_literals(path)) == [(2, "ext p=3"), (4, "ext p=5 e=2")]
    with pytest.raises(InputError):
        list(read_literals(tmp_path / "missing.txt"))


def test_parse_perms():
    action = parse_any("perms G=(0,1,2);(3,4,5) A=(1,2);(4,5)")
    assert action.G.order == 9
    assert action.A.orders == (2, 2)
    assert action.fixed_group().order == 1
    cyclic = parse_action("perms n=7 G=(0,1,2,3,4,5,6) A=(1,3,2,6,4,5)")
    assert cyclic.A.orders == (6,)


@pytest.mark.parametrize(
    "text",
    [
        "perms G=(0,1 A=(1,2)",
        "perms G=(0,0,1) A=(1,2)",
        "perms G=(a,b) A=(1,2)",
        "perms G=(0,1,2)",
        "perms n=3 G=(0,1,2) A=(3,4)",
        # does not normalize G
        "perms G=(0,1,2) A=(0,3)",
        # generators of orders 2 and 4 spanning a group of order 4
        "perms G=(0,1,2,3,4) A=(1,4)(2,3);(1,2,4,3)",
        "perms G=(0,1,2) A=(1,2);(0,1)",
    ],
)
def test_parse_perms_errors(text):
    with pytest.raises(InputError):
        parse_any(text)
