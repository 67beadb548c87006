"""
Tests for finite group models and the character table oracle
"""

import pytest

from tame_langlands.exceptions import BoundExceededError, InputError
from tame_langlands.plugins.arithmetic import root_of_unity
from tame_langlands.plugins.finite_groups import (
    FiniteGroupModel,
    abelian_group,
    cached_character_table,
    cyclic_group,
    dixon_character_table,
    dumps_table,
    load_table,
    loads_table,
    parse_cycles,
    resolve_group,
    save_table,
    splitting_prime,
    symmetric_group,
)
from tame_langlands.plugins.finite_groups.table_cache import cache_path


def s3() -> FiniteGroupModel:
    return FiniteGroupModel.from_permutations("S3", ["(0 1)", "(0 1 2)"], degree=3)


def test_cyclic_and_abelian_groups():
    C6 = cyclic_group(6)
    assert C6.order == 6
    assert C6.is_abelian()
    assert C6.exponent() == 6
    V4 = abelian_group([2, 2])
    assert V4.order == 4
    assert V4.exponent() == 2
    with pytest.raises(InputError):
        abelian_group([2, 0])


def test_permutation_group_classes():
    G = s3()
    assert G.order == 6
    assert not G.is_abelian()
    assert G.class_sizes == [1, 3, 2]
    assert sorted(G.element_order(i) for i in range(G.order)) == [1, 2, 2, 2, 3, 3]


def test_generate_respects_bound():
    with pytest.raises(BoundExceededError):
        FiniteGroupModel.from_permutations("S4", ["(0 1)", "(0 1 2 3)"], degree=4, bound=10)


def test_subgroup_embedding():
    G = s3()
    r = next(i for i in range(G.order) if G.element_order(i) == 3)
    A3 = G.subgroup([r], "A3")
    assert A3.order == 3
    assert A3.parent is G
    assert G.is_normal(A3.parent_indices)


def test_splitting_prime():
    ell = splitting_prime(s3())
    assert ell % 6 == 1


def test_s3_table():
    table = dixon_character_table(s3())
    assert table.degrees == [1, 1, 2]
    assert table.is_orthonormal()
    sign = table.rows[1]
    assert sign[1] == -1


def test_cyclic_table_values():
    table = dixon_character_table(cyclic_group(4))
    assert len(table) == 4
    assert table.is_orthonormal()
    values = {tuple(repr(v) for v in row) for row in table.rows}
    assert tuple(repr(v) for v in (1, 1, 1, 1)) in values
    assert any(root_of_unity(4) in row for row in table.rows)


def test_bound():
    with pytest.raises(BoundExceededError):
        dixon_character_table(cyclic_group(12), bound=10)
    with pytest.raises(BoundExceededError):
        dixon_character_table(cyclic_group(2), bound=0)


def test_cache_round_trip(cache_dir):
    G = s3()
    table = cached_character_table(G, cache_dir)
    assert cache_path("S3", cache_dir).exists()
    assert loads_table(dumps_table(table), G) == table
    assert load_table(G, cache_dir) == table


def test_corrupt_cache_is_rebuilt(cache_dir):
    G = s3()
    save_table(dixon_character_table(G), cache_dir)
    cache_path("S3", cache_dir).write_text("group S3 order 6 classes 3\nchi 0 garbage\n")
    assert load_table(G, cache_dir) is None
    assert cached_character_table(G, cache_dir).is_orthonormal()


def test_cache_header_must_match(cache_dir):
    save_table(dixon_character_table(cyclic_group(3)), cache_dir)
    with pytest.raises(InputError):
        loads_table(cache_path("C3", cache_dir).read_text(), cyclic_group(4))


def test_resolve_group():
    assert resolve_group("C2x3").order == 6
    assert resolve_group("S4").order == 24
    assert symmetric_group(4).order == 24
    assert resolve_group("GL2(F3)").order == 48
    with pytest.raises(InputError):
        resolve_group("X9")


@pytest.mark.parametrize("text", ["(0 1", "(0 1)(", "(0 0 1)", "(a b)", "0 1 2"])
def test_parse_cycles_rejects_malformed_input(text):
    with pytest.raises(InputError):
        parse_cycles(text)


def test_parse_cycles_degree():
    assert parse_cycles("(0,2)", degree=4).size == 4
    assert parse_cycles("()", degree=3).is_Identity
    with pytest.raises(InputError):
        parse_cycles("(0 5)", degree=4)
