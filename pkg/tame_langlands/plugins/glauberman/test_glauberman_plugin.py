"""
Tests for coprime actions, the Glauberman correspondence and Heisenberg signs
"""

import pytest
from sympy.combinatorics import Permutation

from tame_langlands.exceptions import InputError, ValidationError
from tame_langlands.plugins.finite_groups import FiniteGroupModel, abelian_group, cyclic_group
from tame_langlands.plugins.glauberman import (
    OperatorAction,
    calibration_check,
    calibration_signs,
    center_compatibility,
    composite_is_bijection,
    composite_map,
    generator_independence_check,
    glauberman_map,
    heisenberg_action,
    heisenberg_group,
    heisenberg_signs,
    permutation_action,
    semidirect_product,
    symplectic_basis,
    transitivity_check,
    weil_sign,
    weil_signs,
)
from tame_langlands.plugins.symplectic import (
    BarCharacter,
    ConcreteSymplecticSpace,
    OperatorGroup,
    anisotropic,
    hyperbolic,
    restrict,
    synthesize,
)


def multiplication_action(n: int, a: int, k: int) -> OperatorAction:
    """C_a acting on C_n by x -> k x"""
    G = cyclic_group(n)
    perm = tuple(G.index((k * x) % n) for x in G.elements)
    return OperatorAction(OperatorGroup.cyclic(a), G, (perm,))


def diagonal_action() -> OperatorAction:
    """C4 acting on C5 x C5 by (x, y) -> (x, 2y)"""
    G = abelian_group([5, 5])
    perm = tuple(G.index((x, (2 * y) % 5)) for x, y in G.elements)
    return OperatorAction(OperatorGroup.cyclic(4), G, (perm,))


def test_action_validation():
    with pytest.raises(InputError):
        # x -> -x on C4 has order 2, not prime to 4
        multiplication_action(4, 2, 3)
    G = cyclic_group(4)
    with pytest.raises(ValidationError):
        OperatorAction(OperatorGroup.cyclic(2), G, ((0, 2, 1, 3),))
    with pytest.raises(InputError):
        OperatorAction(OperatorGroup.cyclic(2), G, ())


def test_fixed_group_and_semidirect_product():
    action = diagonal_action()
    assert action.fixed_group().order == 5
    assert semidirect_product(action).order == 100


def test_free_action_fixes_only_the_trivial_character():
    gmap = glauberman_map(multiplication_action(7, 3, 2))
    assert len(gmap.records) == 1
    assert gmap.records[0].epsilon == 1
    assert gmap.is_bijection


def test_diagonal_action_is_a_bijection():
    gmap = glauberman_map(diagonal_action())
    assert len(gmap.records) == 5
    assert gmap.is_bijection
    assert all(r.epsilon in (1, -1) for r in gmap.records)


def test_generator_choice():
    action = multiplication_action(11, 5, 3)
    assert generator_independence_check(action)
    with pytest.raises(InputError):
        glauberman_map(action, generator=5)


def test_heisenberg_group_order():
    space = synthesize(anisotropic(BarCharacter(OperatorGroup.cyclic(4), 3, (1,))))
    assert heisenberg_group(space).order == 27


@pytest.mark.slow
def test_heisenberg_signs_match_t_invariant():
    space = synthesize(anisotropic(BarCharacter(OperatorGroup.cyclic(4), 3, (1,))))
    gmap = glauberman_map(heisenberg_action(space))
    assert gmap.is_bijection
    assert center_compatibility(gmap)
    assert calibration_check(space)


@pytest.mark.slow
def test_signs_depend_on_the_operator_group():
    # same G and same fixed points, A = C4 against its subgroup of order 2 acting by -1
    M = anisotropic(BarCharacter(OperatorGroup.cyclic(4), 3, (1,)))
    assert set(heisenberg_signs(synthesize(M))) == {1}
    assert set(heisenberg_signs(synthesize(restrict(M, (2,))))) == {-1}


@pytest.mark.slow
def test_transitivity_through_a_subgroup():
    assert transitivity_check(multiplication_action(7, 6, 3), [(2,)])


# weil model


def plane_space(p, group, *actions):
    """Two hyperbolic planes with the given diagonal actions"""
    gram = ((0, 1, 0, 0), (p - 1, 0, 0, 0), (0, 0, 0, 1), (0, 0, p - 1, 0))
    diagonal = tuple(
        tuple(tuple(a[i] if i == j else 0 for j in range(4)) for i in range(4)) for a in actions
    )
    return ConcreteSymplecticSpace(p, group, gram, diagonal)


def test_symplectic_basis():
    space = plane_space(3, OperatorGroup.cyclic(2), (2, 2, 1, 1))
    basis = symplectic_basis(space)
    columns = [tuple(row[j] for row in basis) for j in range(4)]
    es, fs = columns[:2], columns[2:]
    for i in range(2):
        for j in range(2):
            assert space.form(es[i], fs[j]) == (1 if i == j else 0)
            assert space.form(es[i], es[j]) == 0
            assert space.form(fs[i], fs[j]) == 0


def test_weil_signs_on_small_heisenberg_groups():
    M = anisotropic(BarCharacter(OperatorGroup.cyclic(4), 3, (1,)))
    assert weil_signs(synthesize(M)) == [1, 1]
    assert weil_signs(synthesize(restrict(M, (2,)))) == [-1, -1]


@pytest.mark.slow
def test_weil_model_agrees_with_the_character_table():
    M = anisotropic(BarCharacter(OperatorGroup.cyclic(4), 3, (1,)))
    for space in (synthesize(M), synthesize(restrict(M, (2,)))):
        assert sorted(weil_signs(space)) == sorted(heisenberg_signs(space))


@pytest.mark.parametrize(
    "p, n, form",
    [
        (5, 4, hyperbolic),
        (5, 3, anisotropic),
        (7, 3, hyperbolic),
        (7, 4, anisotropic),
        (5, 13, anisotropic),
        (7, 5, anisotropic),
        (3, 7, anisotropic),
    ],
)
def test_weil_calibration(p, n, form):
    space = synthesize(form(BarCharacter(OperatorGroup.cyclic(n), p, (1,))))
    signs, method = calibration_signs(space, bound=1)
    assert method == "weil"
    assert len(signs) == p - 1
    assert calibration_check(space, bound=1)


def test_calibration_prefers_the_character_table_within_bounds():
    space = synthesize(anisotropic(BarCharacter(OperatorGroup.cyclic(4), 3, (1,))))
    assert calibration_signs(space, bound=2000)[1] == "oracle"


def test_weil_sign_rejections():
    space = plane_space(3, OperatorGroup.cyclic(2), (2, 2, 1, 1))
    with pytest.raises(InputError):
        # fixes the second plane
        weil_sign(space)
    free = synthesize(anisotropic(BarCharacter(OperatorGroup.cyclic(4), 3, (1,))))
    with pytest.raises(InputError):
        weil_sign(free, k=3)
    with pytest.raises(InputError):
        weil_sign(plane_space(3, OperatorGroup((2, 2)), (2, 2, 1, 1), (1, 1, 2, 2)))


# permutation actions


def c7() -> FiniteGroupModel:
    return FiniteGroupModel.from_permutations("C7", ["(0,1,2,3,4,5,6)"])


def test_permutation_action():
    action = permutation_action(c7(), [Permutation([[1, 3, 2, 6, 4, 5]], size=7)])
    assert action.A.orders == (6,)
    assert action.fixed_group().order == 1
    gmap = glauberman_map(action)
    assert gmap.is_bijection
    assert [r.epsilon for r in gmap.records] == [1]


def test_permutation_action_rejections():
    with pytest.raises(InputError):
        # x -> 3x and x -> 2x do not give independent cyclic factors
        permutation_action(
            c7(), [Permutation([[1, 3, 2, 6, 4, 5]], size=7), Permutation([[1, 2, 4], [3, 6, 5]], size=7)]
        )
    with pytest.raises(InputError):
        # does not normalize C7
        permutation_action(c7(), [Permutation([[0, 1]], size=7)])
    S3 = FiniteGroupModel.from_permutations("S3", ["(0,1,2)", "(0,1)"])
    with pytest.raises(InputError):
        permutation_action(S3, [Permutation([[0, 1]], size=3), Permutation([[1, 2]], size=3)])


def test_composite_map_for_a_non_cyclic_operator_group():
    generators = [Permutation([[1, 2, 4], [3, 6, 5]], size=7), Permutation([[1, 6], [2, 5], [3, 4]], size=7)]
    action = permutation_action(c7(), generators)
    assert action.A.orders == (3, 2)
    assert list(composite_map(action).values()) == [0]
    assert composite_is_bijection(action)
    assert transitivity_check(action, [(1, 0)])


@pytest.mark.slow
def test_transitivity_on_an_extraspecial_group_of_order_243():
    # C2 x C2 acting by -1 on one hyperbolic plane each
    space = plane_space(3, OperatorGroup((2, 2)), (2, 2, 1, 1), (1, 1, 2, 2))
    action = heisenberg_action(space)
    assert action.fixed_group().order == 3
    mapping = composite_map(action)
    assert len(mapping) == 3
    assert composite_is_bijection(action, mapping)
    assert transitivity_check(action, [(1, 1)])
    assert transitivity_check(action, [(1, 0)])
