"""
Tests for tame characters and Delta-regular orbits
"""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tame_langlands.exceptions import FieldMismatchError, InputError, NotRegularError
from tame_langlands.plugins.characters import (
    TameCharacter,
    admissible_pair_check,
    compose_with_norm,
    enumerate_characters,
    evaluate,
    in_x0_subgroup,
    is_regular,
    orbit,
    regular_orbits,
    require_regular,
    x0_subgroup,
)
from tame_langlands.plugins.arithmetic import root_of_unity
from tame_langlands.plugins.tame_fields import (
    FieldSkeleton,
    TameTorusElem,
    make_extension,
    relative_galois_group,
    trivial_extension,
    unramified_lift,
)

F3, F5 = FieldSkeleton(3), FieldSkeleton(5)
E9 = make_extension(F3, f=2)


def test_normalization():
    chi = TameCharacter(E9, 11, Fraction(7, 4))
    assert chi.a == 3
    assert chi.prime_turn == Fraction(3, 4)
    assert chi.literal() == "char a=3 pv_ord=4 pv_exp=3"
    assert TameCharacter.from_literal(E9, 3, 4, 3) == chi


def test_group_law():
    chi = TameCharacter(E9, 3, Fraction(1, 4))
    assert (chi * chi.inverse()).is_trivial()
    assert chi.order() == 8
    assert (chi**8).is_trivial()
    with pytest.raises(FieldMismatchError):
        chi * TameCharacter(trivial_extension(F3), 1)


def test_evaluation():
    chi = TameCharacter(E9, 2, Fraction(1, 3))
    x = TameTorusElem(E9, 1, 1)
    assert chi.turn_at(x) == Fraction(1, 3) + Fraction(2, 8)
    assert evaluate(chi, x) == root_of_unity(12, 7)


@given(st.integers(), st.integers(), st.integers(), st.integers())
def test_turns_are_multiplicative(a, b, v, w):
    chi = TameCharacter(E9, a, Fraction(b, 6))
    x, y = TameTorusElem(E9, v, w), TameTorusElem(E9, w, v)
    total = chi.turn_at(x) + chi.turn_at(y)
    assert chi.turn_at(x * y) == total - (total.numerator // total.denominator)


def test_compose_with_unramified_norm():
    E25 = make_extension(F5, f=2)
    chi = TameCharacter(trivial_extension(F5), 1, Fraction(1, 3))
    lifted = compose_with_norm(chi, E25)
    assert lifted == TameCharacter(E25, 6, Fraction(2, 3))


def test_regular_orbits_of_quadratic_lift():
    F = trivial_extension(F3)
    E_2 = unramified_lift(F, 2)
    delta = relative_galois_group(E_2, F)
    found = regular_orbits(E_2, delta)
    # a and 3a mod 8 differ unless a is 0 or 4
    assert len(found) == 3
    assert all(len(o) == 2 for o in found)
    assert [o.representative.a for o in found] == [1, 2, 5]


def test_regular_orbits_over_f2():
    F = trivial_extension(FieldSkeleton(2))
    E_2 = unramified_lift(F, 2)
    assert len(regular_orbits(E_2, relative_galois_group(E_2, F))) == 1


def test_regularity():
    F = trivial_extension(F3)
    delta = relative_galois_group(E9, F)
    assert is_regular(TameCharacter(E9, 1), delta)
    assert not is_regular(TameCharacter(E9, 4), delta)
    # unramified characters are fixed by every delta
    assert not is_regular(TameCharacter(E9, 0, Fraction(1, 2)), delta)
    with pytest.raises(NotRegularError):
        require_regular(TameCharacter(E9, 0), delta)
    assert admissible_pair_check(E9, F, TameCharacter(E9, 2))
    assert orbit(TameCharacter(E9, 1), delta).members == (TameCharacter(E9, 1), TameCharacter(E9, 3))


def test_enumeration_and_x0():
    assert len(enumerate_characters(E9, 2)) == 16
    with pytest.raises(InputError):
        enumerate_characters(E9, 0)
    x0 = x0_subgroup(E9, 3)
    assert len(x0) == 3
    assert all(in_x0_subgroup(chi, 3) for chi in x0)
    assert not in_x0_subgroup(TameCharacter(E9, 0, Fraction(1, 2)), 3)
