"""
Tests for tame extension specs, tori, automorphisms, norms and discriminants
"""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tame_langlands.exceptions import FieldMismatchError, InputError, NonTameError, NotSubextensionError
from tame_langlands.plugins.characters import TameCharacter
from tame_langlands.plugins.tame_fields import (
    FieldSkeleton,
    TameTorusElem,
    TorusMorphism,
    aut_group,
    complementary_data,
    discriminant_character,
    gamma_order,
    inclusion,
    intermediate_fields,
    is_group,
    is_subextension,
    make_extension,
    max_unramified,
    norm_map,
    relative_galois_group,
    root_generator,
    subextension_shift,
    tame_weil_model,
    trivial_extension,
    unramified_lift,
    uniformizer,
    weil_parameters,
)

F2, F3, F5, F7 = FieldSkeleton(2), FieldSkeleton(3), FieldSkeleton(5), FieldSkeleton(7)


def test_skeleton_validation():
    assert FieldSkeleton(2, 3).q == 8
    with pytest.raises(InputError):
        FieldSkeleton(6)
    with pytest.raises(InputError):
        FieldSkeleton(3, 0)


def test_make_extension_rejects_wild_ramification():
    with pytest.raises(NonTameError):
        make_extension(F3, e=3)
    with pytest.raises(InputError):
        make_extension(F3, e=2, u=2)


def test_extension_counts():
    E = make_extension(F3, e=2, f=2, u=1)
    assert E.q_E == 9
    assert E.mu_order == 8
    assert E.degree == 4
    assert E.literal() == "ext p=3 f0=1 e=2 f=2 u=1"


def test_unramified_lift_keeps_prime_element():
    E = make_extension(F7, e=3, u=1)
    E_2 = unramified_lift(E, 2)
    assert (E_2.e, E_2.f) == (3, 2)
    assert E_2.u == 1 * (49 - 1) // (7 - 1)
    assert is_subextension(E_2, E)


def test_subextensions():
    E = make_extension(F5, e=2, f=2)
    assert subextension_shift(E, trivial_extension(F5)) == 0
    assert is_subextension(E, max_unramified(E))
    assert not is_subextension(make_extension(F5, e=2), make_extension(F5, f=2))
    with pytest.raises(NotSubextensionError):
        subextension_shift(make_extension(F5, e=2), make_extension(F5, e=4))
    fields = intermediate_fields(E)
    assert fields[0] == trivial_extension(F5)
    assert all(is_subextension(E, L) for L in fields)


@pytest.mark.parametrize(
    "base,e,u",
    [(F3, 2, 0), (F3, 2, 1), (F5, 3, 0), (F5, 4, 1), (F7, 3, 0), (F7, 2, 1), (F7, 6, 5), (F2, 3, 0)],
)
def test_aut_group_order(base, e, u):
    E = make_extension(base, e=e, u=u)
    group = aut_group(E)
    assert len(group) == gamma_order(E)
    assert group[0] == TorusMorphism.identity(E)
    assert is_group(group)


def test_relative_galois_group():
    E = make_extension(F3, e=2)
    E_3 = unramified_lift(E, 3)
    delta = relative_galois_group(E_3, E)
    assert len(delta) == 3
    assert is_group(delta)
    assert all(d.apply(uniformizer(E_3)) == uniformizer(E_3) for d in delta)
    with pytest.raises(InputError):
        relative_galois_group(E, E_3)


def test_torus_arithmetic():
    E = make_extension(F5, f=2)
    x = TameTorusElem(E, 2, 7)
    assert (x * x.inverse()) == TameTorusElem.identity(E)
    assert (x**3).a == 21
    with pytest.raises(FieldMismatchError):
        x * TameTorusElem(trivial_extension(F5), 0, 1)


def test_morphism_order_and_inverse():
    E = make_extension(F3, f=2)
    frob = aut_group(E)[1]
    assert frob.order() == 2
    assert frob.compose(frob.inverse()) == TorusMorphism.identity(E)


@given(st.integers(-20, 20), st.integers(-60, 60), st.integers(-20, 20), st.integers(-60, 60))
def test_automorphisms_compose_pointwise(v, a, w, b):
    E = make_extension(F5, e=2, f=2, u=3)
    x, y = TameTorusElem(E, v, a), TameTorusElem(E, w, b)
    for gamma in aut_group(E):
        assert gamma.apply(x * y) == gamma.apply(x) * gamma.apply(y)
        for delta in aut_group(E):
            assert gamma.compose(delta).apply(x) == gamma.apply(delta.apply(x))


@given(st.integers(-20, 20), st.integers(-60, 60))
def test_norms_are_transitive(v, a):
    for E in (make_extension(F5, e=2, f=2), make_extension(F3, e=2, f=2)):
        K = max_unramified(E)
        x = TameTorusElem(E, v, a)
        assert norm_map(K).apply(norm_map(E, K).apply(x)) == norm_map(E).apply(x)


@pytest.mark.parametrize(
    "base,e,f,u", [(F3, 2, 1, 0), (F3, 1, 2, 0), (F5, 2, 2, 3), (F7, 3, 1, 2), (F2, 1, 3, 0), (F2, 3, 2, 1)]
)
def test_norm_after_inclusion_is_degree_power(base, e, f, u):
    E = make_extension(base, e=e, f=f, u=u)
    F = trivial_extension(base)
    norm, embed = norm_map(E), inclusion(F, E)
    for x in (uniformizer(F), root_generator(F)):
        assert norm.apply(embed.apply(x)) == x**E.degree


def test_complementary_certificates():
    for E in (make_extension(F3, e=2), make_extension(F5, e=2, f=2), make_extension(F7, e=3, u=1)):
        assert complementary_data(E).all_passed


# discriminants


def test_discriminant_of_unramified_quadratic():
    chi = discriminant_character(make_extension(F3, f=2))
    assert chi == TameCharacter(trivial_extension(F3), 0, Fraction(1, 2))


def test_discriminant_of_ramified_quadratic():
    # d = (-, varpi)_F: nontrivial on zeta_F, and (varpi, varpi) = (-1 | q)
    assert discriminant_character(make_extension(F3, e=2)) == TameCharacter(trivial_extension(F3), 1, Fraction(1, 2))
    assert discriminant_character(make_extension(F5, e=2)) == TameCharacter(trivial_extension(F5), 2, Fraction(0))


def test_weil_model():
    E = make_extension(F3, e=2)
    N, R = weil_parameters(E)
    assert (N, R) == (4, 2)
    W = tame_weil_model(F3, N, R)
    assert W.order == 8
    s, t = W.index((1, 0)), W.index((0, 1))
    # t s t^-1 = s^q
    assert W.mul(W.mul(t, s), W.inv(t)) == W.power(s, 3)
    with pytest.raises(InputError):
        tame_weil_model(F3, 6)
