"""
Tests for ramification data, the naive correspondence and the discrepancy character
"""

from fractions import Fraction

import pytest

from tame_langlands.exceptions import FieldMismatchError, InconsistentMarkingError, InputError
from tame_langlands.plugins.characters import TameCharacter
from tame_langlands.plugins.correspondence import (
    AutoParam,
    GaloisParam,
    RamificationDatum,
    action_law_check,
    ambiguity_check,
    assemble_mu,
    d_prime_sign,
    datum_by_name,
    equivariance_check,
    in_ambiguity,
    lift_automorphism,
    naive_map,
    naive_map_bijection_check,
    principal_homogeneous_check,
    resolve_prime_value,
    skeleton_from_q,
    tame_case_mu,
    tame_data,
    zero_module,
)
from tame_langlands.plugins.symplectic import OperatorGroup, SymplecticModule
from tame_langlands.plugins.tame_fields import FieldSkeleton, aut_group, trivial_extension

STANDARD = ["tame-p3-n2", "tame-p5-n3", "aniso-p3-e2", "hyper-p3-e2", "aniso-p5-e3", "aniso-p2-f2"]


def test_unknown_datum():
    with pytest.raises(KeyError):
        datum_by_name("aniso-p7")


def test_datum_validation():
    F3 = trivial_extension(FieldSkeleton(3))
    with pytest.raises(InputError):
        RamificationDatum(F3, 0, 1, zero_module(5))
    with pytest.raises(InputError):
        RamificationDatum(F3, 0, 0, zero_module(3))
    with pytest.raises(InconsistentMarkingError):
        RamificationDatum(F3, 0, 1, SymplecticModule(3, OperatorGroup((1,)), ()))


def test_derived_invariants():
    datum = datum_by_name("aniso-p3-e2")
    assert datum.e == 2
    assert datum.m == 2
    assert datum.n == 2 * 2 * 3
    assert datum.label == "aniso-p3-e2"


@pytest.mark.parametrize("name", STANDARD)
def test_standard_data_pass(name):
    record = assemble_mu(datum_by_name(name))
    assert record.passed, record.failed_checks()
    assert record.base_prime in (1, -1)
    assert record.ramified_prime in (1, -1)


def test_prime_turn_lattice():
    record = assemble_mu(datum_by_name("aniso-p5-e3"))
    assert len(record.candidates) == 15
    assert record.character.prime_turn == Fraction(1, 30)
    assert len(assemble_mu(datum_by_name("aniso-p3-e2")).candidates) == 6
    assert assemble_mu(datum_by_name("aniso-p2-f2")).candidates == (Fraction(0), Fraction(1, 2))


def test_tame_data_match_closed_form():
    for datum in tame_data(max_n=4):
        record = assemble_mu(datum)
        assert record.passed, (datum.label, record.failed_checks())
        assert len(record.candidates) == 1
        assert record.character.prime_turn == tame_case_mu(datum.m, datum.base.q).prime_turn


def test_tame_case_mu():
    assert tame_case_mu(2, 3).prime_turn == Fraction(1, 2)
    assert tame_case_mu(3, 9).is_trivial()
    with pytest.raises(InputError):
        tame_case_mu(0, 3)


def test_skeleton_from_q():
    assert skeleton_from_q(9) == FieldSkeleton(3, 2)
    with pytest.raises(InputError):
        skeleton_from_q(6)


def test_resolve_prime_value():
    # 3 * 1 + 2 * (-1) = 1
    assert resolve_prime_value(3, 2, -1, 1, 1) == -1
    assert resolve_prime_value(3, 2, 1, 1, -1) == -1
    assert resolve_prime_value(1, 3, 1, 1, 1) == 1
    with pytest.raises(InputError):
        resolve_prime_value(2, 4, 1, 1, 1)


def test_d_prime_sign():
    assert d_prime_sign(3, 0, 1, 1, 1) == 1
    with pytest.raises(InputError):
        d_prime_sign(3, 0, 0, 1, 1)


def test_ambiguity_membership():
    datum = datum_by_name("tame-p3-n2")
    assert in_ambiguity(datum, TameCharacter(datum.E, 0, Fraction(1, 2)))
    assert not in_ambiguity(datum, TameCharacter(datum.E, 1))
    with pytest.raises(FieldMismatchError):
        in_ambiguity(datum, TameCharacter(datum.E_m, 0))


# parameters


def test_naive_map_on_tame_datum():
    datum = datum_by_name("tame-p3-n2")
    assert naive_map_bijection_check(datum)
    sigma = GaloisParam(datum, TameCharacter(datum.E_m, 1))
    assert sigma == GaloisParam(datum, TameCharacter(datum.E_m, 3))
    assert ambiguity_check(sigma)
    pi = naive_map(sigma)
    assert isinstance(pi, AutoParam)
    with pytest.raises(InputError):
        naive_map(pi)


def test_twisting_laws():
    datum = datum_by_name("tame-p3-n2")
    sigma = GaloisParam(datum, TameCharacter(datum.E_m, 1))
    phi = TameCharacter(datum.E, 1)
    assert equivariance_check(phi, sigma)
    assert action_law_check(phi, phi, sigma)


def test_principal_homogeneous():
    datum = datum_by_name("aniso-p5-e3")
    assert principal_homogeneous_check(GaloisParam(datum, TameCharacter(datum.E, 0)))
    tame = datum_by_name("tame-p3-n2")
    with pytest.raises(InputError):
        principal_homogeneous_check(GaloisParam(tame, TameCharacter(tame.E_m, 1)))


def test_automorphisms_lift():
    datum = datum_by_name("aniso-p3-e2")
    for gamma in aut_group(datum.E):
        lifted = lift_automorphism(datum, gamma)
        assert lifted.source == datum.E_m
