"""
Character Orbits

Regularity, orbit enumeration and the finite subgroups X_0(E)_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from tame_langlands.exceptions import InputError, NotRegularError
from tame_langlands.plugins.tame_fields.automorphisms import is_group, relative_galois_group
from tame_langlands.plugins.tame_fields.extension import TameExtensionSpec
from tame_langlands.plugins.tame_fields.torus import TorusMorphism

from .tame_character import TameCharacter


@dataclass(frozen=True)
class CharacterOrbit:
    group: tuple[TorusMorphism, ...]
    members: tuple[TameCharacter, ...]

    @property
    def representative(self) -> TameCharacter:
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, chi: object) -> bool:
        return chi in self.members


def _require_group(delta: list[TorusMorphism]) -> None:
    if not is_group(delta):
        raise InputError("acting set is not closed under composition")


def stabilizer(chi: TameCharacter, delta: list[TorusMorphism]) -> list[TorusMorphism]:
    return [d for d in delta if chi.act(d) == chi]


def is_regular(chi: TameCharacter, delta: list[TorusMorphism]) -> bool:
    """True iff the stabilizer of chi in delta is trivial"""
    _require_group(delta)
    return len(stabilizer(chi, delta)) == 1


def orbit(chi: TameCharacter, delta: list[TorusMorphism]) -> CharacterOrbit:
    members = sorted({chi.act(d) for d in delta}, key=TameCharacter.sort_key)
    return CharacterOrbit(tuple(delta), tuple(members))


def enumerate_characters(E: TameExtensionSpec, prime_order_bound: int = 1) -> list[TameCharacter]:
    """All characters whose prime value has order dividing the bound, in canonical order"""
    if prime_order_bound < 1:
        raise InputError("prime value order bound must be positive")
    chars = [
        TameCharacter(E, a, Fraction(k, prime_order_bound))
        for a in range(max(E.mu_order, 1))
        for k in range(prime_order_bound)
    ]
    return sorted(chars, key=TameCharacter.sort_key)


def regular_orbits(
    E: TameExtensionSpec, delta: list[TorusMorphism], prime_order_bound: int = 1
) -> list[CharacterOrbit]:
    """Orbits of delta-regular characters within the bound, sorted by representative"""
    _require_group(delta)
    seen: set[TameCharacter] = set()
    orbits = []
    for chi in enumerate_characters(E, prime_order_bound):
        if chi in seen or len(stabilizer(chi, delta)) != 1:
            continue
        found = orbit(chi, delta)
        seen.update(found.members)
        orbits.append(found)
    return orbits


def x0_subgroup(E: TameExtensionSpec, m: int) -> list[TameCharacter]:
    """X_0(E)_m: unramified characters with chi^m = 1"""
    if m < 1:
        raise InputError(f"m must be positive, got {m}")
    return [TameCharacter(E, 0, Fraction(k, m)) for k in range(m)]


def in_x0_subgroup(chi: TameCharacter, m: int) -> bool:
    return chi.is_unramified() and (chi.prime_turn * m).denominator == 1


def admissible_pair_check(E_m: TameExtensionSpec, E: TameExtensionSpec, zeta: TameCharacter) -> bool:
    """(E_m/F, zeta) is admissible iff zeta is Gal(E_m/E)-regular"""
    if zeta.field != E_m:
        raise InputError("character is not defined over E_m")
    return is_regular(zeta, relative_galois_group(E_m, E))


def require_regular(chi: TameCharacter, delta: list[TorusMorphism]) -> None:
    if not is_regular(chi, delta):
        raise NotRegularError(f"{chi.literal()} is not regular")
