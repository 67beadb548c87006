"""
Parameters on both sides of the naive correspondence

A GaloisParam stands for sigma in G^0_m(F; O) and an AutoParam for pi in A^0_m(F; Theta).
Both are recorded relative to a fixed anchor (the base-point representation on the Galois
side, the base-point kappa on the automorphic side) by a Delta-regular tame character xi of
E_m^x, where Delta = Gal(E_m/E). Two parameters are equal when their xi lie in the same
Delta-orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from tame_langlands.exceptions import FieldMismatchError, InputError
from tame_langlands.plugins.characters import (
    TameCharacter,
    compose_with_norm,
    enumerate_characters,
    regular_orbits,
    require_regular,
    x0_subgroup,
)
from tame_langlands.plugins.tame_fields import TorusMorphism, aut_group, inclusion
from tame_langlands.utils.logger import get_logger

from .datum import RamificationDatum

logger = get_logger(__name__)

GALOIS_ANCHOR = "rho0"
AUTOMORPHIC_ANCHOR = "kappa0"


def orbit_key(datum: RamificationDatum, xi: TameCharacter) -> tuple[int, int, int]:
    return min(xi.act(delta).sort_key() for delta in datum.delta)


@dataclass(frozen=True, eq=False)
class GaloisParam:
    datum: RamificationDatum
    xi: TameCharacter
    anchor: str = GALOIS_ANCHOR

    kind = "galois"

    def __post_init__(self):
        if self.xi.field != self.datum.E_m:
            raise FieldMismatchError(
                f"xi lives over {self.xi.field.literal()}, expected {self.datum.E_m.literal()}"
            )
        require_regular(self.xi, self.datum.delta)

    def _key(self) -> tuple:
        return (self.kind, self.datum, self.anchor, orbit_key(self.datum, self.xi))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaloisParam):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def with_xi(self, xi: TameCharacter):
        return type(self)(self.datum, xi, self.anchor)

    def literal(self) -> str:
        return f"{self.kind} anchor={self.anchor} {self.xi.literal()}"


@dataclass(frozen=True, eq=False)
class AutoParam(GaloisParam):
    anchor: str = AUTOMORPHIC_ANCHOR
    endo_class: str = ""

    kind = "automorphic"

    def _key(self) -> tuple:
        return super()._key() + (self.endo_class,)

    def with_xi(self, xi: TameCharacter):
        return AutoParam(self.datum, xi, self.anchor, self.endo_class)

    def literal(self) -> str:
        return f"{super().literal()} endo={self.endo_class}"


def endo_class_label(datum: RamificationDatum) -> str:
    return f"Theta[{datum.label}]"


def naive_map(sigma: GaloisParam) -> AutoParam:
    """
    The naive correspondence: xi' = xi relative to the anchors

    Raises:
        NotRegularError: if xi is not Delta-regular
    """
    if isinstance(sigma, AutoParam):
        raise InputError("naive_map takes a Galois parameter")
    return AutoParam(sigma.datum, sigma.xi, AUTOMORPHIC_ANCHOR, endo_class_label(sigma.datum))


def odot_twist(phi: TameCharacter, x: GaloisParam) -> GaloisParam:
    """
    phi (.) x: replace xi by (phi o N_{E_m/E}) xi

    Raises:
        FieldMismatchError: if phi is not a character of E^x
    """
    if phi.field != x.datum.E:
        raise FieldMismatchError(f"phi lives over {phi.field.literal()}, expected {x.datum.E.literal()}")
    return x.with_xi(compose_with_norm(phi, x.datum.E_m) * x.xi)


def lift_automorphism(datum: RamificationDatum, gamma: TorusMorphism) -> TorusMorphism:
    """An automorphism of E_m restricting to gamma on E"""
    E, E_m = datum.E, datum.E_m
    if gamma.source != E or gamma.target != E:
        raise FieldMismatchError("gamma is not an automorphism of E")
    embed = inclusion(E, E_m)
    target = embed.compose(gamma)
    for candidate in aut_group(E_m):
        if candidate.compose(embed) == target:
            return candidate
    raise InputError("gamma does not lift to E_m")  # pragma: no cover


def transport(x: GaloisParam, gamma: TorusMorphism) -> GaloisParam:
    """The parameter moved by gamma in Aut(E|F): xi becomes xi o gamma_m^-1"""
    return x.with_xi(x.xi.act(lift_automorphism(x.datum, gamma)))


# checks


def naive_map_bijection_check(datum: RamificationDatum, prime_order_bound: int = 1) -> bool:
    """naive_map is constant on Delta-orbits and injective on the orbit set"""
    images = []
    for found in regular_orbits(datum.E_m, datum.delta, prime_order_bound):
        image = naive_map(GaloisParam(datum, found.representative))
        if any(naive_map(GaloisParam(datum, chi)) != image for chi in found.members):
            return False
        images.append(image)
    logger.debug("%s: %d regular orbits", datum.label, len(images))
    return len(set(images)) == len(images)


def equivariance_check(phi: TameCharacter, sigma: GaloisParam) -> bool:
    return naive_map(odot_twist(phi, sigma)) == odot_twist(phi, naive_map(sigma))


def action_law_check(phi: TameCharacter, phi_prime: TameCharacter, x: GaloisParam) -> bool:
    return odot_twist(phi * phi_prime, x) == odot_twist(phi, odot_twist(phi_prime, x))


def twist_transport_check(phi: TameCharacter, x: GaloisParam, gamma: TorusMorphism) -> bool:
    """phi^gamma (.) transport(x, gamma) = transport(phi (.) x, gamma)"""
    return odot_twist(phi.act(gamma), transport(x, gamma)) == transport(odot_twist(phi, x), gamma)


def ambiguity_check(x: GaloisParam) -> bool:
    """X_0(E)_m acts trivially"""
    return all(odot_twist(chi, x) == x for chi in x0_subgroup(x.datum.E, x.datum.m))


def principal_homogeneous_check(x: GaloisParam, prime_order_bound: int = 1) -> bool:
    """
    For m = 1, phi -> phi (.) x is a bijection from the truncation of X_1(E) onto the
    parameters of the same truncation

    Raises:
        InputError: if m != 1
    """
    datum = x.datum
    if datum.m != 1:
        raise InputError("the parameter sets are principal homogeneous only for m = 1")
    if (x.xi.prime_turn * prime_order_bound).denominator != 1:
        raise InputError("the base parameter lies outside the truncation")
    characters = enumerate_characters(datum.E, prime_order_bound)
    reached = {odot_twist(phi, x) for phi in characters}
    expected = {x.with_xi(chi) for chi in characters}
    return len(reached) == len(characters) and reached == expected
