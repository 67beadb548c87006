"""
Automorphism Groups

Aut(E|F) in the torus model, found by exhaustive search over candidate images
zeta_E -> zeta_E^(q^i), varpi_E -> zeta_E^j varpi_E that fix varpi_F and zeta_F.
"""

from __future__ import annotations

from math import gcd

from tame_langlands.exceptions import InputError

from .extension import TameExtensionSpec, subextension_shift
from .torus import TameTorusElem, TorusMorphism, base_root_generator, base_uniformizer


def aut_group(E: TameExtensionSpec) -> list[TorusMorphism]:
    """All F-automorphisms of E, identity first"""
    modulus = max(E.mu_order, 1)
    varpi_F = base_uniformizer(E)
    zeta_F = base_root_generator(E)
    found = []
    for i in range(E.f):
        multiplier = pow(E.q, i, modulus)
        for j in range(modulus):
            candidate = TorusMorphism(E, E, TameTorusElem(E, 1, j), multiplier)
            if candidate.apply(varpi_F) == varpi_F and candidate.apply(zeta_F) == zeta_F:
                found.append(candidate)
    identity = TorusMorphism.identity(E)
    found.sort(key=lambda m: (m != identity, m.zeta_multiplier, m.varpi_image.a))
    return found


def relative_galois_group(E_m: TameExtensionSpec, E: TameExtensionSpec) -> list[TorusMorphism]:
    """Gal(E_m/E) for an unramified step: the powers of zeta -> zeta^(q_E) fixing varpi"""
    if E_m.e != E.e or E_m.f % E.f:
        raise InputError(f"{E_m.literal()} is not unramified over {E.literal()}")
    subextension_shift(E_m, E)
    m = E_m.f // E.f
    modulus = max(E_m.mu_order, 1)
    group = []
    for i in range(m):
        sigma = TorusMorphism(E_m, E_m, TameTorusElem(E_m, 1, 0), pow(E.q_E, i, modulus))
        group.append(sigma)
    return group


def gamma_order(E: TameExtensionSpec) -> int:
    """|Aut(E|F)| for totally ramified E: gcd(e, q - 1)"""
    if E.f != 1:
        raise InputError("closed form applies to totally ramified extensions only")
    return gcd(E.e, E.q - 1)


def is_group(morphisms: list[TorusMorphism]) -> bool:
    """Closure under composition, with the identity present"""
    if not morphisms:
        return False
    members = set(morphisms)
    if TorusMorphism.identity(morphisms[0].source) not in members:
        return False
    return all(a.compose(b) in members for a in morphisms for b in morphisms)
