"""
Norm and inclusion maps between tame tori
"""

from __future__ import annotations

from .extension import TameExtensionSpec, subextension_shift, trivial_extension
from .torus import TameTorusElem, TorusMorphism


def norm_map(E: TameExtensionSpec, L: TameExtensionSpec | None = None) -> TorusMorphism:
    """
    N_{E/L} as a morphism of tori; L defaults to the base field

    With e' = e(E|L), f' = f(E|L) and varpi_L = varpi_E^e' zeta_E^c:
        N(zeta_E) = zeta_L^e'
        N(varpi_E) = (-1)^((e'+1) f') zeta_L^(-c) varpi_L^f'
    """
    if L is None:
        L = trivial_extension(E.base)
    c = subextension_shift(E, L)
    e_rel, f_rel = E.e // L.e, E.f // L.f
    sign_exponent = 0
    if E.p != 2 and ((e_rel + 1) * f_rel) % 2:
        sign_exponent = L.mu_order // 2
    varpi_image = TameTorusElem(L, f_rel, sign_exponent - c)
    return TorusMorphism(E, L, varpi_image, e_rel)


def inclusion(L: TameExtensionSpec, E: TameExtensionSpec) -> TorusMorphism:
    """L^x -> E^x: varpi_L -> varpi_E^e' zeta_E^c, zeta_L -> zeta_E^((q_E - 1)/(q_L - 1))"""
    c = subextension_shift(E, L)
    ratio = max(E.mu_order, 1) // max(L.mu_order, 1)
    return TorusMorphism(L, E, TameTorusElem(E, E.e // L.e, c), ratio)
