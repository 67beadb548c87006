"""
Tame Characters Plugin

The character groups X_1(E), X_0(E), X_0(E)_m, their Galois actions, regularity and
orbit enumeration.
"""

from .orbits import (
    CharacterOrbit,
    admissible_pair_check,
    enumerate_characters,
    in_x0_subgroup,
    is_regular,
    orbit,
    regular_orbits,
    require_regular,
    x0_subgroup,
)
from .tame_character import TameCharacter, compose_with_norm, evaluate, transport

__all__ = [
    "CharacterOrbit",
    "TameCharacter",
    "admissible_pair_check",
    "compose_with_norm",
    "enumerate_characters",
    "evaluate",
    "in_x0_subgroup",
    "is_regular",
    "orbit",
    "regular_orbits",
    "require_regular",
    "transport",
    "x0_subgroup",
]
