"""
Glauberman Plugin

Coprime operator actions on small groups, the Glauberman correspondence with its signs,
and the Heisenberg groups that tie those signs to symplectic invariants.
"""

from .action import OperatorAction, operator_element, permutation_action, semidirect_product
from .correspondence import (
    GlaubermanMap,
    GlaubermanRecord,
    canonical_extension,
    chain_correspondence,
    character_table,
    composite_is_bijection,
    composite_map,
    generator_independence_check,
    glauberman_map,
    transitivity_check,
)
from .heisenberg import (
    calibration_check,
    calibration_signs,
    center_compatibility,
    heisenberg_action,
    heisenberg_group,
    heisenberg_signs,
)
from .weil import symplectic_basis, weil_sign, weil_signs

__all__ = [
    "GlaubermanMap",
    "GlaubermanRecord",
    "OperatorAction",
    "calibration_check",
    "calibration_signs",
    "canonical_extension",
    "center_compatibility",
    "chain_correspondence",
    "character_table",
    "composite_is_bijection",
    "composite_map",
    "generator_independence_check",
    "glauberman_map",
    "heisenberg_action",
    "heisenberg_group",
    "heisenberg_signs",
    "operator_element",
    "permutation_action",
    "semidirect_product",
    "symplectic_basis",
    "transitivity_check",
    "weil_sign",
    "weil_signs",
]
