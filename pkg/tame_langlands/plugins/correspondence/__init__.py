"""
Correspondence Plugin

Ramification data, the parameter sets on the Galois and automorphic sides of the naive
correspondence, and the discrepancy character mu assembled from symplectic signs.
"""

from .corpus import datum_by_name, standard_data, tame_data, tame_datum, zero_module
from .datum import RamificationDatum, SignInputs, prime_generated_residue_degree, sign_inputs
from .mu import (
    MU_COLUMNS,
    MuRecord,
    PsiClass,
    assemble_mu,
    central_character_check,
    d_prime_sign,
    in_ambiguity,
    mu_at_base_prime,
    mu_at_ramified_prime,
    mu_on_units,
    prime_candidates,
    prime_value_check,
    ramified_stage,
    resolve_prime_value,
    skeleton_from_q,
    tame_case_mu,
    tower_sign,
    types_theorem_psi,
    unramified_stage,
)
from .params import (
    AutoParam,
    GaloisParam,
    action_law_check,
    ambiguity_check,
    equivariance_check,
    lift_automorphism,
    naive_map,
    naive_map_bijection_check,
    odot_twist,
    principal_homogeneous_check,
    transport,
    twist_transport_check,
)

__all__ = [
    "MU_COLUMNS",
    "AutoParam",
    "GaloisParam",
    "MuRecord",
    "PsiClass",
    "RamificationDatum",
    "SignInputs",
    "action_law_check",
    "ambiguity_check",
    "assemble_mu",
    "central_character_check",
    "d_prime_sign",
    "datum_by_name",
    "equivariance_check",
    "in_ambiguity",
    "lift_automorphism",
    "mu_at_base_prime",
    "mu_at_ramified_prime",
    "mu_on_units",
    "naive_map",
    "naive_map_bijection_check",
    "odot_twist",
    "prime_candidates",
    "prime_generated_residue_degree",
    "prime_value_check",
    "principal_homogeneous_check",
    "ramified_stage",
    "resolve_prime_value",
    "sign_inputs",
    "skeleton_from_q",
    "standard_data",
    "tame_case_mu",
    "tame_data",
    "tame_datum",
    "tower_sign",
    "transport",
    "twist_transport_check",
    "types_theorem_psi",
    "unramified_stage",
    "zero_module",
]
