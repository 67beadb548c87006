"""
Tame Fields Plugin

Finite models of a non-Archimedean local field F and its tame extensions, read modulo
1-units: specs, the tame torus, automorphisms, norms, complementary subgroups and the
metacyclic Weil quotient used for discriminant characters.
"""

from .automorphisms import aut_group, gamma_order, is_group, relative_galois_group
from .complementary import ComplementaryCertificate, ComplementaryData, complementary_data
from .extension import (
    FieldSkeleton,
    TameExtensionSpec,
    intermediate_fields,
    is_subextension,
    make_extension,
    max_unramified,
    relative_spec,
    subextension_shift,
    trivial_extension,
    unramified_lift,
)
from .norms import inclusion, norm_map
from .torus import (
    TameTorusElem,
    TorusMorphism,
    base_root_generator,
    base_uniformizer,
    root_generator,
    uniformizer,
)
from .weil_model import (
    discriminant_character,
    discriminant_tower_check,
    embedding_points,
    extension_subgroup,
    tame_weil_model,
    weil_parameters,
)

__all__ = [
    "ComplementaryCertificate",
    "ComplementaryData",
    "FieldSkeleton",
    "TameExtensionSpec",
    "TameTorusElem",
    "TorusMorphism",
    "aut_group",
    "base_root_generator",
    "base_uniformizer",
    "complementary_data",
    "discriminant_character",
    "discriminant_tower_check",
    "embedding_points",
    "extension_subgroup",
    "gamma_order",
    "inclusion",
    "intermediate_fields",
    "is_group",
    "is_subextension",
    "make_extension",
    "max_unramified",
    "norm_map",
    "relative_galois_group",
    "relative_spec",
    "root_generator",
    "subextension_shift",
    "tame_weil_model",
    "trivial_extension",
    "unramified_lift",
    "uniformizer",
    "weil_parameters",
]
