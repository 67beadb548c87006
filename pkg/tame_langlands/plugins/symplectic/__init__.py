"""
Symplectic Signs Plugin

Symplectic F_p C-modules for finite abelian C of order prime to p: tagged classification,
concrete realizations, fixed points, the sign invariants t0, t1, t and the signs lemma.
"""

from .bar_character import BarCharacter, OperatorGroup, all_characters, frobenius_orbits
from .concrete import (
    ConcreteSymplecticSpace,
    decompose,
    hyperbolic_space,
    isotypic_multiplicities,
    negate_form,
    orthogonal_sum,
    synthesize,
)
from .invariants import (
    SignTriple,
    fixed_point_identity_check,
    summand_t_invariants,
    t0,
    t1,
    t_cyclic,
    t_invariants,
)
from .isometry import find_isometry, is_isometry
from .module import (
    FormType,
    Summand,
    SymplecticModule,
    anisotropic,
    direct_sum,
    fixed_points,
    hyperbolic,
    restrict,
)
from .signs_lemma import (
    SweepReport,
    exceptional_summands,
    irreducible_summands,
    known_exception,
    markings,
    parity_counts,
    signs_lemma_check,
    signs_lemma_sides,
    signs_lemma_sweep,
    sweep_group,
)

__all__ = [
    "BarCharacter",
    "ConcreteSymplecticSpace",
    "FormType",
    "OperatorGroup",
    "SignTriple",
    "Summand",
    "SweepReport",
    "SymplecticModule",
    "all_characters",
    "anisotropic",
    "decompose",
    "direct_sum",
    "exceptional_summands",
    "find_isometry",
    "fixed_point_identity_check",
    "fixed_points",
    "frobenius_orbits",
    "hyperbolic",
    "hyperbolic_space",
    "irreducible_summands",
    "is_isometry",
    "isotypic_multiplicities",
    "known_exception",
    "markings",
    "negate_form",
    "orthogonal_sum",
    "parity_counts",
    "restrict",
    "signs_lemma_check",
    "signs_lemma_sides",
    "signs_lemma_sweep",
    "summand_t_invariants",
    "sweep_group",
    "synthesize",
    "t0",
    "t1",
    "t_cyclic",
    "t_invariants",
]
