"""
Exact Arithmetic Plugin

Cyclotomic integers Z[zeta_N] and finite fields F_{p^k}, shared by every other plugin.
No floating point is used anywhere.
"""

from .cyclotomic import Cyclotomic, csum, galois_apply, root_of_unity
from .finite_field import FiniteField, FiniteFieldElem, ff_ops, smallest_irreducible

__all__ = [
    "Cyclotomic",
    "FiniteField",
    "FiniteFieldElem",
    "csum",
    "ff_ops",
    "galois_apply",
    "root_of_unity",
    "smallest_irreducible",
]
