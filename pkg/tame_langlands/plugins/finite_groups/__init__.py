"""
Finite Groups Plugin

Explicit small groups, exact character tables by the Dixon-Schneider method and a
persistent text cache for those tables.
"""

from .dixon import CharacterTable, dixon_character_table, splitting_prime
from .group_model import (
    FiniteGroupModel,
    abelian_group,
    cyclic_group,
    parse_cycles,
    resolve_group,
    symmetric_group,
)
from .table_cache import cached_character_table, dumps_table, load_table, loads_table, save_table

__all__ = [
    "CharacterTable",
    "FiniteGroupModel",
    "abelian_group",
    "cached_character_table",
    "cyclic_group",
    "dixon_character_table",
    "dumps_table",
    "load_table",
    "loads_table",
    "parse_cycles",
    "resolve_group",
    "save_table",
    "splitting_prime",
    "symmetric_group",
]
