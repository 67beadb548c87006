"""
Glauberman Correspondence

For a cyclic operator group A = <a> of order prime to |G| and an A-fixed irreducible
character rho of G, the canonical extension rho~ to A x| G is the unique extension with
det rho~ trivial on A. Then

    tr rho^A(h) = epsilon tr rho~(a h)    for h in G^A

for a unique rho^A in Irr(G^A) and a sign epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from tame_langlands.exceptions import CorrespondenceError, InputError
from tame_langlands.plugins.arithmetic import Cyclotomic, csum, root_of_unity
from tame_langlands.plugins.finite_groups import CharacterTable, FiniteGroupModel, dixon_character_table
from tame_langlands.utils.logger import get_logger

from .action import OperatorAction, operator_element, semidirect_product

logger = get_logger(__name__)

Row = tuple[Cyclotomic, ...]


@lru_cache(maxsize=64)
def character_table(G: FiniteGroupModel) -> CharacterTable:
    """Dixon table of G, kept per group object"""
    return dixon_character_table(G)


@dataclass(frozen=True)
class GlaubermanRecord:
    rho: int
    rho_fixed: int
    epsilon: int
    extension: int
    extension_count: int


@dataclass
class GlaubermanMap:
    action: OperatorAction
    table: CharacterTable
    fixed_group: FiniteGroupModel
    fixed_table: CharacterTable
    records: list[GlaubermanRecord] = field(default_factory=list)

    @property
    def is_bijection(self) -> bool:
        hit = sorted(r.rho_fixed for r in self.records)
        return hit == list(range(len(self.fixed_table)))

    def record_for(self, rho: int) -> GlaubermanRecord:
        for r in self.records:
            if r.rho == rho:
                return r
        raise InputError(f"character {rho} is not A-fixed")

    def fixed_character_values(self, rho: int) -> dict[int, Cyclotomic]:
        """rho^A as G-element index -> value"""
        row = self.fixed_table.rows[self.record_for(rho).rho_fixed]
        F = self.fixed_group
        return {F.parent_indices[h]: row[F.class_of(h)] for h in range(F.order)}


def _require_cyclic(action: OperatorAction) -> None:
    if action.A.rank != 1:
        raise InputError(f"operator group {action.A.literal()} is not given as a cyclic group")
    if gcd(action.A.order, action.G.order) != 1:
        raise InputError(f"|A| = {action.A.order} is not prime to |G| = {action.G.order}")


def _determinant_exponent(values: list[Cyclotomic], o: int) -> int:
    """
    sum k m_k mod o, where m_k is the multiplicity of zeta_o^k as an eigenvalue

    values[j] is the trace at a^j.
    """
    total = 0
    for k in range(o):
        acc = csum(values[j] * root_of_unity(o, -j * k) for j in range(o))
        if not acc.is_integer() or acc.to_int() % o:
            raise CorrespondenceError("eigenvalue multiplicities are not integral")
        total += k * (acc.to_int() // o)
    return total % o


def restriction_matches(H: FiniteGroupModel, extension: Row, G: FiniteGroupModel, rho: Row) -> bool:
    for c, rep in enumerate(G.class_reps):
        if extension[H.class_of(operator_element(H, (0,), rep))] != rho[c]:
            return False
    return True


def extensions(action: OperatorAction, rho: Row, H: FiniteGroupModel, table_H: CharacterTable) -> list[int]:
    """Rows of Irr(A x| G) restricting to rho"""
    return [i for i, row in enumerate(table_H.rows) if restriction_matches(H, row, action.G, rho)]


def canonical_extension(
    action: OperatorAction,
    rho: Row,
    H: FiniteGroupModel | None = None,
    table_H: CharacterTable | None = None,
) -> tuple[int, int]:
    """
    Row of the canonical extension of rho in the table of A x| G, and the number of extensions

    Raises:
        InputError: if A is not cyclic or rho is not A-fixed
        CorrespondenceError: if the determinant condition does not single out one extension
    """
    _require_cyclic(action)
    if not action.character_is_fixed(rho):
        raise InputError("character is not fixed by A")
    if H is None:
        H = semidirect_product(action)
    if table_H is None:
        table_H = character_table(H)
    o = action.A.order
    found = extensions(action, rho, H, table_H)
    canonical = []
    for i in found:
        row = table_H.rows[i]
        values = [row[H.class_of(operator_element(H, (j,)))] for j in range(o)]
        if _determinant_exponent(values, o) == 0:
            canonical.append(i)
    if len(canonical) != 1:
        raise CorrespondenceError(f"{len(canonical)} extensions with trivial determinant on A")
    return canonical[0], len(found)


def _match(values: list[Cyclotomic], table: CharacterTable) -> tuple[int, int]:
    matches = []
    for i, row in enumerate(table.rows):
        for eps in (1, -1):
            if all(row[c] == v * eps for c, v in enumerate(values)):
                matches.append((i, eps))
    if len(matches) != 1:
        raise CorrespondenceError(f"{len(matches)} candidates for the corresponding character")
    return matches[0]


def glauberman_map(
    action: OperatorAction,
    generator: int = 1,
    table: CharacterTable | None = None,
) -> GlaubermanMap:
    """
    The correspondence Irr^A(G) -> Irr(G^A) with signs, read off on the coset a G^A

    Args:
        action: cyclic operator action of order prime to |G|
        generator: k with a = (generator of A)^k; must be a unit mod |A|
        table: character table of G, computed when not given

    Raises:
        CorrespondenceError: if a match is not unique
    """
    _require_cyclic(action)
    o = action.A.order
    if gcd(generator, o) != 1:
        raise InputError(f"{generator} does not give a generator of C{o}")
    G = action.G
    if table is None:
        table = character_table(G)
    F = action.fixed_group()
    table_F = character_table(F)
    H = semidirect_product(action)
    table_H = character_table(H)
    a = (generator % o,)
    result = GlaubermanMap(action, table, F, table_F)
    for rho, row in enumerate(table.rows):
        if not action.character_is_fixed(row):
            continue
        ext, count = canonical_extension(action, row, H, table_H)
        ext_row = table_H.rows[ext]
        values = [ext_row[H.class_of(operator_element(H, a, F.parent_indices[h]))] for h in F.class_reps]
        fixed, eps = _match(values, table_F)
        result.records.append(GlaubermanRecord(rho, fixed, eps, ext, count))
    logger.info(
        "%s on %s: %d fixed characters, bijection=%s", action.A.literal(), G.name, len(result.records), result.is_bijection
    )
    return result


def generator_independence_check(action: OperatorAction) -> bool:
    """epsilon and rho^A are the same for every generator of A"""
    o = action.A.order
    table = character_table(action.G)
    reference = glauberman_map(action, 1, table)
    expected = {(r.rho, r.rho_fixed, r.epsilon) for r in reference.records}
    for k in range(2, o):
        if gcd(k, o) != 1:
            continue
        other = glauberman_map(action, k, table)
        if {(r.rho, r.rho_fixed, r.epsilon) for r in other.records} != expected:
            return False
    return True


# solvable operator groups through cyclic steps


def _cyclic_step(action: OperatorAction, b) -> tuple[OperatorAction, dict[int, dict[int, Cyclotomic]]]:
    """
    Correspond along <b>; returns A acting on G^b and, for every <b>-fixed row of G,
    the corresponding character of G^b as a map from G^b element index to value
    """
    step = action.restrict(b)
    G = action.G
    table = character_table(G)
    if step.is_trivial():
        mapped = {
            rho: {g: row[G.class_of(g)] for g in range(G.order)} for rho, row in enumerate(table.rows)
        }
        return action, mapped
    gmap = glauberman_map(step, table=table)
    F = gmap.fixed_group
    mapped = {}
    for r in gmap.records:
        row = gmap.fixed_table.rows[r.rho_fixed]
        mapped[r.rho] = {h: row[F.class_of(h)] for h in range(F.order)}
    return action.on_fixed(b), mapped


def _row_of(values: dict[int, Cyclotomic], G: FiniteGroupModel, table: CharacterTable) -> int:
    for i, row in enumerate(table.rows):
        if all(row[G.class_of(g)] == v for g, v in values.items()):
            return i
    raise CorrespondenceError("character not found in the table")  # pragma: no cover


def _root_indices(G: FiniteGroupModel) -> list[int]:
    """Element indices of G in the outermost group it was cut from"""
    indices = list(range(G.order))
    group = G
    while group.parent is not None:
        indices = [group.parent_indices[i] for i in indices]
        group = group.parent
    return indices


def chain_correspondence(action: OperatorAction, chain: list) -> dict[int, dict[int, Cyclotomic]]:
    """
    Compose cyclic correspondences along b_1, b_2, ...

    Returns, for every row of G fixed by all of A, the final character as a map from
    element indices of the root group G to values.
    """
    G0 = action.G
    table0 = character_table(G0)
    current = action
    # root row -> current character as a row index of the current group's table
    state = {rho: rho for rho, row in enumerate(table0.rows) if action.character_is_fixed(row)}
    for b in chain:
        before = current
        current, mapped = _cyclic_step(current, b)
        table = character_table(current.G)
        state = {rho: _row_of(mapped[row], current.G, table) for rho, row in state.items()}
        logger.debug("step %s: %s -> %s", b, before.G.name, current.G.name)
    G = current.G
    table = character_table(G)
    roots = _root_indices(G)
    return {rho: {roots[g]: table.rows[row][G.class_of(g)] for g in range(G.order)} for rho, row in state.items()}


def transitivity_check(action: OperatorAction, B: list) -> bool:
    """
    The correspondence through B and then A/B equals the direct one

    B is given by generators; the direct correspondence runs along the generators of A.

    Raises:
        InputError: if an element of B is not in A
    """
    B = [action.A.normalize(b) for b in B]
    direct = chain_correspondence(action, action.A.generators())
    composite = chain_correspondence(action, B + action.A.generators())
    if direct.keys() != composite.keys():
        return False
    return all(direct[rho] == composite[rho] for rho in direct)


def composite_map(action: OperatorAction) -> dict[int, int]:
    """
    rho -> row of Irr(G^A) for every A-fixed row of G, composing the cyclic correspondences
    along the generators of A
    """
    composite = chain_correspondence(action, action.A.generators())
    F = action.fixed_group()
    table = character_table(F)
    roots = _root_indices(F)
    return {
        rho: _row_of({h: values[roots[h]] for h in range(F.order)}, F, table) for rho, values in composite.items()
    }


def composite_is_bijection(action: OperatorAction, mapping: dict[int, int] | None = None) -> bool:
    """The composite map hits every row of Irr(G^A) exactly once"""
    if mapping is None:
        mapping = composite_map(action)
    rows = len(character_table(action.fixed_group()).rows)
    return len(mapping) == rows and len(set(mapping.values())) == rows
