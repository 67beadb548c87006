"""
Heisenberg Groups of Symplectic Spaces

For p odd and a symplectic F_p-space (V, h), the group V x F_p with

    (v, z)(w, z') = (v + w, z + z' + h(v, w)/2)

is extraspecial of order p^(1+dim V) and exponent p. An operator group preserving h acts
by (v, z) -> (c v, z), fixing the center.
"""

from __future__ import annotations

from itertools import product

from tame_langlands.config.config_manager import get_config_value
from tame_langlands.exceptions import BoundExceededError, InputError
from tame_langlands.plugins.finite_groups import FiniteGroupModel
from tame_langlands.plugins.arithmetic.linear import matvec
from tame_langlands.plugins.symplectic import ConcreteSymplecticSpace, decompose, t_cyclic
from tame_langlands.utils.logger import get_logger

from .action import OperatorAction
from .correspondence import GlaubermanMap, glauberman_map
from .weil import weil_signs

logger = get_logger(__name__)


def heisenberg_group(space: ConcreteSymplecticSpace, bound: int | None = None) -> FiniteGroupModel:
    """
    Raises:
        InputError: for p = 2
        BoundExceededError: if p^(1+dim) is above bound_group_order
    """
    p, n = space.p, space.dimension
    if p == 2:
        raise InputError("the Heisenberg realization needs p odd")
    if bound is None:
        bound = int(get_config_value("bound_group_order", 2000))
    if p ** (n + 1) > bound:
        raise BoundExceededError(f"p^(1+dim) = {p ** (n + 1)} > {bound}")
    half = (p + 1) // 2

    def op(x, y):
        v, z = x
        w, z2 = y
        return tuple((a + b) % p for a, b in zip(v, w)), (z + z2 + half * space.form(v, w)) % p

    zero = tuple(0 for _ in range(n))
    elements = [(v, z) for v in product(range(p), repeat=n) for z in range(p)]
    generators = [(tuple(1 if j == i else 0 for j in range(n)), 0) for i in range(n)] + [(zero, 1)]
    return FiniteGroupModel.from_elements(f"Heis{p}^(1+{n})", elements, op, (zero, 0), generators)


def heisenberg_action(space: ConcreteSymplecticSpace, bound: int | None = None) -> OperatorAction:
    """The operator group of the space acting on its Heisenberg group"""
    G = heisenberg_group(space, bound)
    images = []
    for a in space.actions:
        images.append(tuple(G.index((matvec(a, v, space.p), z)) for v, z in G.elements))
    return OperatorAction(space.group, G, tuple(images))


def central_element(G: FiniteGroupModel) -> int:
    n = len(G.elements[0][0])
    return G.index((tuple(0 for _ in range(n)), 1))


def faithful_on_center(gmap: GlaubermanMap, rho: int) -> bool:
    G = gmap.action.G
    row = gmap.table.rows[rho]
    return row[G.class_of(central_element(G))] != row[0]


def center_compatibility(gmap: GlaubermanMap) -> bool:
    """rho^A restricted to the center is a multiple of the central character of rho"""
    G = gmap.action.G
    z = central_element(G)
    for r in gmap.records:
        values = gmap.fixed_character_values(r.rho)
        row = gmap.table.rows[r.rho]
        if values[z] * row[0] != row[G.class_of(z)] * values[0]:
            return False
    return True


def heisenberg_signs(space: ConcreteSymplecticSpace) -> list[int]:
    """Glauberman signs of the characters nontrivial on the center, for cyclic C"""
    gmap = glauberman_map(heisenberg_action(space))
    return [r.epsilon for r in gmap.records if faithful_on_center(gmap, r.rho)]


def calibration_signs(space: ConcreteSymplecticSpace, bound: int | None = None) -> tuple[list[int], str]:
    """
    Glauberman signs above the center and the method that produced them

    The character-table oracle runs when A x| Heis(V) fits bound_group_order, the Weil
    model otherwise.
    """
    if bound is None:
        bound = int(get_config_value("bound_group_order", 2000))
    if space.group.order * space.p ** (space.dimension + 1) <= bound:
        return heisenberg_signs(space), "oracle"
    return weil_signs(space), "weil"


def calibration_check(space: ConcreteSymplecticSpace, bound: int | None = None) -> bool:
    """Every Glauberman sign above the center equals t_<c>(V)"""
    if space.group.rank != 1:
        raise InputError("calibration runs over a cyclic operator group")
    expected = t_cyclic(decompose(space), (1,))
    signs, method = calibration_signs(space, bound)
    logger.debug("calibration %s (%s): signs %s, t = %d", space.literal(), method, signs, expected)
    return bool(signs) and all(eps == expected for eps in signs)
