"""
Cuspidal Census

Matches the cuspidal rows of the exact character table of GL_n(F_q) against Gamma-orbits
of regular characters of mu_E through their values on regular elliptic classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from tame_langlands.plugins.arithmetic import Cyclotomic, csum
from tame_langlands.plugins.characters import CharacterOrbit, regular_orbits
from tame_langlands.plugins.finite_groups import CharacterTable, FiniteGroupModel, cached_character_table
from tame_langlands.plugins.tame_fields import FieldSkeleton, TameTorusElem, aut_group, trivial_extension
from tame_langlands.utils.logger import get_logger

from .gl_model import elliptic_element, general_linear_group, proper_radicals
from .green_trace import CuspidalTypeParam, green_trace, is_regular_unit, unramified_field

logger = get_logger(__name__)


@dataclass
class CensusResult:
    n: int
    q: int
    cuspidal_rows: list[int] = field(default_factory=list)
    orbit_count: int = 0
    # cuspidal row -> orbit indices whose Green trace agrees on every regular elliptic class
    matches: dict[int, list[int]] = field(default_factory=dict)

    @property
    def cuspidal_count(self) -> int:
        return len(self.cuspidal_rows)

    @property
    def is_bijection(self) -> bool:
        if self.cuspidal_count != self.orbit_count:
            return False
        if any(len(found) != 1 for found in self.matches.values()):
            return False
        hit = sorted(found[0] for found in self.matches.values())
        return hit == list(range(self.orbit_count))


def is_cuspidal(table: CharacterTable, row: int, G: FiniteGroupModel, radicals: list[list]) -> bool:
    """No nonzero vectors fixed by the unipotent radical of any proper standard parabolic"""
    values = table.rows[row]
    for radical in radicals:
        total = csum(values[G.class_of(G.index(u))] for u in radical)
        if not total.is_zero():
            return False
    return True


def cuspidal_rows(table: CharacterTable, G: FiniteGroupModel, n: int, F: FieldSkeleton) -> list[int]:
    radicals = proper_radicals(n, F)
    return [i for i in range(len(table)) if is_cuspidal(table, i, G, radicals)]


def regular_elliptic_classes(G: FiniteGroupModel, n: int, F: FieldSkeleton) -> dict[int, int]:
    """Class index -> exponent k of one Gamma-regular zeta_E^k in that class"""
    E = unramified_field(F, n)
    gamma = aut_group(E)
    found: dict[int, int] = {}
    for k in range(max(E.mu_order, 1)):
        if not is_regular_unit(TameTorusElem(E, 0, k), gamma):
            continue
        c = G.class_of(G.index(elliptic_element(k, F, n)))
        found.setdefault(c, k)
    return found


def orbit_values(orbit: CharacterOrbit, n: int, F: FieldSkeleton, classes: dict[int, int]) -> dict[int, Cyclotomic]:
    param = CuspidalTypeParam(n, F, orbit.representative)
    one = TameTorusElem.identity(trivial_extension(F))
    return {c: green_trace(param, one, TameTorusElem(param.field, 0, k)) for c, k in classes.items()}


def cuspidal_census(n: int, F: FieldSkeleton, cache_dir: str | Path | None = None) -> CensusResult:
    """
    Count cuspidal characters of GL_n(F_q) and match them with regular orbits

    Raises:
        BoundExceededError: if GL_n(F_q) is above the oracle bound
    """
    G = general_linear_group(n, F)
    table = cached_character_table(G, cache_dir)
    result = CensusResult(n, F.q)
    result.cuspidal_rows = cuspidal_rows(table, G, n, F)
    E = unramified_field(F, n)
    orbits = regular_orbits(E, aut_group(E))
    result.orbit_count = len(orbits)
    classes = regular_elliptic_classes(G, n, F)
    traces = [orbit_values(o, n, F, classes) for o in orbits]
    for row in result.cuspidal_rows:
        values = table.rows[row]
        result.matches[row] = [
            i for i, trace in enumerate(traces) if all(values[c] == v for c, v in trace.items())
        ]
    logger.info(
        "GL%d(F%d): %d cuspidal, %d regular orbits", n, F.q, result.cuspidal_count, result.orbit_count
    )
    return result


def cuspidal_degree(n: int, q: int) -> int:
    """(q - 1)(q^2 - 1)...(q^(n-1) - 1)"""
    degree = 1
    for i in range(1, n):
        degree *= q**i - 1
    return degree

