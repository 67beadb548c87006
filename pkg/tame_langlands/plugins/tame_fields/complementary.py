"""
Complementary Subgroups

C_E(varpi_F) = <varpi_E, mu_E> is the whole torus in this model. The non-trivial content is
the compatibility C_E intersected with L^x equals C_L for every intermediate L, checked as an
identity of subgroups over a window of valuations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .extension import TameExtensionSpec, intermediate_fields, subextension_shift
from .norms import inclusion
from .torus import TameTorusElem, root_generator, uniformizer


@dataclass(frozen=True)
class ComplementaryCertificate:
    subfield: TameExtensionSpec
    window: int
    passed: bool


@dataclass(frozen=True)
class ComplementaryData:
    field: TameExtensionSpec
    generators: tuple[TameTorusElem, TameTorusElem]
    certificates: tuple[ComplementaryCertificate, ...] = field(default_factory=tuple)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.certificates)


def _in_subfield(x: TameTorusElem, E: TameExtensionSpec, L: TameExtensionSpec) -> bool:
    """Membership of x in the image of L^x, decided from valuations and root exponents"""
    e_rel = E.e // L.e
    if x.v % e_rel:
        return False
    c = subextension_shift(E, L)
    ratio = max(E.mu_order, 1) // max(L.mu_order, 1)
    return (x.a - c * (x.v // e_rel)) % ratio == 0


def _generated(gens: list[TameTorusElem], E: TameExtensionSpec, window: int) -> set[tuple[int, int]]:
    """Elements with 0 <= v < window of the subgroup generated by gens (v >= 0 entries)"""
    start = TameTorusElem.identity(E)
    seen = {(start.v, start.a)}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                for y in (x * g, x * g.inverse()):
                    if 0 <= y.v < window and (y.v, y.a) not in seen:
                        seen.add((y.v, y.a))
                        nxt.append(y)
        frontier = nxt
    return seen


def complementary_data(E: TameExtensionSpec) -> ComplementaryData:
    """Generators of C_E(varpi_F) and one certificate per intermediate field"""
    window = 2 * E.e
    modulus = max(E.mu_order, 1)
    certificates = []
    for L in intermediate_fields(E):
        embed = inclusion(L, E)
        image = _generated([embed.apply(uniformizer(L)), embed.apply(root_generator(L))], E, window)
        meet = {
            (v, a)
            for v in range(window)
            for a in range(modulus)
            if _in_subfield(TameTorusElem(E, v, a), E, L)
        }
        certificates.append(ComplementaryCertificate(L, window, image == meet))
    return ComplementaryData(E, (uniformizer(E), root_generator(E)), tuple(certificates))
