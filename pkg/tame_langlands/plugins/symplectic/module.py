"""
Symplectic F_p C-Modules

A module is a multiset of irreducible summands, each either a hyperbolic H(V_chi) or an
anisotropic V_chi. Modules are kept normalized: H(V_chi) for a chi of anisotropic type is
stored as two anisotropic summands, since the two are isometric.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from tame_langlands.exceptions import InconsistentMarkingError, InputError

from .bar_character import BarCharacter, Element, OperatorGroup


class FormType(str, Enum):
    HYPERBOLIC = "h"
    ANISOTROPIC = "a"


@dataclass(frozen=True, order=True)
class Summand:
    form: FormType
    character: BarCharacter = field(compare=False)
    key: tuple[int, ...] = field(default=(), init=False)

    def __post_init__(self):
        chi = self.character
        if self.form is FormType.HYPERBOLIC:
            canonical = min(chi.canonical(), chi.inverse().canonical(), key=lambda c: c.exps)
        else:
            if not chi.is_anisotropic_type():
                raise InputError(f"character {chi.literal()} carries no anisotropic form")
            canonical = chi.canonical()
        object.__setattr__(self, "character", canonical)
        object.__setattr__(self, "key", canonical.exps)

    @property
    def dimension(self) -> int:
        k = self.character.degree
        return 2 * k if self.form is FormType.HYPERBOLIC else k

    def literal(self) -> str:
        return f"{self.form.value}:{self.character.literal()}"


def _normalize(summands) -> tuple[Summand, ...]:
    out = []
    for s in summands:
        if s.form is FormType.HYPERBOLIC and s.character.is_anisotropic_type():
            out.extend([Summand(FormType.ANISOTROPIC, s.character)] * 2)
        else:
            out.append(s)
    return tuple(sorted(out, key=lambda s: (s.form.value, s.key)))


@dataclass(frozen=True)
class SymplecticModule:
    """
    A symplectic F_p C-module up to isometry

    Markings: `mu` generates the distinguished cyclic subgroup, `varpi` and `varpi_alpha`
    are the two marked elements.
    """

    p: int
    group: OperatorGroup
    summands: tuple[Summand, ...] = ()
    mu: Element | None = None
    varpi: Element | None = None
    varpi_alpha: Element | None = None

    def __post_init__(self):
        for s in self.summands:
            if s.character.group != self.group or s.character.p != self.p:
                raise InputError("summand character is not a character of the operator group")
        object.__setattr__(self, "summands", _normalize(self.summands))
        for name in ("mu", "varpi", "varpi_alpha"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, self.group.normalize(value))

    @property
    def dimension(self) -> int:
        return sum(s.dimension for s in self.summands)

    def is_zero(self) -> bool:
        return not self.summands

    def with_markings(self, mu=None, varpi=None, varpi_alpha=None) -> SymplecticModule:
        return replace(self, mu=mu, varpi=varpi, varpi_alpha=varpi_alpha)

    def mu_subgroup(self) -> list[Element]:
        if self.mu is None:
            raise InconsistentMarkingError("module carries no mu marking")
        return self.group.cyclic_subgroup(self.mu)

    def literal(self) -> str:
        parts = [f"module p={self.p} C={self.group.literal()}"]
        for name in ("mu", "varpi", "varpi_alpha"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={'.'.join(str(a) for a in value)}")
        parts.append("summands=" + ";".join(s.literal() for s in self.summands))
        return " ".join(parts)


def hyperbolic(chi: BarCharacter) -> SymplecticModule:
    """H(V_chi) = V_chi + V_chi^* with the hyperbolic form"""
    return SymplecticModule(chi.p, chi.group, (Summand(FormType.HYPERBOLIC, chi),))


def anisotropic(chi: BarCharacter) -> SymplecticModule:
    return SymplecticModule(chi.p, chi.group, (Summand(FormType.ANISOTROPIC, chi),))


def direct_sum(*modules: SymplecticModule) -> SymplecticModule:
    if not modules:
        raise InputError("direct sum of nothing")
    first = modules[0]
    for m in modules[1:]:
        if (m.p, m.group) != (first.p, first.group):
            raise InputError("modules over different operator groups")
    summands = tuple(s for m in modules for s in m.summands)
    return replace(first, summands=summands)


def fixed_points(M: SymplecticModule, D: list[Element]) -> SymplecticModule:
    """M^D: a summand survives exactly when D acts trivially on it"""
    members = M.group.span([M.group.normalize(x) for x in D])
    kept = tuple(s for s in M.summands if s.character.is_trivial_on(members))
    return replace(M, summands=kept)


def restrict(M: SymplecticModule, x: Element) -> SymplecticModule:
    """
    M as a module over the cyclic subgroup <x>

    With chi' = chi|<x> and d = [k[chi] : k[chi']]:
        H(V_chi)            -> d H(V_chi')
        V_chi, d odd        -> d V_chi'
        V_chi, d even       -> (d/2) H(V_chi'), chi' of order <= 2
    """
    x = M.group.normalize(x)
    sub = OperatorGroup.cyclic(M.group.element_order(x))
    out: list[Summand] = []
    for s in M.summands:
        chi = s.character.restrict(x)
        d = s.character.degree // chi.degree
        if s.form is FormType.HYPERBOLIC:
            out.extend([Summand(FormType.HYPERBOLIC, chi)] * d)
        elif d % 2:
            out.extend([Summand(FormType.ANISOTROPIC, chi)] * d)
        else:
            out.extend([Summand(FormType.HYPERBOLIC, chi)] * (d // 2))
    return SymplecticModule(M.p, sub, tuple(out))
