"""
Cuspidal Type Parameters

A cuspidal irreducible representation of GL_n(k_F) is attached to a character phi of
E^x, E/F unramified of degree n, whose restriction to mu_E is regular under
Gamma = Gal(E/F). On a regular elliptic element z.zeta its trace is

    (-1)^(n-1) phi(z) sum_{delta in Gamma} phi^delta(zeta)
"""

from __future__ import annotations

from dataclasses import dataclass

from tame_langlands.exceptions import FieldMismatchError, InputError, NotRegularError
from tame_langlands.plugins.arithmetic import Cyclotomic, csum
from tame_langlands.plugins.characters import TameCharacter, compose_with_norm, evaluate
from tame_langlands.plugins.tame_fields import (
    FieldSkeleton,
    TameExtensionSpec,
    TameTorusElem,
    aut_group,
    inclusion,
    trivial_extension,
)


def unramified_field(F: FieldSkeleton, n: int) -> TameExtensionSpec:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return TameExtensionSpec(F, 1, n, 0)


def unit_part_regular(chi: TameCharacter, gamma: list) -> bool:
    """Regularity of chi restricted to mu_E: a q^i != a mod (q_E - 1) for 0 < i < n"""
    unit = TameCharacter(chi.field, chi.a)
    return sum(1 for d in gamma if unit.act(d) == unit) == 1


def is_regular_unit(zeta: TameTorusElem, gamma: list) -> bool:
    return zeta.is_unit() and sum(1 for d in gamma if d.apply(zeta) == zeta) == 1


@dataclass(frozen=True)
class CuspidalTypeParam:
    n: int
    base: FieldSkeleton
    phi: TameCharacter

    def __post_init__(self):
        E = unramified_field(self.base, self.n)
        if self.phi.field != E:
            raise FieldMismatchError(f"phi must live on {E.literal()}, got {self.phi.field.literal()}")
        if not unit_part_regular(self.phi, aut_group(E)):
            raise NotRegularError(f"{self.phi.literal()} is not Gamma-regular on mu_E")

    @property
    def field(self) -> TameExtensionSpec:
        return self.phi.field

    @property
    def gamma(self) -> list:
        return aut_group(self.field)

    def literal(self) -> str:
        return f"type n={self.n} {self.base.literal()} {self.phi.literal()}"


def green_trace(param: CuspidalTypeParam, z: TameTorusElem, zeta: TameTorusElem) -> Cyclotomic:
    """
    Trace of lambda_phi at the regular elliptic element z.zeta

    Args:
        param: the cuspidal type parameter
        z: element of the torus of F
        zeta: Gamma-regular element of mu_E

    Raises:
        NotRegularError: if zeta is not a Gamma-regular unit
    """
    E = param.field
    gamma = param.gamma
    if zeta.field != E:
        raise FieldMismatchError("zeta must lie in mu_E")
    if not is_regular_unit(zeta, gamma):
        raise NotRegularError(f"zeta = zeta_E^{zeta.a} is not Gamma-regular")
    F = trivial_extension(param.base)
    if z.field != F:
        raise FieldMismatchError("z must lie in F^x")
    central = evaluate(param.phi, inclusion(F, E).apply(z))
    total = csum(evaluate(param.phi.act(d), zeta) for d in gamma)
    sign = -1 if param.n % 2 == 0 else 1
    return central * total * sign


def twist_param(param: CuspidalTypeParam, chi: TameCharacter) -> CuspidalTypeParam:
    """chi_E phi, the parameter of chi.lambda_phi"""
    return CuspidalTypeParam(param.n, param.base, compose_with_norm(chi, param.field) * param.phi)


def conjugate_params(first: CuspidalTypeParam, second: CuspidalTypeParam) -> bool:
    """True when the two parameters define the same type, i.e. phi's are Gamma-conjugate"""
    if first.field != second.field:
        return False
    return any(first.phi.act(d) == second.phi for d in first.gamma)
