"""
Ramification Data

A RamificationDatum carries the invariants of a wild parameter alpha that the explicit
discrepancy formulas use: the centralizer field E/F, dim alpha = p^r, the multiplicity m,
and the symplectic module V (the avatar of J^1/H^1) over the operator group generated by
the images of mu_{E_m} and of the prime element varpi.

Derived fields: E_m/E unramified of degree m, K/F the maximal unramified sub-extension of
E_m, d = [K:F], n = m [E:F] p^r, and L = F[varpi] with d_L = [E_m:L].
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from math import gcd

from sympy.ntheory import n_order

from tame_langlands.exceptions import InconsistentMarkingError, InputError
from tame_langlands.plugins.characters import TameCharacter
from tame_langlands.plugins.symplectic import SymplecticModule, fixed_points, t_cyclic
from tame_langlands.plugins.symplectic.invariants import t0_over, t1_over
from tame_langlands.plugins.tame_fields import (
    FieldSkeleton,
    TameExtensionSpec,
    TorusMorphism,
    max_unramified,
    relative_galois_group,
    trivial_extension,
    unramified_lift,
)
from tame_langlands.utils.logger import get_logger

logger = get_logger(__name__)


def prime_generated_residue_degree(E: TameExtensionSpec) -> int:
    """
    f(L|F) for L = F[varpi_E]

    varpi_E^e = zeta_E^u varpi_F, so the residue field of L is F_q(zeta_E^u).
    """
    Q = max(E.mu_order, 1)
    order = Q // gcd(E.u, Q)
    return 1 if order == 1 else int(n_order(E.q, order))


@dataclass(frozen=True)
class RamificationDatum:
    E: TameExtensionSpec
    r: int
    m: int
    V: SymplecticModule
    name: str = ""

    def __post_init__(self):
        if self.r < 0:
            raise InputError(f"r must be non-negative, got {self.r}")
        if self.m < 1:
            raise InputError(f"m must be positive, got {self.m}")
        if self.V.p != self.E.p:
            raise InputError(f"V lives over F_{self.V.p}, the fields over residue characteristic {self.E.p}")
        if self.V.mu is None:
            raise InconsistentMarkingError("V carries no mu_E marking")
        if self.V.varpi is None:
            raise InconsistentMarkingError("V carries no varpi marking")
        if self.V.varpi_alpha is None:
            object.__setattr__(self, "V", self.V.with_markings(self.V.mu, self.V.varpi, self.V.varpi))
        self._check_markings()

    def _check_markings(self) -> None:
        """
        Raises:
            InconsistentMarkingError: if mu and varpi do not generate C, mu_F does not act
                trivially, or varpi^e differs from the image of varpi^e / varpi_F in mu_{E_m}
        """
        V, C = self.V, self.V.group
        if len(C.span([V.mu, V.varpi])) != C.order:
            raise InconsistentMarkingError("mu and varpi do not generate the operator group")
        ratio = self.E_m.mu_order // max(self.E.q - 1, 1)
        if C.scale(V.mu, ratio) != C.identity():
            raise InconsistentMarkingError("mu_F does not act trivially on V")
        if C.scale(V.varpi, self.e) != C.scale(V.mu, self.E_m.u):
            raise InconsistentMarkingError(
                f"varpi^{self.e} must equal mu^{self.E_m.u} in the operator group"
            )

    # fields

    @property
    def base(self) -> FieldSkeleton:
        return self.E.base

    @property
    def p(self) -> int:
        return self.E.p

    @property
    def e(self) -> int:
        return self.E.e

    @property
    def p_r(self) -> int:
        return self.p**self.r

    @cached_property
    def E_m(self) -> TameExtensionSpec:
        return unramified_lift(self.E, self.m)

    @cached_property
    def K(self) -> TameExtensionSpec:
        return max_unramified(self.E_m)

    @cached_property
    def delta(self) -> list[TorusMorphism]:
        """Gal(E_m/E)"""
        return relative_galois_group(self.E_m, self.E)

    @property
    def d(self) -> int:
        return self.K.f

    @property
    def n(self) -> int:
        return self.m * self.E.degree * self.p_r

    @property
    def f_L(self) -> int:
        return prime_generated_residue_degree(self.E)

    @property
    def d_L(self) -> int:
        return self.E_m.f // self.f_L

    @property
    def kappa(self) -> TameCharacter:
        """The unramified character of F^x of order d"""
        return TameCharacter(trivial_extension(self.base), 0, Fraction(1, self.d))

    @property
    def zeta(self):
        """varpi^e / varpi_F as an element of the operator group"""
        return self.V.group.scale(self.V.varpi, self.e)

    def with_module(self, V: SymplecticModule) -> RamificationDatum:
        return replace(self, V=V)

    def literal(self) -> str:
        E = self.E
        return f"datum p={E.p} f0={E.base.f0} e={E.e} f={E.f} u={E.u} r={self.r} m={self.m} V={self.V.literal()}"

    @property
    def label(self) -> str:
        return self.name or f"p{self.p}-e{self.e}-f{self.E.f}-r{self.r}-m{self.m}"


@dataclass(frozen=True)
class SignInputs:
    """The symplectic signs entering the prime value of the discrepancy character"""

    eps_F_varpi: int
    eps_K_varpi: int
    eps0_F_mu: int
    eps0_L_mu: int
    eps1_zeta: int

    @property
    def product(self) -> int:
        """eps_K(varpi) eps_F(varpi) eps0_L(mu_E) eps0_F(mu_E)"""
        return self.eps_K_varpi * self.eps_F_varpi * self.eps0_L_mu * self.eps0_F_mu

    def values(self) -> tuple[int, ...]:
        return (self.eps_F_varpi, self.eps_K_varpi, self.eps0_F_mu, self.eps0_L_mu, self.eps1_zeta)


def sign_inputs(datum: RamificationDatum) -> SignInputs:
    """
    Read the signs off V

    V_K = V^{mu_E} (J^1_K/H^1_K) and V_L = V^{varpi} (J^1_L/H^1_L); then
    eps_F(varpi) = t_<varpi>(V), eps_K(varpi) = t_<varpi>(V_K), eps0_F = t0_mu(V),
    eps0_L = t0_mu(V_L) and eps1(zeta) = t1_mu(V; zeta).
    """
    V = datum.V
    mu, varpi = V.mu, V.varpi
    inputs = SignInputs(
        eps_F_varpi=t_cyclic(V, varpi),
        eps_K_varpi=t_cyclic(fixed_points(V, [mu]), varpi),
        eps0_F_mu=t0_over(V, mu),
        eps0_L_mu=t0_over(fixed_points(V, [varpi]), mu),
        eps1_zeta=t1_over(V, mu, datum.zeta),
    )
    logger.debug("%s: sign inputs %s", datum.label, inputs.values())
    return inputs
