"""
Tame Extension Specs

A tame extension E/F is modelled by (e, f, u): E contains the unramified extension K0 of
degree f, and a prime element varpi_E with varpi_E^e = zeta_E^u varpi_F, where zeta_E is
the distinguished generator of mu_E. Everything is read modulo 1-units.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from sympy import divisors, isprime

from tame_langlands.exceptions import InputError, NonTameError, NotSubextensionError


@dataclass(frozen=True, order=True)
class FieldSkeleton:
    """Residue data of a non-Archimedean local field: q = p^f0"""

    p: int
    f0: int = 1

    def __post_init__(self):
        if not isprime(self.p):
            raise InputError(f"Residue characteristic must be prime, got {self.p}")
        if self.f0 < 1:
            raise InputError(f"Residue degree must be positive, got {self.f0}")

    @property
    def q(self) -> int:
        return self.p**self.f0

    def literal(self) -> str:
        return f"p={self.p} f0={self.f0}"


@dataclass(frozen=True, order=True)
class TameExtensionSpec:
    """E/F with ramification index e, residue degree f and Krasner parameter u"""

    base: FieldSkeleton
    e: int = 1
    f: int = 1
    u: int = 0

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def q_E(self) -> int:
        return self.base.q**self.f

    @property
    def mu_order(self) -> int:
        """Order of mu_E, i.e. q_E - 1"""
        return self.q_E - 1

    @property
    def degree(self) -> int:
        return self.e * self.f

    @property
    def residue_skeleton(self) -> FieldSkeleton:
        return FieldSkeleton(self.base.p, self.base.f0 * self.f)

    def is_trivial(self) -> bool:
        return self.e == 1 and self.f == 1

    def literal(self) -> str:
        return f"ext p={self.base.p} f0={self.base.f0} e={self.e} f={self.f} u={self.u}"


def make_extension(base: FieldSkeleton, e: int = 1, f: int = 1, u: int = 0) -> TameExtensionSpec:
    """
    Build and validate a tame extension spec

    Raises:
        NonTameError: if p divides e
        InputError: if e, f or u is out of range
    """
    if e < 1 or f < 1:
        raise InputError(f"e and f must be positive, got e={e} f={f}")
    if e % base.p == 0:
        raise NonTameError(f"e={e} is divisible by p={base.p}; the extension is not tame")
    modulus = base.q**f - 1
    if not 0 <= u < max(modulus, 1):
        raise InputError(f"u={u} must lie in [0, {modulus})")
    return TameExtensionSpec(base, e, f, u)


def trivial_extension(base: FieldSkeleton) -> TameExtensionSpec:
    return TameExtensionSpec(base, 1, 1, 0)


def unramified_lift(E: TameExtensionSpec, m: int) -> TameExtensionSpec:
    """E_m: the unramified extension of E of degree m, with varpi_{E_m} = varpi_E"""
    if m < 1:
        raise InputError(f"m must be positive, got {m}")
    ratio = (E.q_E**m - 1) // (E.q_E - 1)
    return make_extension(E.base, E.e, E.f * m, E.u * ratio)


def max_unramified(E: TameExtensionSpec) -> TameExtensionSpec:
    """K0: the maximal unramified sub-extension, with varpi_K0 = varpi_F"""
    return TameExtensionSpec(E.base, 1, E.f, 0)


def subextension_shift(E: TameExtensionSpec, L: TameExtensionSpec) -> int:
    """
    The exponent c with varpi_L = varpi_E^(e/e_L) zeta_E^c

    Raises:
        NotSubextensionError: if L is not a sub-extension of E
    """
    if E.base != L.base or E.e % L.e or E.f % L.f:
        raise NotSubextensionError(f"{L.literal()} is not a sub-extension of {E.literal()}")
    modulus = E.mu_order
    ratio = modulus // L.mu_order
    rhs = (L.u * ratio - E.u) % modulus
    g = gcd(L.e, modulus)
    if rhs % g:
        raise NotSubextensionError(f"{L.literal()} does not embed in {E.literal()}")
    reduced = modulus // g
    if reduced == 1:
        return 0
    return (rhs // g) * pow(L.e // g, -1, reduced) % reduced


def is_subextension(E: TameExtensionSpec, L: TameExtensionSpec) -> bool:
    try:
        subextension_shift(E, L)
    except NotSubextensionError:
        return False
    return True


def relative_spec(E: TameExtensionSpec, L: TameExtensionSpec) -> TameExtensionSpec:
    """E viewed as a tame extension of L, with L playing the role of the base field"""
    c = subextension_shift(E, L)
    base = FieldSkeleton(L.base.p, L.base.f0 * L.f)
    return TameExtensionSpec(base, E.e // L.e, E.f // L.f, (-c) % max(E.mu_order, 1))


def intermediate_fields(E: TameExtensionSpec) -> list[TameExtensionSpec]:
    """One spec per sub-extension L of E (F and E included), ordered by (e_L, f_L, u)"""
    found: dict[tuple[int, int, int], TameExtensionSpec] = {}
    for e_L in divisors(E.e):
        for f_L in divisors(E.f):
            ratio = E.mu_order // (E.q**f_L - 1)
            for u_L in range(max(E.q**f_L - 1, 1)):
                L = TameExtensionSpec(E.base, e_L, f_L, u_L)
                try:
                    c = subextension_shift(E, L)
                except NotSubextensionError:
                    continue
                found.setdefault((e_L, f_L, c % max(ratio, 1)), L)
    return sorted(found.values(), key=lambda L: (L.e, L.f, L.u))
