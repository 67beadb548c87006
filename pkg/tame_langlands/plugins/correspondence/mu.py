"""
The Discrepancy Character

mu is the tame character of E_m^x by which the Langlands correspondence differs from the
naive one, read as mu o N_{E_m/E}. It is assembled from two stages:

- the unramified stage, pinned by the symplectic signs of V:
      mu|U^1 = 1,  mu|mu_E = eps1 = t1_mu(V),  mu(varpi_F) = kappa(varpi_F)^(n(d-1)/2),
      mu(varpi)^(p^r) = d' eps_K(varpi) eps_F(varpi) eps0_L(mu_E) eps0_F(mu_E)
- the totally ramified stage, which agrees on U_K with the discriminant character d_{E/K}.

The prime value of the product is only fixed up to the constraint
mu(x)^(p^r) = d_{E_m/F}(x)^(p^r) on F^x; the record keeps every solution and uses the
smallest as representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from sympy import factorint

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy import igcdex

from tame_langlands.exceptions import FieldMismatchError, InputError
from tame_langlands.plugins.characters import TameCharacter, in_x0_subgroup
from tame_langlands.plugins.symplectic.invariants import t1_over
from tame_langlands.plugins.tame_fields import (
    FieldSkeleton,
    base_root_generator,
    base_uniformizer,
    discriminant_character,
    gamma_order,
    make_extension,
    trivial_extension,
)
from tame_langlands.utils.logger import get_logger

from .datum import RamificationDatum, SignInputs, sign_inputs

logger = get_logger(__name__)

HALF = Fraction(1, 2)


class PsiClass(str, Enum):
    UNRAMIFIED = "unramified"
    ORDER_TWO = "order2"


def _mod_one(t: Fraction) -> Fraction:
    return t - (t.numerator // t.denominator)


def _sign_of_turn(t: Fraction) -> int:
    t = _mod_one(t)
    if t == 0:
        return 1
    if t == HALF:
        return -1
    raise InputError(f"exp(2 pi i {t}) is not a sign")


def _turn_of_sign(sign: int) -> Fraction:
    return Fraction(0) if sign == 1 else HALF


def _kappa_power(exponent: Fraction, d: int) -> int:
    """kappa(varpi_F)^exponent for kappa(varpi_F) a primitive d-th root of unity"""
    if exponent.denominator != 1:
        raise InputError(f"exponent {exponent} is not an integer; the tower data are inconsistent")
    return _sign_of_turn(exponent / d)


# unramified stage


def mu_on_units(datum: RamificationDatum) -> TameCharacter:
    """
    The restriction of mu to U_{E_m}, as a character trivial at varpi

    Raises:
        InconsistentMarkingError: if V carries no mu_E marking
    """
    V = datum.V
    Q = datum.E_m.mu_order
    sign = t1_over(V, V.mu, V.mu)
    return TameCharacter(datum.E_m, 0 if sign == 1 else Q // 2)


def mu_at_base_prime(datum: RamificationDatum) -> int:
    """kappa(varpi_F)^(n(d-1)/2)"""
    return _kappa_power(Fraction(datum.n * (datum.d - 1), 2), datum.d)


def d_prime_sign(p: int, r: int, d: int, e: int, d_L: int) -> int:
    """
    kappa(varpi_F)^w with w = p^(2r) d (e(d-1) - (d_L-1)) / 2

    Raises:
        InputError: if w is not an integer or the power is not a sign
    """
    if min(p, d, e, d_L) < 1 or r < 0:
        raise InputError("tower data must be positive")
    w = Fraction(p ** (2 * r) * d * (e * (d - 1) - (d_L - 1)), 2)
    return _kappa_power(w, d)


def tower_sign(datum: RamificationDatum) -> int:
    """
    d' = d kappa(varpi_F)^(p^(2r) d (d_L-1)/2)

    The second factor is the constant part of the correction kappa(varpi_F)^(p^r n (d_L-1)/2e)
    collected from the traces at varpi h.
    """
    p, r, d = datum.p, datum.r, datum.d
    base = d_prime_sign(p, r, d, datum.e, datum.d_L)
    correction = _kappa_power(Fraction(p ** (2 * r) * d * (datum.d_L - 1), 2), d)
    return base * correction


def resolve_prime_value(e: int, p_r: int, zeta_sign: int, base_sign: int, product: int) -> int:
    """
    The x = +-1 with x^e = zeta_sign base_sign and x^(p^r) = product, via a e + b p^r = 1

    Raises:
        InputError: if gcd(e, p^r) != 1
    """
    a, b, g = igcdex(e, p_r)
    if g != 1:
        raise InputError(f"gcd(e, p^r) = gcd({e}, {p_r}) is not 1")
    ramified = zeta_sign * base_sign
    return (ramified ** (int(a) % 2)) * (product ** (int(b) % 2))


def mu_at_ramified_prime(
    datum: RamificationDatum, inputs: SignInputs | None = None, d_prime: int | None = None
) -> int:
    """mu(varpi) for the prime element varpi of E in C_E(varpi_F)"""
    inputs = inputs or sign_inputs(datum)
    d_prime = tower_sign(datum) if d_prime is None else d_prime
    return resolve_prime_value(
        datum.e, datum.p_r, inputs.eps1_zeta, mu_at_base_prime(datum), d_prime * inputs.product
    )


def prime_value_check(datum: RamificationDatum) -> bool:
    """mu(varpi)^e = eps1(zeta) mu(varpi_F) and mu(varpi)^(p^r) = d' * product"""
    inputs = sign_inputs(datum)
    x = mu_at_ramified_prime(datum, inputs)
    ok_e = x ** (datum.e % 2) == inputs.eps1_zeta * mu_at_base_prime(datum)
    ok_p = x ** (datum.p_r % 2) == tower_sign(datum) * inputs.product
    return ok_e and ok_p


def unramified_stage(datum: RamificationDatum) -> TameCharacter:
    units = mu_on_units(datum)
    return TameCharacter(datum.E_m, units.a, _turn_of_sign(mu_at_ramified_prime(datum)))


# totally ramified stage


def ramified_stage(datum: RamificationDatum) -> TameCharacter:
    """d_{E_m/K_m} on mu_{E_m} = mu_{K_m}; the prime value is left at 1"""
    if datum.e == 1:
        return TameCharacter.trivial(datum.E_m)
    disc = discriminant_character(datum.E_m, datum.K)
    return TameCharacter(datum.E_m, disc.a)


def types_theorem_psi(datum: RamificationDatum) -> PsiClass:
    """Ramification class of the character psi twisting the type"""
    unit_order = ramified_stage(datum).unit_order()
    return PsiClass.UNRAMIFIED if unit_order == 1 else PsiClass.ORDER_TWO


# central characters


def _central_turns(datum: RamificationDatum, character: TameCharacter) -> list[tuple[Fraction, Fraction]]:
    E_m = datum.E_m
    F = trivial_extension(datum.base)
    disc = discriminant_character(E_m)
    pairs = []
    for x_m, x_F in ((base_uniformizer(E_m), base_uniformizer(F)), (base_root_generator(E_m), base_root_generator(F))):
        pairs.append((character.turn_at(x_m), disc.turn_at(x_F)))
    return pairs


def central_character_check(datum: RamificationDatum, character: TameCharacter) -> bool:
    """
    mu(x)^(m p^r) = d_{E_m/F}(x)^(p^r) on F^x, checked at varpi_F and zeta_F

    With mu read on E_m as mu o N_{E_m/E}, and N(x) = x^m for x in F, the identity
    becomes (mu o N)(x)^(p^r) = d_{E_m/F}(x)^(p^r).
    """
    if character.field != datum.E_m:
        raise FieldMismatchError("the character is not a character of E_m^x")
    p_r = datum.p_r
    return all(_mod_one(p_r * (lhs - rhs)) == 0 for lhs, rhs in _central_turns(datum, character))


def prime_candidates(datum: RamificationDatum, character: TameCharacter) -> tuple[Fraction, ...]:
    """Every prime turn t such that the character with prime turn t passes the central check"""
    Q = max(datum.E_m.mu_order, 1)
    F = trivial_extension(datum.base)
    delta = discriminant_character(datum.E_m).turn_at(base_uniformizer(F))
    # varpi_F = varpi^e zeta^(-u_m), so mu(varpi_F) = e t - u_m a / Q
    c = datum.p_r * (delta + Fraction(datum.E_m.u * character.a, Q))
    modulus = datum.p_r * datum.e
    return tuple(sorted(_mod_one((c + k) / modulus) for k in range(modulus)))


# tame case


def skeleton_from_q(q: int) -> FieldSkeleton:
    factors = factorint(q)
    if len(factors) != 1:
        raise InputError(f"q = {q} is not a prime power")
    (p, f0), = factors.items()
    return FieldSkeleton(int(p), int(f0))


def tame_case_mu(n: int, q: int) -> TameCharacter:
    """chi_2^(n-1) on K^x, K/F unramified of degree n"""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    K = make_extension(skeleton_from_q(q), 1, n, 0)
    return TameCharacter(K, 0, Fraction(n - 1, 2))


# assembly


@dataclass
class MuRecord:
    datum: RamificationDatum
    character: TameCharacter
    unramified: TameCharacter
    ramified: TameCharacter
    inputs: SignInputs
    base_prime: int
    ramified_prime: int
    candidates: tuple[Fraction, ...]
    psi: PsiClass
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def unit_order(self) -> int:
        return self.character.unit_order()

    def failed_checks(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def row(self) -> list[str]:
        return [
            self.datum.label,
            str(self.unramified.unit_order()),
            f"{self.base_prime:+d}",
            f"{self.ramified_prime:+d}",
            self.psi.value,
            f"{self.character.prime_turn}",
            str(len(self.candidates)),
            "pass" if self.passed else "fail:" + ",".join(self.failed_checks()),
        ]


MU_COLUMNS = ["datum", "eps1_order", "mu_varpi_F", "mu_varpi", "psi", "prime_turn", "lattice", "checks"]


def assemble_mu(
    datum: RamificationDatum,
    unramified: TameCharacter | None = None,
    ramified: TameCharacter | None = None,
) -> MuRecord:
    """
    The product of the two stages, with the prime value fixed by the central character

    Raises:
        FieldMismatchError: if a stage is not a character of E_m^x
    """
    unramified = unramified or unramified_stage(datum)
    ramified = ramified or ramified_stage(datum)
    for stage in (unramified, ramified):
        if stage.field != datum.E_m:
            raise FieldMismatchError(f"stage character over {stage.field.literal()}, expected {datum.E_m.literal()}")
    product = unramified * ramified
    candidates = prime_candidates(datum, product)
    character = TameCharacter(datum.E_m, product.a, candidates[0])
    inputs = sign_inputs(datum)
    record = MuRecord(
        datum=datum,
        character=character,
        unramified=unramified,
        ramified=ramified,
        inputs=inputs,
        base_prime=mu_at_base_prime(datum),
        ramified_prime=mu_at_ramified_prime(datum, inputs),
        candidates=candidates,
        psi=types_theorem_psi(datum),
    )
    record.checks = run_mu_checks(record)
    logger.info("%s: mu %s, checks %s", datum.label, character.literal(), "pass" if record.passed else record.failed_checks())
    return record


def run_mu_checks(record: MuRecord) -> dict[str, bool]:
    datum = record.datum
    checks = {
        "signs": record.base_prime in (1, -1) and record.ramified_prime in (1, -1),
        "prime_value": prime_value_check(datum),
        "central": central_character_check(datum, record.character),
        "types": (record.psi is PsiClass.ORDER_TWO) == (datum.e % 2 == 0),
        "units": (record.character.a - record.unramified.a - record.ramified.a) % max(datum.E_m.mu_order, 1) == 0,
        "eps1_order": record.unramified.unit_order() <= 2,
    }
    if datum.d % 2:
        checks["odd_d"] = record.base_prime == 1
    if datum.r == 0 and datum.E.is_trivial():
        tame = tame_case_mu(datum.m, datum.base.q)
        checks["tame"] = record.unramified.prime_turn == tame.prime_turn and record.character.prime_turn == tame.prime_turn
    if datum.E.f == 1 and datum.m == 1 and gamma_order(datum.E) == 1:
        # |Aut(E|F)| = 1: mu is unramified of order dividing 2n
        checks["order_2n"] = record.character.a == 0 and (2 * datum.n) % record.character.order() == 0
    return checks


def in_ambiguity(datum: RamificationDatum, chi: TameCharacter) -> bool:
    """chi lies in X_0(E)_m, the group mu is determined modulo"""
    if chi.field != datum.E:
        raise FieldMismatchError("ambiguity characters live over E")
    return in_x0_subgroup(chi, datum.m)
