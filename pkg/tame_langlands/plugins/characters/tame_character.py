"""
Tame Characters

A finite-order character of E^x trivial on U^1_E is fixed by two numbers: the unit exponent a
(chi(zeta_E) = zeta_{q_E - 1}^a) and the prime value chi(varpi_E), a root of unity stored as
an element t of Q/Z (chi(varpi_E) = exp(2 pi i t)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from tame_langlands.exceptions import FieldMismatchError, InputError
from tame_langlands.plugins.arithmetic import Cyclotomic, root_of_unity
from tame_langlands.plugins.tame_fields.extension import TameExtensionSpec
from tame_langlands.plugins.tame_fields.norms import norm_map
from tame_langlands.plugins.tame_fields.torus import TameTorusElem, TorusMorphism


def _mod_one(t: Fraction) -> Fraction:
    return t - (t.numerator // t.denominator)


@dataclass(frozen=True)
class TameCharacter:
    field: TameExtensionSpec
    a: int
    prime_turn: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % max(self.field.mu_order, 1))
        object.__setattr__(self, "prime_turn", _mod_one(Fraction(self.prime_turn)))

    @classmethod
    def from_literal(cls, field: TameExtensionSpec, a: int, pv_ord: int = 1, pv_exp: int = 0) -> TameCharacter:
        if pv_ord < 1:
            raise InputError(f"pv_ord must be positive, got {pv_ord}")
        return cls(field, a, Fraction(pv_exp, pv_ord))

    @classmethod
    def trivial(cls, field: TameExtensionSpec) -> TameCharacter:
        return cls(field, 0)

    # prime value

    @property
    def pv_ord(self) -> int:
        return self.prime_turn.denominator

    @property
    def pv_exp(self) -> int:
        return self.prime_turn.numerator

    @property
    def prime_value(self) -> Cyclotomic:
        return root_of_unity(self.pv_ord, self.pv_exp)

    def sort_key(self) -> tuple[int, int, int]:
        return (self.a, self.pv_ord, self.pv_exp)

    def literal(self) -> str:
        return f"char a={self.a} pv_ord={self.pv_ord} pv_exp={self.pv_exp}"

    # group structure

    def _check(self, other: TameCharacter) -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field.literal()} vs {other.field.literal()}")

    def __mul__(self, other: TameCharacter) -> TameCharacter:
        self._check(other)
        return TameCharacter(self.field, self.a + other.a, self.prime_turn + other.prime_turn)

    def __pow__(self, k: int) -> TameCharacter:
        return TameCharacter(self.field, self.a * k, self.prime_turn * k)

    def inverse(self) -> TameCharacter:
        return self**-1

    def is_trivial(self) -> bool:
        return self.a == 0 and self.prime_turn == 0

    def is_unramified(self) -> bool:
        return self.a == 0

    def unit_order(self) -> int:
        modulus = max(self.field.mu_order, 1)
        return Fraction(self.a, modulus).denominator

    def order(self) -> int:
        return lcm(self.unit_order(), self.pv_ord)

    # evaluation

    def turn_at(self, x: TameTorusElem) -> Fraction:
        """chi(x) as an element of Q/Z"""
        if x.field != self.field:
            raise FieldMismatchError(f"{x.field.literal()} vs {self.field.literal()}")
        modulus = max(self.field.mu_order, 1)
        return _mod_one(x.v * self.prime_turn + Fraction(self.a * x.a, modulus))

    def precompose(self, morphism: TorusMorphism) -> TameCharacter:
        """chi o morphism, a character of the source torus"""
        if morphism.target != self.field:
            raise FieldMismatchError("morphism does not land in the character's field")
        source = morphism.source
        unit_turn = self.turn_at(TameTorusElem(self.field, 0, morphism.zeta_multiplier))
        a = unit_turn * max(source.mu_order, 1)
        if a.denominator != 1:
            raise InputError("precomposition does not give a character of mu_E")  # pragma: no cover
        return TameCharacter(source, int(a), self.turn_at(morphism.varpi_image))

    def act(self, delta: TorusMorphism) -> TameCharacter:
        """chi^delta = chi o delta^-1"""
        return self.precompose(delta.inverse())


def evaluate(chi: TameCharacter, x: TameTorusElem) -> Cyclotomic:
    t = chi.turn_at(x)
    return root_of_unity(t.denominator, t.numerator)


def compose_with_norm(chi: TameCharacter, E: TameExtensionSpec) -> TameCharacter:
    """chi o N_{E/L} for chi over the sub-extension L"""
    return chi.precompose(norm_map(E, chi.field))


def transport(chi: TameCharacter, field: TameExtensionSpec) -> TameCharacter:
    """Relabel a character over an isomorphic torus (same q_E), e.g. a relative base"""
    if max(field.mu_order, 1) != max(chi.field.mu_order, 1):
        raise FieldMismatchError("tori of different size")
    return TameCharacter(field, chi.a, chi.prime_turn)
