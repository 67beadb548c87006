"""
Tame Quotient Torus

E^x / U^1_E is the group Z x Z/(q_E - 1): (v, a) stands for varpi_E^v zeta_E^a.
TorusMorphism covers automorphisms, norms and inclusions between such tori.
"""

from __future__ import annotations

from dataclasses import dataclass

from tame_langlands.exceptions import FieldMismatchError, InputError

from .extension import TameExtensionSpec


@dataclass(frozen=True)
class TameTorusElem:
    field: TameExtensionSpec
    v: int
    a: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % max(self.field.mu_order, 1))

    @classmethod
    def identity(cls, field: TameExtensionSpec) -> TameTorusElem:
        return cls(field, 0, 0)

    def _check(self, other: TameTorusElem) -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field.literal()} vs {other.field.literal()}")

    def __mul__(self, other: TameTorusElem) -> TameTorusElem:
        self._check(other)
        return TameTorusElem(self.field, self.v + other.v, self.a + other.a)

    def __pow__(self, k: int) -> TameTorusElem:
        return TameTorusElem(self.field, self.v * k, self.a * k)

    def inverse(self) -> TameTorusElem:
        return self**-1

    def is_unit(self) -> bool:
        return self.v == 0


def uniformizer(E: TameExtensionSpec) -> TameTorusElem:
    return TameTorusElem(E, 1, 0)


def root_generator(E: TameExtensionSpec) -> TameTorusElem:
    return TameTorusElem(E, 0, 1)


def base_uniformizer(E: TameExtensionSpec) -> TameTorusElem:
    """varpi_F inside E: varpi_E^e zeta_E^(-u)"""
    return TameTorusElem(E, E.e, -E.u)


def base_root_generator(E: TameExtensionSpec) -> TameTorusElem:
    """zeta_F inside E: zeta_E^((q_E - 1)/(q - 1))"""
    return TameTorusElem(E, 0, E.mu_order // max(E.q - 1, 1))


@dataclass(frozen=True)
class TorusMorphism:
    """Homomorphism determined by the images of varpi_E and zeta_E"""

    source: TameExtensionSpec
    target: TameExtensionSpec
    varpi_image: TameTorusElem
    zeta_multiplier: int

    def __post_init__(self):
        if self.varpi_image.field != self.target:
            raise FieldMismatchError("varpi image must lie in the target torus")
        modulus = max(self.target.mu_order, 1)
        object.__setattr__(self, "zeta_multiplier", self.zeta_multiplier % modulus)
        # zeta_E has order q_E - 1, so its image must too divide that
        if (self.zeta_multiplier * self.source.mu_order) % modulus:
            raise InputError("zeta image does not have order dividing q_E - 1")

    @classmethod
    def identity(cls, E: TameExtensionSpec) -> TorusMorphism:
        return cls(E, E, uniformizer(E), 1)

    def apply(self, x: TameTorusElem) -> TameTorusElem:
        if x.field != self.source:
            raise FieldMismatchError(f"{x.field.literal()} is not the source {self.source.literal()}")
        unit = TameTorusElem(self.target, 0, x.a * self.zeta_multiplier)
        return self.varpi_image**x.v * unit

    __call__ = apply

    def compose(self, other: TorusMorphism) -> TorusMorphism:
        """self after other"""
        if other.target != self.source:
            raise FieldMismatchError("morphisms are not composable")
        return TorusMorphism(
            other.source,
            self.target,
            self.apply(other.varpi_image),
            self.apply(root_generator(self.source)).a * other.zeta_multiplier,
        )

    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def power(self, k: int) -> TorusMorphism:
        if not self.is_endomorphism():
            raise InputError("only endomorphisms have powers")
        result = TorusMorphism.identity(self.source)
        for _ in range(k):
            result = self.compose(result)
        return result

    def order(self, limit: int = 10_000) -> int:
        identity = TorusMorphism.identity(self.source)
        current = self
        for k in range(1, limit + 1):
            if current == identity:
                return k
            current = self.compose(current)
        raise InputError("morphism has no finite order within the limit")

    def inverse(self) -> TorusMorphism:
        return self.power(self.order() - 1)
