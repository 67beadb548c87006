"""
Coprime Operator Actions

An abelian operator group A, given by its cyclic factors, acting on a FiniteGroupModel G
through one automorphism per generator, stored as a permutation of G's element indices.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from sympy.combinatorics import Permutation, PermutationGroup

from tame_langlands.config.config_manager import get_config_value
from tame_langlands.exceptions import BoundExceededError, InputError, ValidationError
from tame_langlands.plugins.finite_groups import FiniteGroupModel
from tame_langlands.plugins.symplectic import OperatorGroup
from tame_langlands.utils.logger import get_logger

logger = get_logger(__name__)

Perm = tuple[int, ...]


def _compose(first: Perm, second: Perm) -> Perm:
    """first, then second"""
    return tuple(second[i] for i in first)


def _identity_perm(n: int) -> Perm:
    return tuple(range(n))


@dataclass(frozen=True, eq=False)
class OperatorAction:
    A: OperatorGroup
    G: FiniteGroupModel
    images: tuple[Perm, ...]
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(tuple(int(x) for x in perm) for perm in self.images))
        if len(self.images) != self.A.rank:
            raise InputError(f"need {self.A.rank} automorphisms, got {len(self.images)}")
        if self.check:
            self._validate()

    def _validate(self) -> None:
        G = self.G
        n = G.order
        for perm, order in zip(self.images, self.A.orders):
            if sorted(perm) != list(range(n)):
                raise InputError("generator image is not a permutation of the group")
            for x in range(n):
                for g in G.generators:
                    if perm[G.mul(x, g)] != G.mul(perm[x], perm[g]):
                        raise ValidationError("generator does not act by an automorphism")
            power = _identity_perm(n)
            for _ in range(order):
                power = _compose(power, perm)
            if power != _identity_perm(n):
                raise InputError(f"automorphism order does not divide {order}")
        for a in self.images:
            for b in self.images:
                if _compose(a, b) != _compose(b, a):
                    raise InputError("generator images do not commute")
        if gcd(self.image_order, G.order) != 1:
            raise InputError(f"image of A has order {self.image_order}, not prime to |G| = {G.order}")

    @cached_property
    def element_perms(self) -> dict[tuple[int, ...], Perm]:
        n = self.G.order
        out = {}
        for a in self.A.elements():
            perm = _identity_perm(n)
            for gen, k in zip(self.images, a):
                for _ in range(k):
                    perm = _compose(perm, gen)
            out[a] = perm
        return out

    @property
    def image_order(self) -> int:
        return len(set(self.element_perms.values()))

    def act(self, a, g: int) -> int:
        return self.element_perms[self.A.normalize(a)][g]

    def is_trivial(self) -> bool:
        n = self.G.order
        return all(perm == _identity_perm(n) for perm in self.images)

    def fixed_indices(self) -> list[int]:
        return [g for g in range(self.G.order) if all(perm[g] == g for perm in self.images)]

    def fixed_group(self) -> FiniteGroupModel:
        """G^A, with parent_indices pointing back into G"""
        fixed = self.fixed_indices()
        sub = self.G.subgroup(fixed, name=f"{self.G.name}^A")
        if sub.order != len(fixed):
            raise ValidationError("fixed points are not closed")  # pragma: no cover
        return sub

    def restrict(self, b) -> OperatorAction:
        """The action of the cyclic subgroup <b>"""
        b = self.A.normalize(b)
        return OperatorAction(OperatorGroup.cyclic(self.A.element_order(b)), self.G, (self.element_perms[b],), check=False)

    def on_fixed(self, b) -> OperatorAction:
        """A acting on G^<b>"""
        sub = self.restrict(b).fixed_group()
        position = {g: i for i, g in enumerate(sub.parent_indices)}
        images = tuple(tuple(position[perm[g]] for g in sub.parent_indices) for perm in self.images)
        return OperatorAction(self.A, sub, images, check=False)

    def character_is_fixed(self, row) -> bool:
        """A class function on G is A-fixed when it is constant along every orbit of classes"""
        G = self.G
        return all(
            row[G.class_of(perm[rep])] == row[c] for perm in self.images for c, rep in enumerate(G.class_reps)
        )


def semidirect_product(action: OperatorAction, bound: int | None = None) -> FiniteGroupModel:
    """
    A x| G with elements (a, g) = a.g and (a, g)(b, h) = (a + b, b^-1(g) h)

    Raises:
        BoundExceededError: if |A||G| is above bound_group_order
    """
    if bound is None:
        bound = int(get_config_value("bound_group_order", 2000))
    A, G = action.A, action.G
    if A.order * G.order > bound:
        raise BoundExceededError(f"|A x| G| = {A.order * G.order} > {bound}")
    perms = action.element_perms

    def op(x, y):
        a, g = x
        b, h = y
        return A.add(a, b), G.mul(perms[A.neg(b)][g], h)

    identity = (A.identity(), 0)
    elements = [(a, g) for a in A.elements() for g in range(G.order)]
    generators = [(a, 0) for a in A.generators()] + [(A.identity(), g) for g in G.generators]
    H = FiniteGroupModel.from_elements(f"{A.literal()}x|{G.name}", elements, op, identity, generators)
    logger.debug("semidirect product %s of order %d", H.name, H.order)
    return H


def operator_element(H: FiniteGroupModel, a: tuple[int, ...], g: int = 0) -> int:
    """Index of a.g in the semidirect product"""
    return H.index((tuple(a), g))


def permutation_action(G: FiniteGroupModel, generators: Sequence[Permutation]) -> OperatorAction:
    """
    A = <generators> acting on a permutation group G by conjugation, g -> a g a^-1

    The generators must commute and be independent, so that A is the product of the
    cyclic groups they generate.

    Raises:
        InputError: if a generator does not normalize G or the generators do not give a
            direct product of cyclic groups
    """
    if not generators:
        raise InputError("operator group needs at least one generator")
    if not isinstance(G.elements[0], Permutation):
        raise InputError(f"{G.name} is not a permutation group")
    size = G.elements[0].size
    perms = []
    for a in generators:
        if a.size > size:
            raise InputError(f"operator {a.cyclic_form} moves points outside the group's domain")
        perms.append(Permutation(a.array_form, size=size))
    for a in perms:
        for b in perms:
            if a * b != b * a:
                raise InputError("operator generators do not commute")
    orders = tuple(int(a.order()) for a in perms)
    A = OperatorGroup(orders)
    if PermutationGroup(perms).order() != A.order:
        raise InputError(f"operator generators of orders {list(orders)} are not independent")
    images = tuple(tuple(G.index(~a * g * a) for g in G.elements) for a in perms)
    logger.debug("A = %s acting on %s by conjugation", A.literal(), G.name)
    return OperatorAction(A, G, images)
