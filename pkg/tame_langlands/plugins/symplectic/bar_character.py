"""
Operator Groups and Their F_p-Characters

A finite abelian operator group C = C_{n_1} x ... x C_{n_r} with elements as exponent
tuples, and characters chi: C -> F_{p^k}^x. A character is stored by exponents j_i with
chi(c_i) = w_{n_i}^{j_i}; internally it is evaluated through the universal exponent
e(c) = sum x_i j_i (L / n_i) mod L, L = exp(C), so that chi(c) = w_L^{e(c)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, lcm

from sympy.ntheory import n_order

from tame_langlands.exceptions import InputError

Element = tuple[int, ...]


@dataclass(frozen=True, order=True)
class OperatorGroup:
    """Finite abelian group given by its cyclic factor orders"""

    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        if any(n < 1 for n in self.orders):
            raise InputError(f"cyclic orders must be positive, got {self.orders}")

    @classmethod
    def cyclic(cls, n: int) -> OperatorGroup:
        return cls((n,))

    @property
    def order(self) -> int:
        result = 1
        for n in self.orders:
            result *= n
        return result

    @property
    def exponent(self) -> int:
        return lcm(1, *self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def identity(self) -> Element:
        return tuple(0 for _ in self.orders)

    def generators(self) -> list[Element]:
        return [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]

    def elements(self) -> list[Element]:
        return [tuple(x) for x in product(*(range(n) for n in self.orders))]

    def normalize(self, x) -> Element:
        if len(x) != self.rank:
            raise InputError(f"element {tuple(x)} does not have {self.rank} coordinates")
        return tuple(int(a) % n for a, n in zip(x, self.orders))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % n for a, n in zip(x, self.orders))

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def scale(self, x: Element, k: int) -> Element:
        return tuple((a * k) % n for a, n in zip(x, self.orders))

    def element_order(self, x: Element) -> int:
        return lcm(1, *(n // gcd(a, n) for a, n in zip(x, self.orders)))

    def span(self, gens: list[Element]) -> set[Element]:
        """The subgroup generated by gens"""
        found = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.add(x, g)
                    if y not in found:
                        found.add(y)
                        nxt.append(y)
            frontier = nxt
        return found

    def cyclic_subgroup(self, x: Element) -> list[Element]:
        return [self.scale(x, k) for k in range(self.element_order(x))]

    def literal(self) -> str:
        return "x".join(str(n) for n in self.orders)


@dataclass(frozen=True)
class BarCharacter:
    """chi: C -> F_{p^k}^x with chi(c_i) = w_{n_i}^{exps[i]}"""

    group: OperatorGroup
    p: int
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != self.group.rank:
            raise InputError(f"need {self.group.rank} exponents, got {len(self.exps)}")
        if gcd(self.group.order, self.p) != 1:
            raise InputError(f"|C| = {self.group.order} is not prime to p = {self.p}")
        object.__setattr__(self, "exps", tuple(int(j) % n for j, n in zip(self.exps, self.group.orders)))

    @classmethod
    def trivial(cls, group: OperatorGroup, p: int) -> BarCharacter:
        return cls(group, p, group.identity())

    # values

    def universal_exponent(self, x: Element) -> int:
        """e(x) with chi(x) = w_L^e(x), L = exp(C)"""
        L = self.group.exponent
        return sum(a * j * (L // n) for a, j, n in zip(x, self.exps, self.group.orders)) % L

    @cached_property
    def order(self) -> int:
        L = self.group.exponent
        g = L
        for gen in self.group.generators():
            g = gcd(g, self.universal_exponent(gen))
        return L // g

    @cached_property
    def degree(self) -> int:
        """[k[chi] : F_p], the degree of the field generated by the values"""
        return 1 if self.order == 1 else n_order(self.p, self.order)

    def value_exponent(self, x: Element) -> int:
        """chi(x) = w_o^k with o = self.order"""
        return self.universal_exponent(x) * self.order // self.group.exponent

    def is_trivial_on(self, elements) -> bool:
        return all(self.universal_exponent(x) == 0 for x in elements)

    def sign_power(self, x: Element, power: int) -> int:
        """chi(x)^power for a power that lands in {+1, -1}"""
        L = self.group.exponent
        t = self.universal_exponent(x) * power % L
        if t == 0:
            return 1
        if 2 * t == L:
            return -1
        raise InputError(f"chi(x)^{power} is not a sign")

    # group structure

    def __mul__(self, other: BarCharacter) -> BarCharacter:
        return BarCharacter(self.group, self.p, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def power(self, k: int) -> BarCharacter:
        return BarCharacter(self.group, self.p, tuple(a * k for a in self.exps))

    def inverse(self) -> BarCharacter:
        return self.power(-1)

    def frobenius(self, i: int = 1) -> BarCharacter:
        return self.power(pow(self.p, i, self.group.exponent))

    def frobenius_orbit(self) -> list[BarCharacter]:
        return [self.frobenius(i) for i in range(self.degree)]

    def canonical(self) -> BarCharacter:
        return min(self.frobenius_orbit(), key=lambda c: c.exps)

    def is_anisotropic_type(self) -> bool:
        """chi^-1 lies in the Frobenius orbit of chi and chi != chi^-1"""
        inverse = self.inverse()
        return inverse != self and inverse in self.frobenius_orbit()

    def restrict(self, x: Element) -> BarCharacter:
        """Restriction to the cyclic subgroup <x>, as a character of C_{ord x}"""
        n = self.group.element_order(x)
        sub = OperatorGroup.cyclic(n)
        return BarCharacter(sub, self.p, (self.universal_exponent(x) * n // self.group.exponent,))

    def literal(self) -> str:
        return ".".join(str(j) for j in self.exps)


def all_characters(group: OperatorGroup, p: int) -> list[BarCharacter]:
    return [BarCharacter(group, p, exps) for exps in group.elements()]


def frobenius_orbits(group: OperatorGroup, p: int) -> list[BarCharacter]:
    """One canonical representative per Frobenius orbit, sorted by exponents"""
    return sorted({chi.canonical() for chi in all_characters(group, p)}, key=lambda c: c.exps)
