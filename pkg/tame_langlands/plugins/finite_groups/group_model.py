"""
Finite Group Models

Explicit finite groups: an element list, a multiplication rule looked up through an index,
conjugacy classes and power maps. Elements are any hashable values; all bookkeeping is done
on their indices, with the identity at index 0.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Hashable, Iterable, Sequence
from math import lcm

from sympy.combinatorics import Permutation

from tame_langlands.exceptions import BoundExceededError, InputError, ValidationError
from tame_langlands.utils.logger import get_logger

logger = get_logger(__name__)

Op = Callable[[Hashable, Hashable], Hashable]


class FiniteGroupModel:
    """A finite group given by its elements and a multiplication operation"""

    def __init__(
        self,
        name: str,
        elements: Sequence[Hashable],
        op: Op,
        generators: Iterable[int] | None = None,
        check: bool = True,
    ):
        if not elements:
            raise InputError("a group needs at least its identity")
        self.name = name
        self.elements = list(elements)
        self.op = op
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise InputError(f"{name}: repeated elements")
        self.generators = tuple(generators) if generators is not None else tuple(range(len(self.elements)))
        self.parent: FiniteGroupModel | None = None
        self.parent_indices: tuple[int, ...] = ()
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._inverses: list[int] | None = None
        self._orders: list[int] | None = None
        self._classes: list[tuple[int, ...]] | None = None
        self._class_of: list[int] | None = None
        if check:
            self._check_axioms()

    # construction

    @classmethod
    def from_elements(
        cls, name: str, elements: Sequence[Hashable], op: Op, identity: Hashable, generators: Iterable[Hashable] | None = None
    ) -> FiniteGroupModel:
        """Wrap a complete element list; the identity is moved to the front"""
        ordered = [identity] + [x for x in elements if x != identity]
        index = {x: i for i, x in enumerate(ordered)}
        if generators is None:
            generators = _greedy_generators(ordered, op)
        return cls(name, ordered, op, [index[g] for g in generators])

    @classmethod
    def generate(
        cls, name: str, generators: Sequence[Hashable], op: Op, identity: Hashable, bound: int = 2000
    ) -> FiniteGroupModel:
        """
        Close a set of generators under the operation (breadth first)

        Raises:
            BoundExceededError: if more than `bound` elements are produced
        """
        elements = [identity]
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in generators:
                    y = op(x, g)
                    if y not in seen:
                        seen.add(y)
                        elements.append(y)
                        nxt.append(y)
                        if len(elements) > bound:
                            raise BoundExceededError(f"{name}: more than {bound} elements")
            frontier = nxt
        index = {x: i for i, x in enumerate(elements)}
        return cls(name, elements, op, [index[g] for g in generators])

    @classmethod
    def from_permutations(
        cls, name: str, generators: Sequence[str | Permutation], degree: int | None = None, bound: int = 2000
    ) -> FiniteGroupModel:
        """Permutation group from generators, either Permutation objects or cycle strings like '(0 1 2)(3 4)'"""
        perms = [g if isinstance(g, Permutation) else parse_cycles(g, degree) for g in generators]
        size = max([degree or 0] + [p.size for p in perms]) or 1
        perms = [Permutation(p.array_form, size=size) for p in perms]

        def compose(a: Permutation, b: Permutation) -> Permutation:
            # a then b
            return a * b

        return cls.generate(name, perms, compose, Permutation(size - 1) if size > 1 else Permutation([0]), bound)

    def subgroup(self, indices: Iterable[int], name: str | None = None) -> FiniteGroupModel:
        """The subgroup generated by the given element indices, remembering its embedding"""
        gens = [self.elements[i] for i in indices]
        sub = FiniteGroupModel.generate(name or f"{self.name}_sub", gens, self.op, self.elements[0], self.order)
        sub.parent = self
        sub.parent_indices = tuple(self._index[x] for x in sub.elements)
        return sub

    # basic structure

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroupModel({self.name!r}, order={self.order})"

    def index(self, x: Hashable) -> int:
        try:
            return self._index[x]
        except KeyError as exc:
            raise InputError(f"{x!r} is not an element of {self.name}") from exc

    def element(self, i: int) -> Hashable:
        return self.elements[i]

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        found = self._mul_cache.get(key)
        if found is None:
            product = self.op(self.elements[i], self.elements[j])
            found = self._index.get(product)
            if found is None:
                raise ValidationError(f"{self.name}: product leaves the element list")
            self._mul_cache[key] = found
        return found

    def product(self, indices: Iterable[int]) -> int:
        result = 0
        for i in indices:
            result = self.mul(result, i)
        return result

    def inv(self, i: int) -> int:
        if self._inverses is None:
            self._inverses = self._compute_inverses()
        return self._inverses[i]

    def _compute_inverses(self) -> list[int]:
        inverses = [0] * self.order
        for i in range(self.order):
            k = i
            previous = 0
            while k != 0:
                previous = k
                k = self.mul(k, i)
            inverses[i] = previous if i else 0
        return inverses

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(i), -k)
        k %= self.element_order(i)
        result = 0
        base = i
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = [0] * self.order
        if not self._orders[i]:
            k, current = 1, i
            while current != 0:
                current = self.mul(current, i)
                k += 1
            self._orders[i] = k
        return self._orders[i]

    def exponent(self) -> int:
        return lcm(*(self.element_order(i) for i in range(self.order)))

    def conjugate(self, x: int, g: int) -> int:
        """g x g^-1"""
        return self.mul(self.mul(g, x), self.inv(g))

    def commutes(self, i: int, j: int) -> bool:
        return self.mul(i, j) == self.mul(j, i)

    def is_abelian(self) -> bool:
        return all(self.commutes(g, h) for g in self.generators for h in self.generators)

    def centralizer(self, i: int) -> list[int]:
        return [g for g in range(self.order) if self.commutes(g, i)]

    # conjugacy classes

    @property
    def classes(self) -> list[tuple[int, ...]]:
        """Classes with the identity class first, then by (element order, size, smallest index)"""
        if self._classes is None:
            self._compute_classes()
        return self._classes

    def _compute_classes(self) -> None:
        assigned = [False] * self.order
        found = []
        for start in range(self.order):
            if assigned[start]:
                continue
            members = {start}
            frontier = [start]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = self.conjugate(x, g)
                        if y not in members:
                            members.add(y)
                            nxt.append(y)
                frontier = nxt
            for x in members:
                assigned[x] = True
            found.append(tuple(sorted(members)))
        found.sort(key=lambda c: (c[0] != 0, self.element_order(c[0]), len(c), c[0]))
        self._classes = found
        self._class_of = [0] * self.order
        for k, members in enumerate(found):
            for x in members:
                self._class_of[x] = k
        logger.debug("%s: %d classes", self.name, len(found))

    def class_of(self, i: int) -> int:
        if self._class_of is None:
            self._compute_classes()
        return self._class_of[i]

    @property
    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    @property
    def class_reps(self) -> list[int]:
        return [c[0] for c in self.classes]

    def power_map(self, k: int) -> list[int]:
        """Class index of g^k for g running over the class representatives"""
        return [self.class_of(self.power(r, k)) for r in self.class_reps]

    def inverse_class(self, c: int) -> int:
        return self.class_of(self.inv(self.classes[c][0]))

    # checks

    def _check_axioms(self) -> None:
        """Identity, closure and associativity against generator triples"""
        identity = self.elements[0]
        for x in self.elements[: min(self.order, 64)]:
            if self.op(identity, x) != x or self.op(x, identity) != x:
                raise ValidationError(f"{self.name}: element 0 is not an identity")
        for x in range(self.order):
            for g in self.generators:
                xg = self.mul(x, g)
                for h in self.generators:
                    if self.mul(xg, h) != self.mul(x, self.mul(g, h)):
                        raise ValidationError(f"{self.name}: operation is not associative")

    def is_subgroup(self, indices: Iterable[int]) -> bool:
        members = set(indices)
        if 0 not in members:
            return False
        return all(self.mul(a, self.inv(b)) in members for a in members for b in members)

    def is_normal(self, indices: Iterable[int]) -> bool:
        members = set(indices)
        return self.is_subgroup(members) and all(
            self.conjugate(x, g) in members for x in members for g in self.generators
        )


def _closure(generators: list[Hashable], op: Op, identity: Hashable) -> set[Hashable]:
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = op(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _greedy_generators(ordered: list[Hashable], op: Op) -> list[Hashable]:
    """Pick elements in list order until they generate everything"""
    identity = ordered[0]
    gens: list[Hashable] = []
    reached = {identity}
    for x in ordered:
        if x not in reached:
            gens.append(x)
            reached = _closure(gens, op, identity)
    if len(reached) != len(ordered):
        raise ValidationError("element list is not closed under the operation")
    return gens or [identity]


CYCLES = re.compile(r"(?:\(\s*\d+(?:[\s,]+\d+)*\s*\))+")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """
    Parse cycle notation '(0 1 2)(3 4)' or '(0,1,2)(3,4)' on points 0..degree-1

    Raises:
        InputError: on unbalanced brackets, non-integer or repeated points, or a point
            outside 0..degree-1
    """
    cleaned = text.strip()
    if cleaned in ("", "()", "e", "1"):
        return Permutation(list(range(degree or 1)))
    if not CYCLES.fullmatch(cleaned):
        raise InputError(f"malformed cycle notation: {text!r}")
    cycles = [[int(x) for x in body.replace(",", " ").split()] for body in re.findall(r"\(([^()]*)\)", cleaned)]
    for cycle in cycles:
        if len(set(cycle)) != len(cycle):
            raise InputError(f"repeated point in cycle notation: {text!r}")
    largest = max(max(c) for c in cycles)
    if degree is not None and largest >= degree:
        raise InputError(f"point {largest} outside 0..{degree - 1}")
    size = max(degree or 0, largest + 1)
    perm = Permutation(list(range(size)))
    for cycle in cycles:
        if len(cycle) > 1:
            perm = perm * Permutation([cycle], size=size)
    return perm


def cyclic_group(n: int) -> FiniteGroupModel:
    return FiniteGroupModel.from_elements(
        f"C{n}", list(range(n)), lambda a, b: (a + b) % n, 0, generators=[1 % n]
    )


def abelian_group(orders: Sequence[int]) -> FiniteGroupModel:
    """Direct product of cyclic groups, elements as exponent tuples"""
    if any(n < 1 for n in orders):
        raise InputError(f"cyclic orders must be positive, got {list(orders)}")
    gens = []
    for i in range(len(orders)):
        gens.append(tuple(1 % orders[j] if j == i else 0 for j in range(len(orders))))
    zero = tuple(0 for _ in orders)

    def add(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, orders))

    name = "x".join(str(n) for n in orders) or "1"
    return FiniteGroupModel.generate(f"C{name}", gens or [zero], add, zero)


def symmetric_group(n: int) -> FiniteGroupModel:
    if n < 1:
        raise InputError("S_n needs n >= 1")
    if n == 1:
        return cyclic_group(1)
    cycle = "(" + " ".join(str(i) for i in range(n)) + ")"
    return FiniteGroupModel.from_permutations(f"S{n}", ["(0 1)", cycle], degree=n)


def _general_linear(match: re.Match) -> FiniteGroupModel:
    # imported here: finite_types imports this module
    from sympy import factorint

    from tame_langlands.plugins.finite_types import general_linear_group
    from tame_langlands.plugins.tame_fields import FieldSkeleton

    q = int(match.group(2))
    factors = factorint(q)
    if len(factors) != 1:
        raise InputError(f"q = {q} is not a prime power")
    ((p, f0),) = factors.items()
    return general_linear_group(int(match.group(1)), FieldSkeleton(int(p), int(f0)))


GROUP_PATTERNS: list[tuple[re.Pattern, Callable[[re.Match], FiniteGroupModel]]] = [
    (re.compile(r"C(\d+)"), lambda m: cyclic_group(int(m.group(1)))),
    (re.compile(r"C(\d+(?:x\d+)+)"), lambda m: abelian_group([int(n) for n in m.group(1).split("x")])),
    (re.compile(r"S(\d+)"), lambda m: symmetric_group(int(m.group(1)))),
    (re.compile(r"GL(\d+)\(F(\d+)\)"), _general_linear),
]


def resolve_group(name: str) -> FiniteGroupModel:
    """A group from its short name: C6, C2x4, S4 or GL2(F3)"""
    for pattern, build in GROUP_PATTERNS:
        match = pattern.fullmatch(name)
        if match:
            return build(match)
    raise InputError(f"unknown group name {name!r}; try C6, C2x4, S4 or GL2(F3)")
