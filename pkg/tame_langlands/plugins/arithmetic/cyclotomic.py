"""
Cyclotomic Integers

Exact arithmetic in Z[zeta_N] on the power basis {zeta_N^i : 0 <= i < phi(N)}, reduced by
the N-th cyclotomic polynomial. Values with different conductors are combined after
embedding both into Z[zeta_lcm].
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from sympy import Poly, Symbol, cyclotomic_poly

from tame_langlands.exceptions import InputError

_X = Symbol("x")


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first"""
    coeffs = Poly(cyclotomic_poly(n, _X), _X).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _reduce(dense: list[int], n: int) -> tuple[int, ...]:
    phi = _cyclotomic_coeffs(n)
    deg = len(phi) - 1
    work = list(dense)
    # Phi_n is monic: x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if not c:
            continue
        shift = i - deg
        for j in range(deg):
            if phi[j]:
                work[shift + j] -= c * phi[j]
        work[i] = 0
    head = work[:deg]
    head.extend([0] * (deg - len(head)))
    return tuple(head)


@dataclass(frozen=True, eq=False)
class Cyclotomic:
    """An element of Z[zeta_N] with integer coefficients on the power basis"""

    conductor: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.conductor < 1:
            raise InputError(f"Conductor must be positive, got {self.conductor}")
        if len(self.coeffs) != len(_cyclotomic_coeffs(self.conductor)) - 1:
            raise InputError(f"Wrong coefficient count for conductor {self.conductor}")

    # construction

    @classmethod
    def from_exponents(cls, conductor: int, terms: dict[int, int] | Iterable[tuple[int, int]]) -> Cyclotomic:
        """Build sum(c * zeta_N^k) from (k, c) pairs; exponents are taken mod N"""
        if conductor < 1:
            raise InputError(f"Conductor must be positive, got {conductor}")
        dense = [0] * conductor
        items = terms.items() if isinstance(terms, dict) else terms
        for k, c in items:
            dense[k % conductor] += c
        return cls(conductor, _reduce(dense, conductor))

    @classmethod
    def from_int(cls, value: int, conductor: int = 1) -> Cyclotomic:
        return cls.from_exponents(conductor, {0: value})

    @classmethod
    def zero(cls, conductor: int = 1) -> Cyclotomic:
        return cls.from_int(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> Cyclotomic:
        return cls.from_int(1, conductor)

    # conductor handling

    def embed(self, conductor: int) -> Cyclotomic:
        """Same value seen in Z[zeta_M] for a multiple M of the conductor"""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise InputError(f"Cannot embed conductor {self.conductor} into {conductor}")
        step = conductor // self.conductor
        return Cyclotomic.from_exponents(conductor, ((i * step, c) for i, c in enumerate(self.coeffs) if c))

    def _align(self, other: Cyclotomic | int) -> tuple[Cyclotomic, Cyclotomic]:
        if isinstance(other, int):
            other = Cyclotomic.from_int(other, self.conductor)
        n = lcm(self.conductor, other.conductor)
        return self.embed(n), other.embed(n)

    # ring operations

    def __add__(self, other: Cyclotomic | int) -> Cyclotomic:
        a, b = self._align(other)
        return Cyclotomic(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other: Cyclotomic | int) -> Cyclotomic:
        a, b = self._align(other)
        return Cyclotomic(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other: int) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other: Cyclotomic | int) -> Cyclotomic:
        if isinstance(other, int):
            return Cyclotomic(self.conductor, tuple(other * x for x in self.coeffs))
        a, b = self._align(other)
        dense = [0] * (len(a.coeffs) + len(b.coeffs))
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    dense[i + j] += x * y
        return Cyclotomic(a.conductor, _reduce(dense, a.conductor))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Cyclotomic:
        if exponent < 0:
            raise InputError("Negative powers are only defined for roots of unity; use conjugate()")
        result = Cyclotomic.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (Cyclotomic, int)):
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # type: ignore[assignment]

    # Galois action

    def galois(self, j: int) -> Cyclotomic:
        """Apply zeta_N -> zeta_N^j"""
        n = self.conductor
        if gcd(j, n) != 1:
            raise InputError(f"Galois exponent {j} is not coprime to {n}")
        return Cyclotomic.from_exponents(n, ((i * j, c) for i, c in enumerate(self.coeffs) if c))

    def conjugate(self) -> Cyclotomic:
        return self.galois(-1)

    # inspection

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_integer():
            raise InputError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def __repr__(self) -> str:
        terms = [f"{c}*z{self.conductor}^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k as an element of Z[zeta_n]"""
    if n < 1:
        raise InputError(f"Order of a root of unity must be positive, got {n}")
    return Cyclotomic.from_exponents(n, {k % n: 1})


def galois_apply(x: Cyclotomic, j: int) -> Cyclotomic:
    return x.galois(j)


def csum(values: Iterable[Cyclotomic | int]) -> Cyclotomic:
    total = Cyclotomic.zero()
    for v in values:
        total = total + v
    return total
