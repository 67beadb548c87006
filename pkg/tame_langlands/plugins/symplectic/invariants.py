"""
Sign Invariants t0, t1 and t

Per irreducible summand, with k = [k[chi] : F_p]:

    H(V_chi):  t0 = +1, t1(c) = chi(c)^((p^k - 1)/2)
    V_chi:     t0 = -1, t1(c) = chi(c)^((p^(k/2) + 1)/2)

and t1 is trivial for p = 2. Both are multiplicative over orthogonal sums. For a cyclic
operator group <c>, t_<c>(M) = t0(M|<c>) t1(M|<c>; c).
"""

from __future__ import annotations

from dataclasses import dataclass

from tame_langlands.exceptions import InputError

from .bar_character import Element
from .module import FormType, Summand, SymplecticModule, restrict


def summand_t0(summand: Summand) -> int:
    return 1 if summand.form is FormType.HYPERBOLIC else -1


def _t1_power(p: int, summand: Summand) -> int:
    k = summand.character.degree
    if summand.form is FormType.HYPERBOLIC:
        return (p**k - 1) // 2
    return (p ** (k // 2) + 1) // 2


def summand_t1(p: int, summand: Summand, c: Element) -> int:
    if p == 2:
        return 1
    return summand.character.sign_power(c, _t1_power(p, summand))


def summand_t_invariants(p: int, summand: Summand, c: Element) -> tuple[int, int]:
    """(t0, t1(c)) of one irreducible summand"""
    return summand_t0(summand), summand_t1(p, summand, c)


def t0(M: SymplecticModule) -> int:
    result = 1
    for s in M.summands:
        result *= summand_t0(s)
    return result


def t1(M: SymplecticModule, c: Element) -> int:
    """The order <= 2 character t1(M; -) evaluated at c"""
    c = M.group.normalize(c)
    result = 1
    for s in M.summands:
        result *= summand_t1(M.p, s, c)
    return result


def t_cyclic(M: SymplecticModule, c: Element) -> int:
    """t_<c>(M), computed over the operator group <c>"""
    sub = restrict(M, c)
    generator = (1 % max(sub.group.order, 1),)
    return t0(sub) * t1(sub, generator)


def t0_over(M: SymplecticModule, c: Element) -> int:
    """t0 of M viewed as a module over <c>"""
    return t0(restrict(M, c))


def t1_over(M: SymplecticModule, c: Element, x: Element) -> int:
    """t1 of M viewed as a module over <c>, evaluated at x in <c>"""
    group = M.group
    c, x = group.normalize(c), group.normalize(x)
    members = group.cyclic_subgroup(c)
    if x not in members:
        raise InputError(f"{x} does not lie in the subgroup generated by {c}")
    return t1(restrict(M, c), (members.index(x),))


@dataclass(frozen=True)
class SignTriple:
    t0: int
    t1: tuple[int, ...]
    t: int

    def t1_is_trivial(self) -> bool:
        return all(v == 1 for v in self.t1)

    def render(self) -> str:
        t1 = "trivial" if self.t1_is_trivial() else "order2"
        return f"t0={self.t0:+d} t1={t1} t={self.t:+d}"


def t_invariants(M: SymplecticModule, c: Element) -> SignTriple:
    """
    (t0, t1, t) over the cyclic group <c>

    t1 is listed on c^0, c^1, ..., and t = t0 t1(c).

    Raises:
        InputError: if |<c>| is divisible by p
    """
    sub = restrict(M, c)
    n = sub.group.order
    if n % M.p == 0:
        raise InputError(f"operator order {n} is divisible by p = {M.p}")
    values = tuple(t1(sub, (k,)) for k in range(n))
    zero = t0(sub)
    return SignTriple(zero, values, zero * values[1 % n])


def fixed_point_identity_check(M: SymplecticModule, d: Element) -> bool:
    """
    t_<d>(M) = t0_C(M) t1_C(M; d) for a d with no nonzero fixed vectors

    Raises:
        InputError: if M^<d> is nonzero
    """
    if any(s.character.is_trivial_on([M.group.normalize(d)]) for s in M.summands):
        raise InputError("d has nonzero fixed vectors on M")
    return t_cyclic(M, d) == t0(M) * t1(M, d)
