"""
Signs Lemma Check and Sweep

For a module M with markings mu, varpi, varpi_alpha (additive notation in C):

    lhs = t_<varpi_alpha>(M) t0_mu(M^varpi_alpha) t1_mu(M; varpi_alpha - varpi)
    rhs = t_<varpi>(M) t0_mu(M^varpi)

Both sides are multiplicative over summands. The identity fails on a summand exactly when
it is anisotropic, varpi and varpi_alpha act nontrivially, chi|mu has order 2 and
varpi_alpha - varpi acts by -1; the module fails when an odd number of summands do.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb, gcd, prod

from tame_langlands.config.config_manager import get_config_manager
from tame_langlands.exceptions import InconsistentMarkingError
from tame_langlands.utils.logger import get_logger

from .bar_character import Element, OperatorGroup, frobenius_orbits
from .invariants import t0_over, t1_over, t_cyclic
from .module import FormType, Summand, SymplecticModule, fixed_points

logger = get_logger(__name__)


def check_markings(M: SymplecticModule) -> tuple[Element, Element, Element]:
    """
    Returns (mu, varpi, varpi_alpha)

    Raises:
        InconsistentMarkingError: if a marking is missing, mu and varpi do not generate C,
            or varpi_alpha - varpi is not in <mu>
    """
    if M.mu is None or M.varpi is None or M.varpi_alpha is None:
        raise InconsistentMarkingError("mu, varpi and varpi_alpha must all be marked")
    group = M.group
    if len(group.span([M.mu, M.varpi])) != group.order:
        raise InconsistentMarkingError("mu and varpi do not generate the operator group")
    if group.sub(M.varpi_alpha, M.varpi) not in group.cyclic_subgroup(M.mu):
        raise InconsistentMarkingError("varpi_alpha / varpi does not lie in mu")
    return M.mu, M.varpi, M.varpi_alpha


def signs_lemma_sides(M: SymplecticModule) -> tuple[int, int]:
    mu, varpi, varpi_alpha = check_markings(M)
    ratio = M.group.sub(varpi_alpha, varpi)
    lhs = (
        t_cyclic(M, varpi_alpha)
        * t0_over(fixed_points(M, [varpi_alpha]), mu)
        * t1_over(M, mu, ratio)
    )
    rhs = t_cyclic(M, varpi) * t0_over(fixed_points(M, [varpi]), mu)
    return lhs, rhs


def signs_lemma_check(M: SymplecticModule) -> bool:
    lhs, rhs = signs_lemma_sides(M)
    return lhs == rhs


def _acts_by_minus_one(summand: Summand, x: Element) -> bool:
    L = summand.character.group.exponent
    return 2 * summand.character.universal_exponent(x) == L


def exceptional_summands(M: SymplecticModule) -> list[Summand]:
    """Summands on which the identity fails"""
    mu, varpi, varpi_alpha = check_markings(M)
    ratio = M.group.sub(varpi_alpha, varpi)
    out = []
    for s in M.summands:
        chi = s.character
        if s.form is not FormType.ANISOTROPIC:
            continue
        if chi.is_trivial_on([varpi]) or chi.is_trivial_on([varpi_alpha]):
            continue
        if chi.restrict(mu).order == 2 and _acts_by_minus_one(s, ratio):
            out.append(s)
    return out


def known_exception(M: SymplecticModule) -> bool:
    """True when the markings put M in the configuration where the identity fails"""
    return len(exceptional_summands(M)) % 2 == 1


# sweep


@dataclass(frozen=True)
class SignsFailure:
    module: str
    lhs: int
    rhs: int
    explained: bool


@dataclass
class SweepReport:
    """
    Failures of single summands are listed, as are unexplained failures of any size.
    Explained failures of multisets of two or more summands are only counted.
    """

    instances: int = 0
    failures: list[SignsFailure] = field(default_factory=list)
    unlisted: int = 0

    @property
    def unexplained(self) -> list[SignsFailure]:
        return [f for f in self.failures if not f.explained]

    @property
    def failure_count(self) -> int:
        return len(self.failures) + self.unlisted

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def merge(self, other: SweepReport) -> None:
        self.instances += other.instances
        self.failures.extend(other.failures)
        self.unlisted += other.unlisted


def sweep_groups(p: int, max_order: int) -> list[OperatorGroup]:
    """Cyclic C_n and C_a x C_b (1 < a | b) of order at most max_order and prime to p"""
    groups = [OperatorGroup.cyclic(n) for n in range(1, max_order + 1) if gcd(n, p) == 1]
    for a in range(2, max_order + 1):
        for b in range(a, max_order // a + 1, a):
            if gcd(a * b, p) == 1:
                groups.append(OperatorGroup((a, b)))
    return groups


def markings(group: OperatorGroup):
    """Every (mu, varpi, varpi_alpha) with <mu, varpi> = C, one mu per cyclic subgroup"""
    elements = group.elements()
    mus = {}
    for x in elements:
        key = frozenset(group.cyclic_subgroup(x))
        mus.setdefault(key, x)
    for mu in sorted(mus.values()):
        members = group.cyclic_subgroup(mu)
        for varpi in elements:
            if len(group.span([mu, varpi])) != group.order:
                continue
            for z in members:
                yield mu, varpi, group.add(varpi, z)


def irreducible_summands(p: int, group: OperatorGroup) -> list[Summand]:
    out = []
    for chi in frobenius_orbits(group, p):
        if chi.is_anisotropic_type():
            out.append(Summand(FormType.ANISOTROPIC, chi))
        elif chi.inverse().canonical().exps >= chi.exps:
            out.append(Summand(FormType.HYPERBOLIC, chi))
    return out


def multiset_count(n: int, size: int) -> int:
    """Multisets of `size` elements drawn from n kinds"""
    return comb(n + size - 1, size)


def parity_counts(classes: dict[tuple[int, int], int], size: int) -> dict[tuple[int, int], int]:
    """
    Multisets of `size` summands counted by parity

    `classes` maps (failing, exceptional) flags of a single summand to the number of
    summands carrying them; the result maps the parities of the two counts in a multiset
    to the number of such multisets.
    """
    table = {(0, 0, 0): 1}
    for (bad, exc), n in classes.items():
        if not n:
            continue
        grown: dict[tuple[int, int, int], int] = defaultdict(int)
        for (taken, b, e), count in table.items():
            for j in range(size - taken + 1):
                grown[(taken + j, (b + bad * j) % 2, (e + exc * j) % 2)] += count * multiset_count(n, j)
        table = grown
    return {(b, e): count for (taken, b, e), count in table.items() if taken == size}


@dataclass(frozen=True)
class _Factor:
    summand: Summand
    lhs: int
    rhs: int
    exceptional: bool

    @property
    def flags(self) -> tuple[int, int]:
        return int(self.lhs != self.rhs), int(self.exceptional)


def _factors(p: int, group: OperatorGroup, summands: list[Summand], marking) -> list[_Factor]:
    out = []
    for s in summands:
        M = SymplecticModule(p, group, (s,)).with_markings(*marking)
        lhs, rhs = signs_lemma_sides(M)
        out.append(_Factor(s, lhs, rhs, bool(exceptional_summands(M))))
    return out


def _unexplained_multisets(p: int, group: OperatorGroup, factors: list[_Factor], size: int, marking):
    for combo in combinations_with_replacement(factors, size):
        bad = sum(f.lhs != f.rhs for f in combo) % 2
        exc = sum(f.exceptional for f in combo) % 2
        if bad and not exc:
            lhs = prod(f.lhs for f in combo)
            M = SymplecticModule(p, group, tuple(f.summand for f in combo)).with_markings(*marking)
            yield SignsFailure(M.literal(), lhs, -lhs, False)


def sweep_group(p: int, orders: tuple[int, ...], max_summands: int) -> SweepReport:
    """
    Check every multiset of at most max_summands irreducible summands under every marking
    of one operator group

    Both sides are evaluated once per summand; a multiset fails when an odd number of its
    summands do.
    """
    group = OperatorGroup(orders)
    report = SweepReport()
    summands = irreducible_summands(p, group)
    for marking in markings(group):
        factors = _factors(p, group, summands, marking)
        classes: dict[tuple[int, int], int] = defaultdict(int)
        for f in factors:
            classes[f.flags] += 1
            if f.lhs != f.rhs:
                M = SymplecticModule(p, group, (f.summand,)).with_markings(*marking)
                report.failures.append(SignsFailure(M.literal(), f.lhs, f.rhs, f.exceptional))
        report.instances += len(factors)
        for size in range(2, max_summands + 1):
            counts = parity_counts(classes, size)
            report.instances += sum(counts.values())
            report.unlisted += counts.get((1, 1), 0)
            if counts.get((1, 0), 0):
                report.failures.extend(_unexplained_multisets(p, group, factors, size, marking))
    logger.debug("p=%d C=%s: %d instances, %d failures", p, group.literal(), report.instances, report.failure_count)
    return report


def _sweep_task(args: tuple[int, tuple[int, ...], int]) -> SweepReport:
    return sweep_group(*args)


def signs_lemma_sweep(
    primes: list[int] | None = None,
    max_operator_order: int | None = None,
    max_summands: int | None = None,
    jobs: int = 1,
) -> SweepReport:
    """Run the check over the configured sweep; failures are reported, not raised"""
    sweep = get_config_manager().get_sweep_config()
    primes = primes if primes is not None else list(sweep.get("primes", [3, 5, 7]))
    if max_operator_order is None:
        max_operator_order = int(sweep.get("max_operator_order", 24))
    if max_summands is None:
        max_summands = int(sweep.get("max_summands", 4))
    tasks = [(p, g.orders, max_summands) for p in primes for g in sweep_groups(p, max_operator_order)]
    report = SweepReport()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_sweep_task, tasks):
                report.merge(part)
    else:
        for task in tasks:
            report.merge(_sweep_task(task))
    report.failures.sort(key=lambda f: f.module)
    logger.info(
        "signs sweep: %d instances, %d failures (%d unexplained)",
        report.instances,
        report.failure_count,
        len(report.unexplained),
    )
    return report
