"""
Shipped ramification data

Each entry pairs a small tame field tower with a marked symplectic module V. The
anisotropic planes and hyperbolic pairs are the standard avatars of J^1/H^1 used by the
`mu` command and the self-test.
"""

from __future__ import annotations

from tame_langlands.plugins.symplectic import (
    BarCharacter,
    FormType,
    OperatorGroup,
    Summand,
    SymplecticModule,
)
from tame_langlands.plugins.tame_fields import FieldSkeleton, make_extension, trivial_extension

from .datum import RamificationDatum

TAME_PRIMES = (2, 3, 5)


def zero_module(p: int) -> SymplecticModule:
    """V = 0 over the trivial operator group"""
    return SymplecticModule(p, OperatorGroup((1,)), (), mu=(0,), varpi=(0,))


def _module(p: int, orders: tuple[int, ...], form: FormType, exps, mu, varpi) -> SymplecticModule:
    group = OperatorGroup(orders)
    summand = Summand(form, BarCharacter(group, p, tuple(exps)))
    return SymplecticModule(p, group, (summand,), mu=tuple(mu), varpi=tuple(varpi))


def tame_datum(p: int, n: int) -> RamificationDatum:
    """r = 0, E = F, m = n"""
    return RamificationDatum(trivial_extension(FieldSkeleton(p)), 0, n, zero_module(p), name=f"tame-p{p}-n{n}")


def tame_data(max_n: int = 6, primes: tuple[int, ...] = TAME_PRIMES) -> list[RamificationDatum]:
    return [tame_datum(p, n) for p in primes for n in range(1, max_n + 1)]


def standard_data() -> list[RamificationDatum]:
    F3, F5, F2 = FieldSkeleton(3), FieldSkeleton(5), FieldSkeleton(2)
    quadratic_3 = make_extension(F3, e=2)
    return [
        tame_datum(3, 2),
        tame_datum(5, 3),
        RamificationDatum(
            quadratic_3,
            1,
            2,
            _module(3, (4, 2), FormType.ANISOTROPIC, (1, 0), mu=(1, 0), varpi=(0, 1)),
            name="aniso-p3-e2",
        ),
        RamificationDatum(
            quadratic_3,
            1,
            2,
            _module(3, (4, 2), FormType.HYPERBOLIC, (2, 0), mu=(1, 0), varpi=(0, 1)),
            name="hyper-p3-e2",
        ),
        RamificationDatum(
            make_extension(F5, e=3),
            1,
            1,
            _module(5, (3,), FormType.ANISOTROPIC, (1,), mu=(0,), varpi=(1,)),
            name="aniso-p5-e3",
        ),
        RamificationDatum(
            make_extension(F2, f=2),
            1,
            1,
            _module(2, (3,), FormType.ANISOTROPIC, (1,), mu=(1,), varpi=(0,)),
            name="aniso-p2-f2",
        ),
    ]


def datum_by_name(name: str) -> RamificationDatum:
    for datum in standard_data():
        if datum.name == name:
            return datum
    raise KeyError(name)
