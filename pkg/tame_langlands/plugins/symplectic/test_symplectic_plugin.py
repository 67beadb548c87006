"""
Tests for symplectic modules, sign invariants and the signs lemma
"""

from itertools import combinations_with_replacement

import pytest

from tame_langlands.exceptions import InconsistentMarkingError, InputError
from tame_langlands.plugins.symplectic import (
    BarCharacter,
    FormType,
    OperatorGroup,
    Summand,
    SymplecticModule,
    anisotropic,
    decompose,
    direct_sum,
    exceptional_summands,
    find_isometry,
    fixed_point_identity_check,
    fixed_points,
    frobenius_orbits,
    hyperbolic,
    hyperbolic_space,
    irreducible_summands,
    known_exception,
    markings,
    negate_form,
    orthogonal_sum,
    parity_counts,
    restrict,
    signs_lemma_check,
    signs_lemma_sweep,
    sweep_group,
    synthesize,
    t0,
    t1,
    t_cyclic,
    t_invariants,
)

C4 = OperatorGroup.cyclic(4)


def chi(p, exps, group=C4):
    return BarCharacter(group, p, tuple(exps))


def test_character_degrees():
    assert chi(3, (1,)).degree == 2
    assert chi(5, (1,)).degree == 1
    assert chi(3, (2,)).order == 2
    assert chi(3, (1,)).is_anisotropic_type()
    assert not chi(5, (1,)).is_anisotropic_type()
    with pytest.raises(InputError):
        BarCharacter(OperatorGroup.cyclic(3), 3, (1,))


def test_frobenius_orbits():
    # p = 3 on C4: {0}, {1, 3}, {2}
    assert [c.exps for c in frobenius_orbits(C4, 3)] == [(0,), (1,), (2,)]


def test_summand_normalization():
    with pytest.raises(InputError):
        Summand(FormType.ANISOTROPIC, chi(5, (1,)))
    # H(V_chi) for chi of anisotropic type splits into two anisotropic planes
    M = hyperbolic(chi(3, (1,)))
    assert [s.form for s in M.summands] == [FormType.ANISOTROPIC, FormType.ANISOTROPIC]
    assert M.dimension == 4
    assert hyperbolic(chi(5, (1,))) == hyperbolic(chi(5, (3,)))


def test_direct_sum_and_fixed_points():
    group = OperatorGroup((4, 2))
    M = direct_sum(hyperbolic(chi(5, (1, 0), group)), hyperbolic(chi(5, (0, 1), group)))
    assert M.dimension == 4
    assert fixed_points(M, [(0, 1)]).dimension == 2
    assert fixed_points(M, [(1, 1)]).is_zero()


def test_restriction():
    M = anisotropic(chi(3, (1,)))
    R = restrict(M, (2,))
    assert R.group == OperatorGroup.cyclic(2)
    assert [s.form for s in R.summands] == [FormType.HYPERBOLIC]


def test_t_invariants_of_anisotropic_plane():
    M = anisotropic(chi(3, (1,)))
    triple = t_invariants(M, (1,))
    assert triple.t0 == -1
    assert triple.t1 == (1, -1, 1, -1)
    assert triple.t == 1
    assert triple.render() == "t0=-1 t1=order2 t=+1"


def test_t_invariants_of_hyperbolic_plane():
    M = hyperbolic(chi(5, (1,)))
    assert t0(M) == 1
    assert t1(M, (1,)) == -1
    assert t_cyclic(M, (1,)) == -1


def test_t_invariants_for_p_two():
    M = anisotropic(chi(2, (1,), OperatorGroup.cyclic(3)))
    assert t_invariants(M, (1,)).t1_is_trivial()


def test_fixed_point_identity():
    M = anisotropic(chi(3, (1,)))
    assert fixed_point_identity_check(M, (1,))
    with pytest.raises(InputError):
        fixed_point_identity_check(M, (0,))


def test_signs_lemma_holds():
    M = anisotropic(chi(3, (1,))).with_markings(mu=(1,), varpi=(1,), varpi_alpha=(1,))
    assert signs_lemma_check(M)
    assert not known_exception(M)


def test_signs_lemma_exception():
    # chi|<mu> has order 2 and varpi_alpha - varpi acts by -1
    M = anisotropic(chi(3, (1,))).with_markings(mu=(2,), varpi=(1,), varpi_alpha=(3,))
    assert exceptional_summands(M) == list(M.summands)
    assert known_exception(M)
    assert not signs_lemma_check(M)


def test_signs_lemma_needs_markings():
    M = anisotropic(chi(3, (1,)))
    with pytest.raises(InconsistentMarkingError):
        signs_lemma_check(M)
    with pytest.raises(InconsistentMarkingError):
        signs_lemma_check(M.with_markings(mu=(2,), varpi=(2,), varpi_alpha=(2,)))


def test_small_sweep_has_only_known_exceptions():
    report = signs_lemma_sweep([3], 4, 2)
    assert report.instances > 0
    assert not report.unexplained


def test_parity_counts():
    counts = parity_counts({(1, 1): 2, (0, 0): 1}, 2)
    assert counts == {(0, 0): 4, (1, 1): 2}
    assert sum(parity_counts({(0, 0): 5, (1, 0): 3}, 4).values()) == 330


def direct_sweep(p, orders, max_summands):
    group = OperatorGroup(orders)
    summands = irreducible_summands(p, group)
    instances = failures = unexplained = 0
    for marking in markings(group):
        for size in range(1, max_summands + 1):
            for combo in combinations_with_replacement(summands, size):
                M = SymplecticModule(p, group, combo).with_markings(*marking)
                instances += 1
                if not signs_lemma_check(M):
                    failures += 1
                    unexplained += not known_exception(M)
    return instances, failures, unexplained


@pytest.mark.parametrize("p, orders", [(5, (8,)), (3, (2, 4)), (3, (10,))])
def test_sweep_group_matches_direct_evaluation(p, orders):
    report = sweep_group(p, orders, 2)
    assert (report.instances, report.failure_count, len(report.unexplained)) == direct_sweep(p, orders, 2)


def test_sweep_beyond_small_groups_has_only_known_exceptions():
    report = signs_lemma_sweep([5], 12, 4)
    singles = signs_lemma_sweep([5], 12, 1)
    assert report.instances > singles.instances
    assert report.failure_count >= singles.failure_count
    assert not report.unexplained


# concrete spaces


@pytest.mark.parametrize(
    "M",
    [
        anisotropic(chi(3, (1,))),
        hyperbolic(chi(5, (1,))),
        hyperbolic(chi(3, (2,))),
    ],
    ids=["aniso-p3", "hyper-p5", "hyper-p3-order2"],
)
def test_synthesize_then_decompose(M):
    X = synthesize(M)
    assert len(X.gram) == M.dimension
    assert decompose(X) == M


def test_x_plus_minus_x_is_hyperbolic():
    X = synthesize(anisotropic(chi(3, (1,))))
    assert find_isometry(orthogonal_sum(X, negate_form(X)), hyperbolic_space(X)) is not None


def test_module_literal():
    M = SymplecticModule(3, C4, (Summand(FormType.ANISOTROPIC, chi(3, (3,))),), mu=(1,), varpi=(5,))
    assert M.varpi == (1,)
    assert M.literal() == "module p=3 C=4 mu=1 varpi=1 summands=a:1"
