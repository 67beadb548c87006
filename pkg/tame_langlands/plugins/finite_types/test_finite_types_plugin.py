"""
Tests for cuspidal types of GL_n over finite fields
"""

import pytest

from tame_langlands.exceptions import FieldMismatchError, NotRegularError
from tame_langlands.plugins.characters import TameCharacter
from tame_langlands.plugins.finite_types import (
    CuspidalTypeParam,
    conjugate_params,
    cuspidal_census,
    cuspidal_degree,
    general_linear_group,
    gl_order,
    green_trace,
    proper_radicals,
    twist_param,
    unipotent_radical,
    unramified_field,
)
from tame_langlands.plugins.tame_fields import FieldSkeleton, TameTorusElem, trivial_extension

F2, F3 = FieldSkeleton(2), FieldSkeleton(3)


def test_orders():
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48
    assert gl_order(3, 2) == 168
    assert general_linear_group(2, F2).order == 6
    assert cuspidal_degree(2, 3) == 2
    assert cuspidal_degree(3, 2) == 3


def test_radicals():
    assert len(unipotent_radical(2, F3, (1, 1))) == 3
    assert len(unipotent_radical(3, F2, (1, 1, 1))) == 8
    assert len(proper_radicals(3, F2)) == 3


def test_param_validation():
    E = unramified_field(F3, 2)
    CuspidalTypeParam(2, F3, TameCharacter(E, 1))
    with pytest.raises(NotRegularError):
        CuspidalTypeParam(2, F3, TameCharacter(E, 4))
    with pytest.raises(FieldMismatchError):
        CuspidalTypeParam(2, F3, TameCharacter(trivial_extension(F3), 1))


def test_conjugate_params():
    E = unramified_field(F3, 2)
    first = CuspidalTypeParam(2, F3, TameCharacter(E, 1))
    assert conjugate_params(first, CuspidalTypeParam(2, F3, TameCharacter(E, 3)))
    assert not conjugate_params(first, CuspidalTypeParam(2, F3, TameCharacter(E, 2)))


def test_twist_moves_the_central_character():
    E = unramified_field(F3, 2)
    param = CuspidalTypeParam(2, F3, TameCharacter(E, 1))
    sign = TameCharacter(trivial_extension(F3), 1)
    twisted = twist_param(param, sign)
    assert twisted.phi.a == 5


def test_green_trace_requires_regular_unit():
    E = unramified_field(F3, 2)
    param = CuspidalTypeParam(2, F3, TameCharacter(E, 1))
    one = TameTorusElem.identity(trivial_extension(F3))
    with pytest.raises(NotRegularError):
        green_trace(param, one, TameTorusElem(E, 0, 4))
    value = green_trace(param, one, TameTorusElem(E, 0, 2))
    # -(zeta_8^2 + zeta_8^6) = 0
    assert value.is_zero()


def test_census_gl2_f2(cache_dir):
    result = cuspidal_census(2, F2, cache_dir)
    assert result.cuspidal_count == 1
    assert result.orbit_count == 1
    assert result.is_bijection


@pytest.mark.slow
@pytest.mark.parametrize("n,F,count", [(2, F3, 3), (2, FieldSkeleton(5), 10), (3, F2, 2)])
def test_census(cache_dir, n, F, count):
    result = cuspidal_census(n, F, cache_dir)
    assert result.cuspidal_count == count
    assert result.is_bijection
