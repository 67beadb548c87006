"""
Tests for the exact arithmetic plugin

    pytest tame_langlands/plugins/arithmetic
"""

import pytest
from hypothesis import given, strategies as st

from tame_langlands.exceptions import InputError
from tame_langlands.plugins.arithmetic import Cyclotomic, FiniteFieldElem, csum, ff_ops, root_of_unity, smallest_irreducible
from tame_langlands.plugins.arithmetic.linear import identity, inverse, matmul, nullspace, rank


def test_root_of_unity_squares_to_minus_one():
    assert root_of_unity(4) ** 2 == -1
    assert root_of_unity(4) ** 2 == root_of_unity(2)


def test_sum_of_all_roots_vanishes():
    assert csum(root_of_unity(5, k) for k in range(5)).is_zero()
    assert csum(root_of_unity(6, k) for k in range(6)).is_zero()


def test_mixed_conductors_are_aligned():
    x = root_of_unity(3) + root_of_unity(4)
    assert x.conductor == 12
    assert x - root_of_unity(4) == root_of_unity(3)


def test_galois_action():
    assert root_of_unity(5, 1).galois(2) == root_of_unity(5, 2)
    assert root_of_unity(8, 3).conjugate() == root_of_unity(8, 5)
    with pytest.raises(InputError):
        root_of_unity(5).galois(5)


def test_integers():
    three = Cyclotomic.from_int(3, 7)
    assert three.is_integer()
    assert three.to_int() == 3
    with pytest.raises(InputError):
        root_of_unity(3).to_int()


def test_negative_power_rejected():
    with pytest.raises(InputError):
        root_of_unity(3) ** -1


@given(st.integers(min_value=1, max_value=24), st.integers(), st.integers())
def test_roots_of_unity_multiply_by_adding_exponents(n, a, b):
    assert root_of_unity(n, a) * root_of_unity(n, b) == root_of_unity(n, a + b)


@given(st.integers(min_value=1, max_value=18), st.integers(min_value=0, max_value=17))
def test_norm_of_root_is_one(n, k):
    z = root_of_unity(n, k)
    assert z * z.conjugate() == 1


# finite fields


def test_smallest_irreducible():
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert smallest_irreducible(3, 2) == (1, 0, 1)


def test_distinguished_generator_of_f9():
    # x^2 + 1 over F_3: x has order 4, 1 + x has order 8
    assert ff_ops(3, 2).generator == 4


@pytest.mark.parametrize("p,k", [(2, 1), (2, 3), (3, 2), (5, 2), (7, 1)])
def test_log_tables(p, k):
    F = ff_ops(p, k)
    for a in range(1, F.order):
        assert F.exp(F.log(a)) == a
        assert F.mul(a, F.inv(a)) == 1


def test_trace_and_element_of_order():
    F = ff_ops(3, 2)
    assert F.trace(3) == 0
    assert F.trace(1) == 2
    assert F.pow(F.element_of_order(4), 4) == 1
    with pytest.raises(InputError):
        F.element_of_order(3)


def test_log_of_zero_and_bad_field():
    with pytest.raises(InputError):
        ff_ops(5).log(0)
    with pytest.raises(InputError):
        ff_ops(4)


def test_field_elements():
    F = ff_ops(2, 2)
    x = FiniteFieldElem.from_code(F, 2)
    assert (x * x.inverse()).code == 1
    assert (x + x).code == 0
    assert x**3 == FiniteFieldElem.from_code(F, 1)


# linear algebra over F_p


def test_matrix_helpers():
    a = ((1, 2), (3, 4))
    assert matmul(a, inverse(a, 5), 5) == identity(2)
    assert rank(((1, 2), (2, 4)), 5) == 1
    assert nullspace(((1, 2), (2, 4)), 5) == [(1, 2)]
