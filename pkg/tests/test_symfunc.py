from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from peaklab.combinatorics import Partition, class_size, partitions_of, z_lambda
from peaklab.group_algebra import ClassFunction
from peaklab.symfunc import (
    L_lambda,
    SymFunc,
    character,
    dimension,
    from_schur,
    frobenius,
    h,
    h_of,
    induct,
    inner,
    irreducible_character,
    lie_ell,
    mobius,
    plethysm_p,
    restrict,
    schur,
    symfunc_from_json,
    symfunc_to_json,
    to_schur,
)

p = SymFunc.p
HALF = Fraction(1, 2)


def hook_length_dimension(mu):
    mu = list(mu)
    conj = [sum(1 for r in mu if r > c) for c in range(mu[0])] if mu else []
    prod = 1
    for i, row in enumerate(mu):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(mu)) // prod


def symfuncs(n_max=4):
    def build(n):
        coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)
        return st.dictionaries(st.sampled_from(partitions_of(n)), coeff, max_size=4).map(SymFunc)

    return st.integers(1, n_max).flatmap(build)


def test_products():
    assert p(1) * p(1) == p(1, 1)
    assert h(2) * p(1) == (p(1, 1, 1) + p(2, 1)).scale(HALF)


def test_plethysm_examples():
    assert plethysm_p(2, p(3)) == p(6)
    assert plethysm_p(2, (p(1, 1) - p(2)).scale(HALF)) == (p(2, 2) - p(4)).scale(HALF)
    f = p(2, 1) + p(3).scale(2)
    assert plethysm_p(1, f) == f


def test_h_of_examples():
    assert h_of(2, p(1)) == (p(1, 1) + p(2)).scale(HALF)
    f = p(2) - p(1, 1)
    assert h_of(0, f) == SymFunc.one()
    assert h_of(1, f) == f


def test_lie_examples():
    assert lie_ell(1) == p(1)
    assert lie_ell(2) == (p(1, 1) - p(2)).scale(HALF)
    assert lie_ell(3) == (p(1, 1, 1) - p(3)).scale(Fraction(1, 3))
    assert [mobius(d) for d in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_higher_lie_examples():
    assert L_lambda((1, 1)) == h(2)
    assert to_schur(L_lambda((1, 1))) == {Partition((2,)): 1}
    assert L_lambda((2, 1)) == (p(1, 1, 1) - p(2, 1)).scale(HALF)
    assert to_schur(L_lambda((2, 1))) == {Partition((2, 1)): 1, Partition((1, 1, 1)): 1}
    assert to_schur(L_lambda((3,))) == {Partition((2, 1)): 1}


@pytest.mark.parametrize("n", range(1, 8))
def test_higher_lie_dimensions_are_class_sizes(n):
    for lam in partitions_of(n):
        assert dimension(L_lambda(lam)) == class_size(lam)


@pytest.mark.parametrize("n", range(1, 7))
def test_higher_lie_sum_is_regular(n):
    total = SymFunc()
    for lam in partitions_of(n):
        total = total + L_lambda(lam)
    assert total == p(*([1] * n))


def test_frobenius_examples():
    assert frobenius(ClassFunction(3, {(1, 1, 1): 6})) == p(1, 1, 1)
    assert frobenius(ClassFunction(2, {(1, 1): 1, (2,): 1})) == h(2)
    assert frobenius(ClassFunction(2, {(1, 1): 1, (2,): -1})) == (p(1, 1) - p(2)).scale(HALF)


def test_schur_examples():
    assert to_schur(p(1, 1)) == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert to_schur(h(3)) == {Partition((3,)): 1}


@pytest.mark.parametrize("n", range(1, 9))
def test_character_table_against_hook_lengths_and_orthogonality(n):
    parts = partitions_of(n)
    for mu in parts:
        assert irreducible_character(mu, [1] * n) == hook_length_dimension(mu)
    for mu in parts:
        for nu in parts:
            s = sum(
                Fraction(irreducible_character(mu, lam) * irreducible_character(nu, lam), z_lambda(tuple(lam)))
                for lam in parts
            )
            assert s == (1 if mu == nu else 0)


def test_restrict_examples():
    assert restrict(p(1, 1, 1)) == p(1, 1).scale(3)
    for n in range(1, 7):
        assert restrict(h(n)) == h(n - 1)


@given(symfuncs())
def test_restrict_induct_product_rule(f):
    assert restrict(induct(f)) == f + induct(restrict(f))


@given(symfuncs(), symfuncs())
def test_multiplication_commutes(f, g):
    assert f * g == g * f


@given(symfuncs())
def test_frobenius_and_character_are_inverse(f):
    n = f.degree() if not f.is_zero() else 1
    assert frobenius(character(f, n)) == f


@given(symfuncs())
def test_schur_round_trip(f):
    assert from_schur(to_schur(f)) == f
    assert inner(f, f) == sum((c * c for c in to_schur(f).values()), Fraction(0))


@given(symfuncs())
def test_json_round_trip(f):
    assert symfunc_from_json(symfunc_to_json(f)) == f


def test_schur_is_orthonormal():
    for mu in partitions_of(4):
        for nu in partitions_of(4):
            assert inner(schur(mu), schur(nu)) == (1 if mu == nu else 0)
