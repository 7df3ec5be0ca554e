from fractions import Fraction
from math import factorial

import pytest
from sympy import Rational, binomial, expand, symbols

from peaklab.combinatorics import (
    class_size,
    descent_set_A,
    descent_set_B,
    partitions_of,
    peak_set,
    permutations_of,
    signed_permutations_of,
)
from peaklab.group_algebra import GroupAlgebraElement, idempotent_family_check
from peaklab.idempotents import (
    binomial_in_t,
    eulerian_A,
    eulerian_B,
    peak_idempotents,
    statistic_constancy,
)

T = symbols("t")


def sympy_coeffs(expr, n):
    poly = expand(expr)
    return [Fraction(int(c.p), int(c.q)) for c in (Rational(poly.coeff(T, k)) for k in range(n + 1))]


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(0, 5))
def test_binomial_in_t_matches_sympy(n, d):
    if d >= n:
        return
    got_a = binomial_in_t(Fraction(n - d - 1), Fraction(1), n)
    assert got_a == sympy_coeffs(binomial(T - 1 + n - d, n).expand(func=True), n)
    got_b = binomial_in_t(Fraction(n - d) - Fraction(1, 2), Fraction(1, 2), n)
    assert got_b == sympy_coeffs(binomial((T - 1) / 2 + n - d, n).expand(func=True), n)


def test_eulerian_a_small():
    assert eulerian_A(1)[0] == GroupAlgebraElement.identity("S", 1)
    half = Fraction(1, 2)
    assert eulerian_A(2)[0] == GroupAlgebraElement("S", 2, {(1, 2): half, (2, 1): -half})
    assert eulerian_A(2)[1] == GroupAlgebraElement("S", 2, {(1, 2): half, (2, 1): half})


@pytest.mark.parametrize("n", range(1, 6))
def test_eulerian_a_top_is_averaging(n):
    top = eulerian_A(n)[n - 1]
    assert top == GroupAlgebraElement("S", n, {w: Fraction(1, factorial(n)) for w in permutations_of(n)})


def test_eulerian_b_small():
    half = Fraction(1, 2)
    fam = eulerian_B(1)
    assert fam[0] == GroupAlgebraElement("B", 1, {(1,): half, (-1,): -half})
    assert fam[1] == GroupAlgebraElement("B", 1, {(1,): half, (-1,): half})


@pytest.mark.parametrize("n", range(1, 4))
def test_eulerian_b_top_is_averaging(n):
    order = 2**n * factorial(n)
    top = eulerian_B(n)[n]
    assert top == GroupAlgebraElement("B", n, {w: Fraction(1, order) for w in signed_permutations_of(n)})


@pytest.mark.parametrize("n", range(1, 6))
def test_eulerian_a_family(n):
    fam = eulerian_A(n)
    assert idempotent_family_check(list(fam)).ok
    for e in fam:
        assert statistic_constancy(e, descent_set_A)[0]


@pytest.mark.parametrize("n", range(1, 5))
def test_eulerian_b_family(n):
    fam = eulerian_B(n)
    assert idempotent_family_check(list(fam)).ok
    for e in fam:
        assert statistic_constancy(e, descent_set_B)[0]


def test_peak_small():
    fam = peak_idempotents(1)
    assert fam[0].is_zero() and fam[1] == GroupAlgebraElement.identity("S", 1)
    fam = peak_idempotents(4)
    assert fam[1].is_zero() and fam[3].is_zero()
    assert fam.zero_indices == (1, 3)


@pytest.mark.parametrize("n", range(1, 5))
def test_peak_family(n):
    fam = peak_idempotents(n)
    nonzero = [e for e in fam if not e.is_zero()]
    assert idempotent_family_check(nonzero).ok
    assert fam.zero_indices == tuple(k for k in range(n + 1) if (n - k) % 2)
    for e in fam:
        assert statistic_constancy(e, peak_set)[0]


@pytest.mark.parametrize("n", [1, 3, 5])
def test_pi_zero_vanishes_for_odd_n(n):
    assert peak_idempotents(n)[0].is_zero()


@pytest.mark.parametrize("n", range(1, 6))
def test_peak_dimensions_count_odd_cycles(n):
    # pi_k(id) * n! is the dimension of the left ideal; it counts permutations with k odd cycles
    fam = peak_idempotents(n)
    for k in range(n + 1):
        expected = sum(class_size(lam) for lam in partitions_of(n) if lam.odd == k)
        assert fam[k].coefficient(tuple(range(1, n + 1))) * factorial(n) == expected


def test_range_is_enforced():
    with pytest.raises(ValueError):
        eulerian_B(6)
    with pytest.raises(ValueError):
        eulerian_A(0)


def test_statistic_constancy_finds_witness():
    e = GroupAlgebraElement("S", 3, {(1, 2, 3): 1, (1, 3, 2): 1})
    ok, witness = statistic_constancy(e, descent_set_A)
    assert not ok and witness is not None
