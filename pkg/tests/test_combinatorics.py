from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPermutation
from sympy.functions.combinatorial.numbers import partition as npartitions

from peaklab.combinatorics import (
    Partition,
    class_representative,
    class_size,
    compose,
    cycle_type,
    descent_set_A,
    descent_set_B,
    forget_signs,
    hyperoctahedral_order,
    partitions_of,
    peak_set,
    permutations_of,
    signed_permutations_of,
    stirling_first,
    tau,
    z_lambda,
)


def signed_perms(n):
    return st.permutations(range(1, n + 1)).flatmap(
        lambda p: st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n).map(
            lambda s: tuple(a * b for a, b in zip(p, s))
        )
    )


def test_partitions_small():
    assert partitions_of(0) == [Partition(())]
    assert set(partitions_of(3)) == {(3,), (2, 1), (1, 1, 1)}
    assert len(partitions_of(4)) == 5


@pytest.mark.parametrize("n", range(0, 13))
def test_partition_counts_match_sympy(n):
    assert len(partitions_of(n)) == npartitions(n)


def test_partition_attributes():
    lam = Partition((3, 2, 2, 1))
    assert lam.weight == 8 and lam.length == 4
    assert lam.odd == 2 and lam.even == 2
    assert lam.oddparts == (3, 1) and lam.evenparts == (2, 2)
    assert not lam.is_odd()
    assert Partition((2, 3, 1)) == (3, 2, 1)


def test_cycle_type_examples():
    assert cycle_type((1, 2, 3, 4)) == (1, 1, 1, 1)
    assert cycle_type((2, 1, 3)) == (2, 1)
    assert cycle_type((2, 3, 1)) == (3,)


def test_descents_and_peaks():
    assert descent_set_A((1, 2, 3)) == set()
    assert descent_set_A((2, 1, 3)) == {1}
    assert descent_set_A((3, 2, 1)) == {1, 2}
    assert descent_set_B((1, 2)) == set()
    assert descent_set_B((-1,)) == {0}
    assert descent_set_B((2, 1)) == {1}
    assert peak_set((1, 2, 3)) == set()
    assert peak_set((1, 3, 2)) == {2}
    assert peak_set((2, 1, 3)) == {1}


def test_compose_examples():
    assert compose((2, 1), (2, 1)) == (1, 2)
    for n in (1, 3):
        for i in range(1, n + 1):
            assert compose(tau(i, n), tau(i, n)) == tuple(range(1, n + 1))
    assert compose((2, 1), (-1, 2)) == (-2, 1)


def test_forget_signs_examples():
    assert forget_signs((-1, 2)) == (1, 2)
    assert forget_signs((4, 3, -5, -1, 2)) == (4, 3, 5, 1, 2)


def test_class_size_examples():
    assert class_size((1, 1, 1)) == 1
    assert class_size((2, 1)) == 3
    assert class_size((3, 1)) == 8


@pytest.mark.parametrize("n", range(1, 8))
def test_class_sizes_sum_to_order(n):
    assert sum(class_size(lam) for lam in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_cycle_type_counts_against_enumeration(n):
    counts = {}
    for w in permutations_of(n):
        lam = cycle_type(w)
        counts[lam] = counts.get(lam, 0) + 1
    assert counts == {lam: class_size(lam) for lam in partitions_of(n)}


@pytest.mark.parametrize("n", range(1, 7))
def test_class_representative_has_its_type(n):
    for lam in partitions_of(n):
        assert cycle_type(class_representative(lam)) == lam


def test_group_orders_and_stirling():
    assert len(list(signed_permutations_of(3))) == hyperoctahedral_order(3) == 48
    # c(n, k) counts permutations with k cycles
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert stirling_first(n, k) == sum(1 for w in permutations_of(n) if len(cycle_type(w)) == k)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(signed_perms(n), signed_perms(n))))
def test_forget_signs_is_a_homomorphism(pair):
    a, b = pair
    assert forget_signs(compose(a, b)) == compose(forget_signs(a), forget_signs(b))


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(signed_perms(n), signed_perms(n), signed_perms(n))))
def test_compose_is_associative(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_cycle_type_matches_sympy(w):
    sp = SymPermutation([x - 1 for x in w])
    assert cycle_type(tuple(w)) == Partition(sorted((len(c) for c in sp.full_cyclic_form), reverse=True))


@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_odd_count_parity(lam):
    assert lam.odd % 2 == lam.weight % 2
    assert factorial(lam.weight) % z_lambda(tuple(lam)) == 0
