import json
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from peaklab.combinatorics import compose, cycle_type, permutations_of, signed_permutations_of
from peaklab.group_algebra import (
    ClassFunction,
    GroupAlgebraElement,
    GroupMismatch,
    NotIdempotent,
    element_from_json,
    element_to_json,
    idempotent_family_check,
    left_ideal_character,
    multiply,
    phi_push,
    trace_left_right,
    z2n_projector,
)

S2_ID, S2_S = (1, 2), (2, 1)


def E(group, n, terms):
    return GroupAlgebraElement(group, n, terms)


def naive_product(a, b):
    out = {}
    for x, c in a.terms.items():
        for y, d in b.terms.items():
            w = compose(x, y)
            out[w] = out.get(w, 0) + c * d
    return GroupAlgebraElement(a.group, a.n, out)


def elements(group, n):
    pool = list(permutations_of(n)) if group == "S" else list(signed_permutations_of(n))
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.dictionaries(st.sampled_from(pool), coeff, max_size=len(pool)).map(
        lambda d: GroupAlgebraElement(group, n, d)
    )


def test_identity_is_neutral():
    a = E("S", 3, {(2, 3, 1): 2, (1, 3, 2): Fraction(-1, 3)})
    one = GroupAlgebraElement.identity("S", 3)
    assert a * one == a and one * a == a


def test_small_idempotents_in_s2():
    minus = E("S", 2, {S2_ID: Fraction(1, 2), S2_S: Fraction(-1, 2)})
    plus = E("S", 2, {S2_ID: Fraction(1, 2), S2_S: Fraction(1, 2)})
    assert minus * minus == minus
    assert idempotent_family_check([minus, plus]).ok
    assert idempotent_family_check([GroupAlgebraElement.identity("S", 3)]).ok


def test_family_check_reports_failures():
    minus = E("S", 2, {S2_ID: Fraction(1, 2), S2_S: Fraction(-1, 2)})
    diag = idempotent_family_check([minus, minus])
    assert not diag.ok and not diag.orthogonal and (0, 1) in diag.failures


def test_group_mismatch():
    with pytest.raises(GroupMismatch):
        GroupAlgebraElement.identity("S", 2) + GroupAlgebraElement.identity("S", 3)
    with pytest.raises(GroupMismatch):
        multiply(GroupAlgebraElement.identity("S", 2), GroupAlgebraElement.identity("B", 2))


def test_no_zero_coefficients_stored():
    a = E("S", 2, {S2_ID: 1, S2_S: 0})
    assert list(a.terms) == [S2_ID]
    assert (a - a).is_zero()


def test_phi_push_examples():
    plus, minus = (1,), (-1,)
    assert phi_push(E("B", 1, {plus: 1, minus: -1})).is_zero()
    assert phi_push(E("B", 1, {plus: 1, minus: 1})) == E("S", 1, {(1,): 2})


def test_z2n_projector():
    assert z2n_projector(1) == E("B", 1, {(1,): Fraction(1, 2), (-1,): Fraction(1, 2)})
    for n in (1, 2, 3):
        e = z2n_projector(n)
        assert e * e == e
    e = z2n_projector(2)
    for g in signed_permutations_of(2):
        x = GroupAlgebraElement.basis("B", g)
        assert e * x == x * e


def test_left_ideal_characters_in_s2():
    one = GroupAlgebraElement.identity("S", 2)
    plus = E("S", 2, {S2_ID: Fraction(1, 2), S2_S: Fraction(1, 2)})
    minus = E("S", 2, {S2_ID: Fraction(1, 2), S2_S: Fraction(-1, 2)})
    assert left_ideal_character(one) == ClassFunction(2, {(1, 1): 2, (2,): 0})
    assert left_ideal_character(plus) == ClassFunction(2, {(1, 1): 1, (2,): 1})
    assert left_ideal_character(minus) == ClassFunction(2, {(1, 1): 1, (2,): -1})


def test_left_ideal_character_needs_idempotent():
    with pytest.raises(NotIdempotent):
        left_ideal_character(E("S", 2, {S2_ID: 2}))


def test_type_b_ideal_dimension():
    e = z2n_projector(2)
    ch = left_ideal_character(e)
    assert ch.character is None and ch.dimension == 2  # kB_2 e_Gamma has dimension |S_2|


@pytest.mark.parametrize("n", [3, 4])
def test_class_formula_matches_direct_trace(n):
    # an idempotent that is not central: (1 + s)/2 for s = (1 2)
    s = (2, 1) + tuple(range(3, n + 1))
    ident = tuple(range(1, n + 1))
    e = E("S", n, {ident: Fraction(1, 2), s: Fraction(1, 2)})
    chi = left_ideal_character(e)
    for g in permutations(range(1, n + 1)):
        assert trace_left_right(e, g) == chi[cycle_type(g)]


@given(elements("S", 4), elements("S", 4))
def test_dense_product_matches_naive(a, b):
    assert multiply(a, b) == naive_product(a, b)


@given(elements("B", 2), elements("B", 2), elements("B", 2))
def test_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements("B", 3), elements("B", 3))
def test_phi_push_is_a_homomorphism(a, b):
    assert phi_push(a * b) == phi_push(a) * phi_push(b)


@given(elements("B", 2))
def test_projector_is_central(x):
    e = z2n_projector(2)
    assert e * x == x * e


@given(elements("B", 3))
def test_json_round_trip(a):
    data = element_to_json(a)
    assert element_from_json(json.dumps(data)) == a
    assert element_from_json(data) == a
