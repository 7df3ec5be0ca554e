import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from peaklab.combinatorics import compose, permutations_of, signed_permutations_of, tau
from peaklab.vg.action import act, change_basis
from peaklab.vg.fixed import quad_generators
from peaklab.vg.polynomial import Polynomial, mono_mul, parse_monomial
from peaklab.vg.rings import TAGS, RingSpec, alphabet, reducer, relations


def P(*terms):
    return Polynomial({parse_monomial(m): c for c, m in terms})


def test_change_of_basis_examples():
    assert change_basis(P((1, "v12")), "vw->u") == P((1, "u+12"), (1, "u-12"))
    half = Fraction(1, 2)
    assert change_basis(P((1, "u+12")), "u->vw") == P((half, "v12"), (half, "w12"))
    with pytest.raises(ValueError):
        change_basis(P((1, "v12")), "sideways")


def test_action_examples():
    assert act(tau(1, 2), P((1, "u1"))) == P((-1, "u1"))
    assert act((4, 3, -5, -1, 2), P((1, "u+24"))) == P((-1, "u-13"))
    assert act((2, 1), P((1, "w12"))) == P((-1, "v12"))


@pytest.mark.parametrize(
    "var, under_tau_i, under_tau_j",
    [
        ("u1", "-u1", "u1"),
        ("v13", "v13", "-v13"),
        ("w13", "-w13", "w13"),
        ("u+13", "u-13", "-u-13"),
        ("u-13", "u+13", "-u+13"),
    ],
)
def test_sign_change_table(var, under_tau_i, under_tau_j):
    def parse(text):
        sign = -1 if text.startswith("-") else 1
        return P((sign, text.lstrip("-")))

    assert act(tau(1, 3), parse(var)) == parse(under_tau_i)
    assert act(tau(3, 3), parse(var)) == parse(under_tau_j)
    assert act(tau(2, 3), parse(var)) == parse(var)


def test_tau_fixes_quadratic_generators():
    for n in (2, 3, 4):
        for q in quad_generators(n):
            for i in range(1, n + 1):
                assert act(tau(i, n), Polynomial.mono(q)) == Polynomial.mono(q)


def test_act_rejects_bad_inputs():
    with pytest.raises(ValueError):
        act((-1, 2), P((1, "t12")), RingSpec(2, "A_t"))
    with pytest.raises(ValueError):
        act((1, 2, 3), P((1, "t12")), RingSpec(2, "A_t"))


def coxeter_generators(n):
    ident = list(range(1, n + 1))
    gens = [tuple([-1] + ident[1:])]
    for i in range(n - 1):
        w = ident[:]
        w[i], w[i + 1] = w[i + 1], w[i]
        gens.append(tuple(w))
    return gens


@pytest.mark.parametrize("tag", TAGS)
@pytest.mark.parametrize("n", range(1, 5))
def test_ideals_are_group_stable(tag, n):
    spec = RingSpec(n, tag)
    red = reducer(spec)
    if tag == "A_t":
        group = list(permutations_of(n)) if n <= 3 else coxeter_generators(n)[1:]
    else:
        group = list(signed_permutations_of(n)) if n <= 3 else coxeter_generators(n)
    for rel in relations(spec):
        for g in group:
            assert red.normal_form(act(g, rel.poly)).is_zero(), (g, rel)


def random_monomial(spec, rng, degree=3):
    m = ()
    letters = alphabet(spec)
    for _ in range(rng.randint(0, degree)):
        m = mono_mul(m, ((rng.choice(letters), 1),))
    return m


@given(st.sampled_from(("B_u", "B_vw")), st.integers(1, 4), st.integers(0, 10**6))
def test_action_composes(tag, n, seed):
    rng = random.Random(seed)
    spec = RingSpec(n, tag)
    group = list(signed_permutations_of(n))
    g, h = rng.choice(group), rng.choice(group)
    p = Polynomial.mono(random_monomial(spec, rng))
    assert act(g, act(h, p)) == act(compose(g, h), p)


@given(st.integers(2, 4), st.integers(0, 10**6))
def test_type_a_action_composes(n, seed):
    rng = random.Random(seed)
    spec = RingSpec(n, "A_t")
    group = list(permutations_of(n))
    g, h = rng.choice(group), rng.choice(group)
    p = Polynomial.mono(random_monomial(spec, rng))
    assert act(g, act(h, p)) == act(compose(g, h), p)


@given(st.integers(1, 4), st.integers(0, 10**6))
def test_change_of_basis_round_trip(n, seed):
    rng = random.Random(seed)
    spec = RingSpec(n, "B_vw")
    p = Polynomial({random_monomial(spec, rng): rng.randint(-3, 3) for _ in range(3)})
    assert change_basis(change_basis(p, "vw->u"), "u->vw") == p
