from math import factorial

import pytest

from peaklab.combinatorics import Partition, partitions_of, tau
from peaklab.symfunc import L_lambda, character
from peaklab.vg.action import act
from peaklab.vg.characters import (
    LeavesSpan,
    bidegree,
    component_basis,
    fixed_bidegree,
    flat_orbit,
    subspace_character,
    trace_on_span,
)
from peaklab.vg.fixed import (
    NotStandard,
    factors_into_quadratics,
    fixed_basis,
    gamma,
    gamma_monomial,
    is_in_fixed_basis_set,
    is_standard_t,
    pairing_factors,
    pairing_phi,
    quad_generators,
)
from peaklab.vg.multigraph import Multigraph, cl_data, double_partition
from peaklab.vg.polynomial import Polynomial, format_monomial, mono_degree, parse_monomial
from peaklab.vg.rings import RingSpec, reducer, standard_basis


def M(text):
    return parse_monomial(text)


def names(monomials):
    return {format_monomial(m) for m in monomials}


def test_quad_generators():
    assert names(quad_generators(2)) == {"u1*w12"}
    assert names(quad_generators(3)) == {"u1*w12", "u1*w13", "u2*w23", "w12*w13", "v12*w23"}


def test_fixed_basis_small():
    assert names(fixed_basis(2)) == {"1", "u1*w12"}
    assert names(fixed_basis(3)) == {"1", "u1*w12", "u1*w13", "u2*w23", "w12*w13", "v12*w23"}


@pytest.mark.parametrize("n", range(1, 8))
def test_fixed_basis_size(n):
    assert len(set(fixed_basis(n))) == factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_fixed_basis_membership(n):
    for q in fixed_basis(n):
        assert is_in_fixed_basis_set(q, n)
        assert factors_into_quadratics(q, n)


def test_pairing_examples():
    assert pairing_phi(M("t12*t23")) == M("v12*w23")
    assert pairing_phi(M("t12*t13")) == M("w12*w13")
    assert pairing_phi(M("1")) == ()
    assert pairing_factors(M("t12*t13*t14")) == [M("w13*w14"), M("u1*w12")]


def test_pairing_rejects_nonstandard():
    m = M("t12*t24*t35*t16*t5,10*t78*t89*t7,10")
    assert not is_standard_t(m)
    with pytest.raises(NotStandard):
        pairing_phi(m)


def test_gamma_examples():
    assert gamma(Polynomial.mono(M("u1"))) == Polynomial.one()
    assert gamma_monomial(M("v12*w23")) == M("t12*t23")


@pytest.mark.parametrize("n", range(1, 7))
def test_gamma_inverts_pairing(n):
    images = {}
    for m in standard_basis(RingSpec(n, "A_t")):
        q = pairing_phi(m)
        assert gamma_monomial(q) == m
        assert q not in images
        images[q] = m


@pytest.mark.parametrize("n", range(1, 7))
def test_fixed_basis_bigrading_and_parity(n):
    for q in fixed_basis(n):
        plus, minus = double_partition(q, n)
        assert plus.is_odd()
        assert all(part % 2 == 0 for part in minus)
        assert mono_degree(q) == n - len(plus)
        assert mono_degree(gamma_monomial(q)) == n - len(plus) - len(minus)
        assert mono_degree(q) % 2 == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_fixed_basis_is_sign_invariant(n):
    red = reducer(RingSpec(n, "B_vw"))
    for q in fixed_basis(n):
        for i in range(1, n + 1):
            assert red.normal_form(act(tau(i, n), Polynomial.mono(q))) == Polynomial.mono(q)


def test_multigraph_example():
    m = M("v12^2*w12*w13^2*v23^2*w24*u5*w56^3*u7^2")
    assert double_partition(m, 9) == (Partition((4, 1, 1)), Partition((2, 1)))
    data = {block: (beta, loops) for block, beta, loops in cl_data(m, 9)}
    assert data[(1, 2, 3, 4)] == (5, 0)
    assert data[(5, 6)] == (3, 1)
    assert data[(7,)] == (2, 2)
    assert data[(8,)] == (0, 0) and data[(9,)] == (0, 0)


def test_empty_multigraph():
    assert double_partition((), 3) == (Partition((1, 1, 1)), Partition(()))


@pytest.mark.parametrize("tag", ["B_u", "B_vw", "B_vw_gr"])
@pytest.mark.parametrize("n", range(1, 5))
def test_standard_monomials_are_lightly_looped_forests(tag, n):
    for m in standard_basis(RingSpec(n, tag)):
        assert Multigraph.from_monomial(m, n).is_lightly_looped_forest()


def test_component_basis_examples():
    assert names(component_basis(RingSpec(3, "A_t"), flat_orbit((2, 1)))) == {"t12", "t13", "t23"}
    assert names(component_basis("fixed", bidegree(2, 1), n=3)) == {"u1*w12", "u1*w13", "u2*w23"}
    assert len(component_basis("fixed", bidegree(4, 3), n=4)) == 6
    assert fixed_bidegree(M("u1*w12")) == (2, 1)


def test_fixed_component_character():
    spec = RingSpec(3, "B_vw")
    basis = component_basis("fixed", bidegree(2, 1), n=3)
    chi = subspace_character(basis, spec)
    assert chi[(1, 1, 1)] == 3 and chi[(2, 1)] == -1 and chi[(3,)] == 0
    assert chi == character(L_lambda((2, 1)), 3)


def test_trace_detects_leaving_the_span():
    spec = RingSpec(2, "B_vw")
    with pytest.raises(LeavesSpan):
        trace_on_span((2, 1), [M("w12")], spec)


@pytest.mark.parametrize("n", range(1, 5))
def test_type_a_flat_components_add_up(n):
    spec = RingSpec(n, "A_t")
    total = sum(len(component_basis(spec, flat_orbit(mu))) for mu in partitions_of(n))
    assert total == factorial(n)
