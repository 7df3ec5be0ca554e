"""Distinguished subspaces spanned by basis monomials and traces of the group action on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..combinatorics import Partition, class_representative, partitions_of, sign_changes, compose
from ..group_algebra import ClassFunction
from .action import act
from .fixed import fixed_basis, gamma_monomial
from .multigraph import Multigraph
from .polynomial import Monomial, Polynomial, mono_degree
from .rings import RingSpec, reducer, standard_basis


class LeavesSpan(ValueError):
    """Raised when the image of a basis monomial is not in the span of the basis."""

    def __init__(self, g, m, stray):
        super().__init__(f"g={g} moves {m} outside the span (stray monomial {stray})")
        self.g, self.m, self.stray = g, m, stray


@dataclass(frozen=True)
class Selector:
    kind: str  # "flat-orbit", "bidegree", "double-partition", "degree"
    value: object


def flat_orbit(mu: Sequence[int]) -> Selector:
    return Selector("flat-orbit", Partition(mu))


def bidegree(k: int, l: int) -> Selector:
    return Selector("bidegree", (k, l))


def fixed_bidegree(m: Monomial) -> tuple[int, int]:
    """(total degree, degree after u_i -> 1, v, w -> t)."""
    return mono_degree(m), mono_degree(gamma_monomial(m))


def component_basis(spec: RingSpec | str, selector: Selector, n: int | None = None) -> list[Monomial]:
    """Basis monomials of one homogeneous component.

    `spec` is a RingSpec, or the string "fixed" for the sign-change-invariant
    subspace (then n must be given).  Flat orbits are read off the monomial
    multigraph: the vertex partition into components for A_t, the sizes of the
    loopless components for the type B presentations.
    """
    if spec == "fixed":
        if n is None:
            raise ValueError("n is required for the fixed space")
        if selector.kind == "bidegree":
            return [m for m in fixed_basis(n) if fixed_bidegree(m) == selector.value]
        if selector.kind == "double-partition":
            return [m for m in fixed_basis(n) if Multigraph.from_monomial(m, n).double_partition() == selector.value]
        raise ValueError(f"selector {selector.kind!r} is not available on the fixed space")
    if not isinstance(spec, RingSpec):
        raise ValueError(f"unknown space {spec!r}")
    basis = standard_basis(spec)
    if selector.kind == "flat-orbit":
        mu = Partition(selector.value)
        if spec.tag == "A_t":
            if mu.weight != spec.n:
                raise ValueError(f"type A flat orbits are partitions of {spec.n}")
            return [m for m in basis if Partition(len(b) for b in Multigraph.from_monomial(m, spec.n).type_a_flat()) == mu]
        if mu.weight > spec.n:
            raise ValueError(f"type B flat orbits have weight at most {spec.n}")
        return [m for m in basis if Multigraph.from_monomial(m, spec.n).flat_orbit() == mu]
    if selector.kind == "bidegree":
        if spec.tag not in ("B_vw", "B_vw_gr"):
            raise ValueError("bidegree selector needs a vw presentation")
        k, l = selector.value
        from .rings import vw_degree

        return [m for m in basis if mono_degree(m) == k and vw_degree(m) == l]
    if selector.kind == "degree":
        return [m for m in basis if mono_degree(m) == selector.value]
    raise ValueError(f"unknown selector {selector.kind!r}")


def trace_on_span(g: Sequence[int], basis: Sequence[Monomial], spec: RingSpec, check_span: bool = True) -> Fraction:
    red = reducer(spec)
    members = set(basis)
    total = Fraction(0)
    for m in basis:
        image = act(g, Polynomial.mono(m))
        nf = red.normal_form(image)
        if check_span:
            for mm in nf.terms:
                if mm not in members:
                    raise LeavesSpan(tuple(g), m, mm)
        total += nf.terms.get(m, 0)
    return total


def subspace_character(
    basis: Sequence[Monomial],
    spec: RingSpec,
    classes: Iterable[Partition] | None = None,
    check_span: bool = True,
) -> ClassFunction:
    """S_n character of the span of `basis` modulo the ideal of `spec`, by cycle type."""
    n = spec.n
    values = {}
    for lam in classes if classes is not None else partitions_of(n):
        g = tuple(class_representative(lam))
        tr = trace_on_span(g, basis, spec, check_span)
        if tr.denominator != 1:
            raise ValueError(f"non-integral trace {tr} at class {lam}")
        values[Partition(lam)] = tr
    return ClassFunction(n, values)


def sign_averaged_character(
    basis: Sequence[Monomial],
    spec: RingSpec,
    check_span: bool = True,
) -> ClassFunction:
    """S_n character of the sign-change-invariant part of span(basis).

    For sigma in S_n, trace(sigma e) with e the average of all sign changes z
    equals the mean of trace(sigma z).  Only type B presentations apply.
    """
    if spec.tag == "A_t":
        raise ValueError("sign changes do not act on the type A ring")
    n = spec.n
    zs = [tuple(z) for z in sign_changes(n)]
    values = {}
    for lam in partitions_of(n):
        sigma = tuple(class_representative(lam))
        total = Fraction(0)
        for z in zs:
            total += trace_on_span(compose(sigma, z), basis, spec, check_span)
        values[lam] = total / len(zs)
    return ClassFunction(n, values)


__all__ = [
    "LeavesSpan",
    "Selector",
    "bidegree",
    "component_basis",
    "fixed_bidegree",
    "flat_orbit",
    "sign_averaged_character",
    "subspace_character",
    "trace_on_span",
]
