"""Eulerian idempotents of types A and B and the peak idempotents.

Both Eulerian families come from binomial generating functions in t:

    type A:  sum_k t^(k+1) E_k = sum_w binom(t - 1 + n - des(w), n) w
    type B:  sum_k t^k     E_k = sum_w binom((t - 1)/2 + n - des_B(w), n) w

The binomial is expanded as a polynomial in t.  Its coefficients depend on
w only through the descent number, so each polynomial is computed once per
descent value.  Peak idempotents are the sign-forgetting images of the type B
family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

from .combinatorics import (
    descent_set_A,
    descent_set_B,
    peak_set,
    permutations_of,
    signed_permutations_of,
)
from .group_algebra import (
    GroupAlgebraElement,
    GroupMismatch,
    group_index,
    idempotent_family_check,
    phi_push,
)

N_MAX_A = 7
N_MAX_B = 5


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def binomial_in_t(shift: Fraction, slope: Fraction, n: int) -> list:
    """Coefficients (constant term first) of binom(slope*t + shift, n) as a polynomial in t."""
    poly = [Fraction(1)]
    for i in range(n):
        poly = _poly_mul(poly, [shift - i, slope])
    inv = Fraction(1, factorial(n))
    return [c * inv for c in poly]


@lru_cache(maxsize=None)
def _type_a_coefficients(n: int, d: int) -> tuple:
    # x = t - 1 + n - d
    return tuple(binomial_in_t(Fraction(n - d - 1), Fraction(1), n))


@lru_cache(maxsize=None)
def _type_b_coefficients(n: int, d: int) -> tuple:
    # x = (t - 1)/2 + n - d
    return tuple(binomial_in_t(Fraction(-1, 2) + n - d, Fraction(1, 2), n))


@dataclass(frozen=True)
class EulerianFamily:
    group: str
    n: int
    elements: tuple = field(repr=False)

    def __getitem__(self, k: int) -> GroupAlgebraElement:
        return self.elements[k]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _check_range(n: int, n_max: int, label: str) -> None:
    if not 1 <= n <= n_max:
        raise ValueError(f"{label}: n={n} outside the configured range 1..{n_max}")


@lru_cache(maxsize=None)
def eulerian_A(n: int) -> EulerianFamily:
    """E^A_0, ..., E^A_{n-1} in kS_n; E^A_k is the coefficient of t^(k+1)."""
    _check_range(n, N_MAX_A, "eulerian_A")
    terms: list[dict] = [dict() for _ in range(n)]
    for w in permutations_of(n):
        coeffs = _type_a_coefficients(n, len(descent_set_A(w)))
        if coeffs[0]:
            raise AssertionError("type A generating function has a constant term")
        for k in range(n):
            c = coeffs[k + 1]
            if c:
                terms[k][tuple(w)] = c
    return EulerianFamily("S", n, tuple(GroupAlgebraElement("S", n, t) for t in terms))


@lru_cache(maxsize=None)
def eulerian_B(n: int) -> EulerianFamily:
    """E^B_0, ..., E^B_n in kB_n; E^B_k is the coefficient of t^k."""
    _check_range(n, N_MAX_B, "eulerian_B")
    terms: list[dict] = [dict() for _ in range(n + 1)]
    for w in signed_permutations_of(n):
        coeffs = _type_b_coefficients(n, len(descent_set_B(w)))
        for k in range(n + 1):
            c = coeffs[k]
            if c:
                terms[k][tuple(w)] = c
    return EulerianFamily("B", n, tuple(GroupAlgebraElement("B", n, t) for t in terms))


@dataclass(frozen=True)
class PeakFamily:
    n: int
    elements: tuple = field(repr=False)

    @property
    def zero_indices(self) -> tuple:
        return tuple(k for k, e in enumerate(self.elements) if e.is_zero())

    def __getitem__(self, k: int) -> GroupAlgebraElement:
        return self.elements[k]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@lru_cache(maxsize=None)
def peak_idempotents(n: int) -> PeakFamily:
    """pi_k = phi(E^B_k) for k = 0..n."""
    fam = eulerian_B(n)
    return PeakFamily(n, tuple(phi_push(e) for e in fam))


def statistic_constancy(
    e: GroupAlgebraElement, statistic: Callable[[tuple], object]
) -> tuple[bool, object]:
    """Check that the coefficient of w in e depends only on statistic(w), over the whole group.

    Returns (ok, witness) where witness is a pair of windows with equal
    statistic but different coefficients.
    """
    seen: dict = {}
    for w in group_index(e.group, e.n).elements:
        key = statistic(w)
        c = e.coefficient(w)
        if key in seen:
            w0, c0 = seen[key]
            if c0 != c:
                return False, (w0, w)
        else:
            seen[key] = (w, c)
    return True, None


def descent_statistic(group: str) -> Callable:
    return descent_set_A if group == "S" else descent_set_B


def peak_statistic() -> Callable:
    return peak_set


def compare_with_external_family(
    peak_family: PeakFamily, external: Sequence[GroupAlgebraElement], selector: Callable
) -> list:
    """Plug-in point for an externally constructed family of primitive type A idempotents.

    `external` is indexed however the caller likes; `selector(k)` returns the
    indices of `external` whose sum should equal pi_k.  Returns the list of
    k where the equality fails.  No construction of the external family ships
    with this package.
    """
    bad = []
    for k, pi in enumerate(peak_family):
        total = GroupAlgebraElement("S", peak_family.n)
        for i in selector(k):
            if (external[i].group, external[i].n) != ("S", peak_family.n):
                raise GroupMismatch("external family must live in kS_n")
            total = total + external[i]
        if total != pi:
            bad.append(k)
    return bad


__all__ = [
    "EulerianFamily",
    "PeakFamily",
    "binomial_in_t",
    "compare_with_external_family",
    "descent_statistic",
    "eulerian_A",
    "eulerian_B",
    "idempotent_family_check",
    "peak_idempotents",
    "peak_statistic",
    "statistic_constancy",
]
