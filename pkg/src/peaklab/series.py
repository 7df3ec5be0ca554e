"""Bigraded series: the equivariant series built from higher Lie characters,
its dimension specialization, the branching rule, the generating function
check, and the Jordan components.

Exponent conventions: a series is a dictionary {(i, j): coefficient} standing
for sum t^i q^j.  The equivariant series uses the halved t-grading
t^{(n - odd(lam))/2}, so `bihilb(n)` has integer exponents; `bihilb_squared`
gives the version in t^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Mapping

from .combinatorics import Partition, class_size, partitions_of
from .symfunc import L_lambda, SymFunc, format_symfunc, induct, restrict, sym_sum, to_schur


@dataclass(frozen=True)
class ParamSeries:
    """A finite sum of t^i q^j f_ij with symmetric-function coefficients f_ij."""

    coeffs: tuple  # sorted ((i, j), SymFunc) pairs with nonzero SymFunc

    @classmethod
    def from_dict(cls, d: Mapping) -> "ParamSeries":
        return cls(tuple(sorted((k, v) for k, v in d.items() if not v.is_zero())))

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __add__(self, other: "ParamSeries") -> "ParamSeries":
        out = self.as_dict()
        for k, v in other.coeffs:
            out[k] = out[k] + v if k in out else v
        return ParamSeries.from_dict(out)

    def __sub__(self, other: "ParamSeries") -> "ParamSeries":
        return self + other.map(lambda f: -f)

    def shift(self, dt: int, dq: int) -> "ParamSeries":
        return ParamSeries.from_dict({(i + dt, j + dq): f for (i, j), f in self.coeffs})

    def map(self, op: Callable[[SymFunc], SymFunc]) -> "ParamSeries":
        return ParamSeries.from_dict({k: op(f) for k, f in self.coeffs})

    def is_zero(self) -> bool:
        return not self.coeffs

    def dimensions(self) -> dict:
        """Replace each coefficient by the dimension of the module it describes."""
        out = {}
        for k, f in self.coeffs:
            n = f.degree()
            out[k] = factorial(n) * f.coefficient([1] * n)
        return {k: int(v) for k, v in out.items() if v}

    def schur(self) -> dict:
        return {k: to_schur(f) for k, f in self.coeffs}

    def to_json(self) -> dict:
        out: dict = {}
        for (i, j), f in self.coeffs:
            out.setdefault(str(i), {})[str(j)] = f.to_json()
        return out

    def __str__(self) -> str:
        return " + ".join(f"t^{i} q^{j} ({format_symfunc(f)})" for (i, j), f in self.coeffs) or "0"


@lru_cache(maxsize=None)
def equivariant_series(n: int) -> ParamSeries:
    """sum over lam |- n of L_lam t^{(n - odd(lam))/2} q^{n - len(lam)}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ParamSeries.from_dict({(0, 0): SymFunc.one()})
    out: dict = {}
    for lam in partitions_of(n):
        key = ((n - lam.odd) // 2, n - len(lam))
        out[key] = out[key] + L_lambda(lam) if key in out else L_lambda(lam)
    return ParamSeries.from_dict(out)


def branching_sides(n: int) -> tuple[ParamSeries, ParamSeries]:
    """Both sides of d/dp_1 IH_n = IH_{n-1} + t q p_1 (1 + q p_1 d/dp_1) IH_{n-2}."""
    if n < 2:
        raise ValueError("the branching rule needs n >= 2")
    lhs = equivariant_series(n).map(restrict)
    prev2 = equivariant_series(n - 2)
    inner = prev2 + prev2.map(lambda f: induct(restrict(f))).shift(0, 1)
    rhs = equivariant_series(n - 1) + inner.map(induct).shift(1, 1)
    return lhs, rhs


def check_branching(n: int) -> tuple[bool, ParamSeries | None]:
    lhs, rhs = branching_sides(n)
    diff = lhs - rhs
    return diff.is_zero(), (None if diff.is_zero() else diff)


# ---------------------------------------------------------------------------
# dimension series


def _add_into(d: dict, key, value) -> None:
    s = d.get(key, 0) + value
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def bihilb_from_lie(n: int) -> dict:
    """Dimension specialization of the equivariant series."""
    return equivariant_series(n).dimensions()


def bihilb_expression(n: int) -> dict:
    """sum over sigma in S_n of t^{(n - odd(sigma))/2} q^{n - cyc(sigma)}, grouped by cycle type."""
    out: dict = {}
    for lam in partitions_of(n):
        _add_into(out, ((n - lam.odd) // 2, n - len(lam)), class_size(lam))
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def bihilb_recursion(n: int) -> tuple:
    """bihilb_n = bihilb_{n-1} + t q (n-1)(1 + q(n-2)) bihilb_{n-2}, with bihilb_0 = bihilb_1 = 1."""
    if n <= 1:
        return (((0, 0), 1),)
    out = dict(bihilb_recursion(n - 1))
    for (i, j), c in bihilb_recursion(n - 2):
        _add_into(out, (i + 1, j + 1), (n - 1) * c)
        _add_into(out, (i + 1, j + 2), (n - 1) * (n - 2) * c)
    return tuple(sorted(out.items()))


def bihilb_squared(series: Mapping) -> dict:
    """Rewrite a series in the halved grading as one in t^2."""
    return {(2 * i, j): c for (i, j), c in series.items()}


def format_series(series: Mapping, t: str = "t", q: str = "q") -> str:
    if not series:
        return "0"
    parts = []
    for (i, j), c in sorted(series.items()):
        mono = ""
        if i:
            mono += t + (f"^{i}" if i > 1 else "")
        if j:
            mono += q + (f"^{j}" if j > 1 else "")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}{mono}")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# generating function in the substituted variables t = s^2


def _poly_ab_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            _add_into(out, (a1 + a2, b1 + b2), c1 * c2)
    return out


def _binomial_series(alpha: dict, k_max: int, rising: bool) -> list:
    """Coefficients of z^k in (1 - z)^(-alpha) (rising=True) or (1 + z)^alpha, as polynomials in a, b."""
    out = [{(0, 0): Fraction(1)}]
    current = {(0, 0): Fraction(1)}
    for k in range(1, k_max + 1):
        shifted = dict(alpha)
        _add_into(shifted, (0, 0), Fraction(k - 1) if rising else Fraction(-(k - 1)))
        current = {key: c / k for key, c in _poly_ab_mul(current, shifted).items()}
        out.append(current)
    return out


GF_READINGS = ("even-odd", "odd-even")


def gf_coefficients(n_max: int, reading: str = "even-odd") -> list[dict]:
    """n! [x^n] of the cycle-indicator closed form at a = 1/q, b = 1/(s q), z = s q x.

    reading "odd-even": a marks odd cycles and b even cycles, so the closed form
    is (1-z)^{-(a+b)/2} (1+z)^{(a-b)/2}.  Reading "even-odd": a marks even
    cycles and b odd ones, giving (1-z)^{-(a+b)/2} (1+z)^{(b-a)/2}.  Only the
    second is compatible with the substitution above (with the first, the x^1
    coefficient is s = t^{1/2}).  Returned as Laurent polynomials
    {(s exponent, q exponent): coefficient}.
    """
    if reading not in GF_READINGS:
        raise ValueError(f"reading must be one of {GF_READINGS}")
    half = Fraction(1, 2)
    alpha = {(1, 0): half, (0, 1): half}  # (a + b)/2
    sign = 1 if reading == "odd-even" else -1
    beta = {(1, 0): sign * half, (0, 1): -sign * half}
    first = _binomial_series(alpha, n_max, rising=True)
    second = _binomial_series(beta, n_max, rising=False)
    out = []
    for n in range(n_max + 1):
        coeff_ab: dict = {}
        for k in range(n + 1):
            for key, c in _poly_ab_mul(first[k], second[n - k]).items():
                _add_into(coeff_ab, key, c)
        laurent: dict = {}
        for (ia, ib), c in coeff_ab.items():
            # a^ia b^ib (s q)^n = q^{-ia} s^{-ib} q^{-ib} s^n q^n
            _add_into(laurent, (n - ib, n - ia - ib), c * factorial(n))
        out.append(dict(sorted(laurent.items())))
    return out


def bihilb_in_s(series: Mapping) -> dict:
    """Substitute t = s^2 in a halved-grading series."""
    return {(2 * i, j): Fraction(c) for (i, j), c in series.items()}


# ---------------------------------------------------------------------------
# Sheffer specialization


def at_q_equals_one(series: Mapping) -> dict:
    out: dict = {}
    for (i, _), c in series.items():
        _add_into(out, i, c)
    return dict(sorted(out.items()))


def sheffer_rescaled(n: int) -> dict:
    """p_n(x) = x^n bihilb_n(1/x^2, 1), as {x exponent: coefficient}."""
    spec = at_q_equals_one(dict(bihilb_recursion(n)))
    return {n - 2 * i: c for i, c in spec.items()}


def sheffer_recursion(n: int) -> dict:
    """p_n = x p_{n-1} + (n-1)^2 p_{n-2}, p_0 = 1, p_{-1} = 0."""
    prev2: dict = {}
    prev: dict = {0: 1}
    if n == 0:
        return prev
    for k in range(1, n + 1):
        cur: dict = {}
        for e, c in prev.items():
            _add_into(cur, e + 1, c)
        for e, c in prev2.items():
            _add_into(cur, e, (k - 1) ** 2 * c)
        prev2, prev = prev, cur
    return dict(sorted(prev.items()))


# ---------------------------------------------------------------------------
# Jordan components


@lru_cache(maxsize=None)
def jordan_P(n: int, m: int) -> SymFunc:
    """Sum of L_lam over partitions lam of n with exactly m even parts (zero for m < 0)."""
    if m < 0 or n < 0:
        return SymFunc()
    if n == 0:
        return SymFunc.one() if m == 0 else SymFunc()
    return sym_sum(L_lambda(lam) for lam in partitions_of(n) if lam.even == m)


def odd_partition_lie_sum(n: int) -> SymFunc:
    return sym_sum(L_lambda(lam) for lam in partitions_of(n) if lam.is_odd())


def jordan_odd_identity(n: int, m: int) -> tuple[SymFunc, SymFunc]:
    """For odd n: (P^(n)_m, p_1 P^(n-1)_m)."""
    return jordan_P(n, m), induct(jordan_P(n - 1, m))


def jordan_even_identity(n: int, m: int) -> tuple[SymFunc, SymFunc]:
    """For even n: (d/dp_1 P^(n)_m, p_1 (d/dp_1 P^(n-1)_m + P^(n-2)_{m-1}))."""
    lhs = restrict(jordan_P(n, m))
    rhs = induct(restrict(jordan_P(n - 1, m)) + jordan_P(n - 2, m - 1))
    return lhs, rhs


def oddparts_lie_sum(n: int, mu) -> SymFunc:
    mu = Partition(mu)
    return sym_sum(L_lambda(lam) for lam in partitions_of(n) if lam.oddparts == mu)


def bigraded_lie_sum(n: int, k: int, ell: int) -> SymFunc:
    """Sum of L_lam with len(lam) = n - ell and odd(lam) = n - k."""
    return sym_sum(
        L_lambda(lam) for lam in partitions_of(n) if len(lam) == n - ell and lam.odd == n - k
    )


__all__ = [
    "ParamSeries",
    "at_q_equals_one",
    "bigraded_lie_sum",
    "bihilb_expression",
    "bihilb_from_lie",
    "bihilb_in_s",
    "bihilb_recursion",
    "bihilb_squared",
    "branching_sides",
    "check_branching",
    "equivariant_series",
    "format_series",
    "GF_READINGS",
    "gf_coefficients",
    "jordan_P",
    "jordan_even_identity",
    "jordan_odd_identity",
    "odd_partition_lie_sum",
    "oddparts_lie_sum",
    "sheffer_recursion",
    "sheffer_rescaled",
]
