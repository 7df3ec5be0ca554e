"""Symmetric functions over Q in the power-sum basis.

A SymFunc is a sparse dictionary {Partition: Fraction}, the key lam standing
for p_lam = p_{lam_1} p_{lam_2} ...  Only the operations needed for higher Lie
characters are provided: products, plethysm by p_m and h_m, Frobenius
characteristic, Schur expansion through Murnaghan-Nakayama, and the
restriction/induction operators d/dp_1 and p_1 * (-).
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .combinatorics import Partition, format_partition, parse_partition, partitions_of, z_lambda
from .group_algebra import ClassFunction


class SymFunc:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None):
        out: dict = {}
        for lam, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = Partition(lam)
                out[key] = out.get(key, Fraction(0)) + c
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "SymFunc":
        f = cls.__new__(cls)
        f.terms = terms
        return f

    @classmethod
    def p(cls, *parts: int) -> "SymFunc":
        return cls({Partition(parts): 1})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({Partition(): 1})

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {lam.weight for lam in self.terms}

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, lam: Sequence[int]) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymFunc({(): other})
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SymFunc._raw(out)

    def __neg__(self) -> "SymFunc":
        return SymFunc._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = Fraction(c)
        if not c:
            return SymFunc()
        return SymFunc._raw({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, e: int) -> "SymFunc":
        out = SymFunc.one()
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"SymFunc({format_symfunc(self)})"

    def to_json(self) -> dict:
        return symfunc_to_json(self)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    out: dict = {}
    for a, c in f.terms.items():
        for b, d in g.terms.items():
            key = Partition(a + b)
            out[key] = out.get(key, 0) + c * d
    return SymFunc({k: v for k, v in out.items() if v})


def sym_sum(items: Iterable[SymFunc]) -> SymFunc:
    out: dict = {}
    for f in items:
        for k, v in f.terms.items():
            out[k] = out.get(k, 0) + v
    return SymFunc({k: v for k, v in out.items() if v})


# ---------------------------------------------------------------------------
# plethysm


def plethysm_p(m: int, f: SymFunc) -> SymFunc:
    """p_m[f]: replace every p_k by p_{km}."""
    if m < 1:
        raise ValueError("m must be positive")
    return SymFunc._raw({Partition(m * x for x in lam): c for lam, c in f.terms.items()})


def h(m: int) -> SymFunc:
    """Complete homogeneous symmetric function h_m = sum_lam p_lam / z_lam."""
    return SymFunc({lam: Fraction(1, z_lambda(tuple(lam))) for lam in partitions_of(m)})


def e(m: int) -> SymFunc:
    """Elementary symmetric function e_m = sum_lam sign(lam) p_lam / z_lam."""
    return SymFunc(
        {lam: Fraction((-1) ** (m - len(lam)), z_lambda(tuple(lam))) for lam in partitions_of(m)}
    )


def h_of(m: int, f: SymFunc) -> SymFunc:
    """h_m[f] = sum over nu |- m of (1/z_nu) prod_j p_{nu_j}[f]."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return SymFunc.one()
    if Partition() in f.terms:
        raise ValueError("h_m[f] needs f without a constant term")
    powers: dict[int, SymFunc] = {}
    out = SymFunc()
    for nu in partitions_of(m):
        term = SymFunc.one()
        for part in nu:
            if part not in powers:
                powers[part] = plethysm_p(part, f)
            term = term * powers[part]
        out = out + term.scale(Fraction(1, z_lambda(tuple(nu))))
    return out


def mobius(d: int) -> int:
    out = 1
    k = 2
    while k * k <= d:
        if d % k == 0:
            d //= k
            if d % k == 0:
                return 0
            out = -out
        k += 1
    if d > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def lie_ell(ell: int) -> SymFunc:
    """Lie_ell = (1/ell) sum_{d | ell} mu(d) p_d^{ell/d}."""
    if ell < 1:
        raise ValueError("ell must be positive")
    out = {}
    for d in range(1, ell + 1):
        if ell % d == 0 and mobius(d):
            out[Partition([d] * (ell // d))] = Fraction(mobius(d), ell)
    return SymFunc(out)


@lru_cache(maxsize=None)
def L_lambda(lam: Sequence[int]) -> SymFunc:
    """Higher Lie character: prod_i h_{m_i}[Lie_i] with m_i the multiplicity of i in lam."""
    lam = Partition(lam)
    out = SymFunc.one()
    for part, mult in sorted(lam.multiplicities().items()):
        out = out * h_of(mult, lie_ell(part))
    return out


# ---------------------------------------------------------------------------
# characters


def frobenius(chi: ClassFunction) -> SymFunc:
    return SymFunc({lam: v / z_lambda(tuple(lam)) for lam, v in chi.values.items()})


def character(f: SymFunc, n: int | None = None) -> ClassFunction:
    """Inverse Frobenius map: chi(lam) = z_lam * [p_lam] f."""
    if n is None:
        n = f.degree()
    if f.terms and f.degree() != n:
        raise ValueError(f"degree {f.degree()} does not match n={n}")
    return ClassFunction(n, {lam: z_lambda(tuple(lam)) * c for lam, c in f.terms.items()})


def dimension(f: SymFunc) -> Fraction:
    """Value of the character at the identity: n! times the coefficient of p_1^n."""
    n = f.degree()
    return factorial(n) * f.coefficient([1] * n)


@lru_cache(maxsize=None)
def _beta_char(beta: frozenset, rho: tuple) -> int:
    """Murnaghan-Nakayama on a beta-set: remove rim hooks of sizes rho[0], rho[1], ..."""
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta:
            continue
        height = sum(1 for x in beta if nb < x < b)
        total += (-1) ** height * _beta_char((beta - {b}) | {nb}, rest)
    return total


def irreducible_character(mu: Sequence[int], rho: Sequence[int]) -> int:
    """chi^mu evaluated at a permutation of cycle type rho."""
    mu, rho = Partition(mu), Partition(rho)
    if mu.weight != rho.weight:
        raise ValueError("mu and rho must have the same weight")
    L = len(mu)
    beta = frozenset(mu[i] + (L - 1 - i) for i in range(L))
    return _beta_char(beta, tuple(rho))


def schur(mu: Sequence[int]) -> SymFunc:
    mu = Partition(mu)
    return SymFunc(
        {
            lam: Fraction(irreducible_character(mu, lam), z_lambda(tuple(lam)))
            for lam in partitions_of(mu.weight)
        }
    )


def to_schur(f: SymFunc) -> dict:
    """Coefficients <f, s_mu> = sum_lam [p_lam]f * chi^mu(lam), nonzero ones only."""
    if not f.terms:
        return {}
    n = f.degree()
    out = {}
    for mu in partitions_of(n):
        c = sum((v * irreducible_character(mu, lam) for lam, v in f.terms.items()), Fraction(0))
        if c:
            out[mu] = c
    return out


def from_schur(coeffs: Mapping[Sequence[int], object]) -> SymFunc:
    return sym_sum(schur(mu).scale(c) for mu, c in coeffs.items())


def restrict(f: SymFunc) -> SymFunc:
    """d/dp_1."""
    out: dict = {}
    for lam, c in f.terms.items():
        k = lam.count(1)
        if k:
            rest = list(lam)
            rest.remove(1)
            key = Partition(rest)
            out[key] = out.get(key, 0) + k * c
    return SymFunc({a: b for a, b in out.items() if b})


def induct(f: SymFunc) -> SymFunc:
    """Multiplication by p_1."""
    return SymFunc._raw({Partition(lam + (1,)): c for lam, c in f.terms.items()})


def inner(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall inner product with <p_lam, p_mu> = z_lam delta."""
    return sum(
        (c * g.terms.get(lam, 0) * z_lambda(tuple(lam)) for lam, c in f.terms.items()),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# serialization


def format_symfunc(f: SymFunc) -> str:
    if not f.terms:
        return "0"
    parts = []
    for lam, c in sorted(f.terms.items(), key=lambda kv: (kv[0].weight, kv[0]), reverse=True):
        name = "p[" + format_partition(lam) + "]" if lam else "1"
        parts.append(f"{c}*{name}")
    return " + ".join(parts)


def symfunc_to_json(f: SymFunc) -> dict:
    degs = f.degrees()
    deg = degs.pop() if len(degs) == 1 else None
    return {
        "deg": deg,
        "p": {format_partition(lam): str(c) for lam, c in sorted(f.terms.items(), reverse=True)},
    }


def symfunc_from_json(data: Mapping | str) -> SymFunc:
    if isinstance(data, str):
        data = json.loads(data)
    return SymFunc({parse_partition(k): Fraction(v) for k, v in data["p"].items()})


def schur_to_json(coeffs: Mapping) -> dict:
    return {"s": {format_partition(mu): str(c) for mu, c in sorted(coeffs.items(), reverse=True)}}


__all__ = [
    "L_lambda",
    "SymFunc",
    "character",
    "dimension",
    "e",
    "from_schur",
    "frobenius",
    "h",
    "h_of",
    "induct",
    "inner",
    "irreducible_character",
    "lie_ell",
    "mobius",
    "multiply",
    "plethysm_p",
    "restrict",
    "schur",
    "schur_to_json",
    "sym_sum",
    "symfunc_from_json",
    "symfunc_to_json",
    "to_schur",
]
