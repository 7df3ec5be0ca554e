"""Sparse polynomials with exact rational coefficients over the ring alphabets.

A variable is a tuple:

    ("t", i, j)   t_ij            type A
    ("u", i)      u_i
    ("p", i, j)   u^+_ij
    ("m", i, j)   u^-_ij
    ("v", i, j)   v_ij
    ("w", i, j)   w_ij

always with i < j.  A monomial is a tuple of (variable, exponent) pairs sorted
by `var_rank`, so equal monomials are equal tuples.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

KINDS = ("t", "u", "p", "m", "v", "w")
PAIR_KINDS = ("t", "p", "m", "v", "w")
_SUB = {"t": 0, "p": 0, "v": 0, "m": 1, "w": 1}

Monomial = tuple
ONE: Monomial = ()


def var_level(var: tuple) -> int:
    """Index of the level set containing var: the larger vertex index."""
    return var[1] if var[0] == "u" else var[2]


@lru_cache(maxsize=None)
def var_rank(var: tuple) -> tuple:
    """Sort key refining the level order; inside a level u_j < v_1j < w_1j < v_2j < ..."""
    if var[0] == "u":
        return (var[1], 0, 0, 0)
    return (var[2], 1, var[1], _SUB[var[0]])


def make_var(kind: str, *idx: int) -> tuple:
    if kind not in KINDS:
        raise ValueError(f"unknown variable kind {kind!r}")
    if kind == "u":
        if len(idx) != 1 or idx[0] < 1:
            raise ValueError(f"u takes one positive index, got {idx}")
        return ("u", int(idx[0]))
    i, j = (int(x) for x in idx)
    if not 1 <= i < j:
        raise ValueError(f"{kind} needs indices 1 <= i < j, got {idx}")
    return (kind, i, j)


def monomial(*factors: tuple | tuple[tuple, int]) -> Monomial:
    """Build a monomial from variables and (variable, exponent) pairs."""
    exps: dict = {}
    for f in factors:
        if isinstance(f[0], tuple):
            var, e = f
        else:
            var, e = f, 1
        exps[var] = exps.get(var, 0) + e
    return _normalize(exps)


def _normalize(exps: Mapping) -> Monomial:
    return tuple(sorted(((v, e) for v, e in exps.items() if e), key=lambda ve: var_rank(ve[0])))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return _normalize(exps)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    eb = dict(b)
    return all(eb.get(v, 0) >= e for v, e in a)


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    exps = dict(b)
    for v, e in a:
        exps[v] -= e
        if exps[v] < 0:
            raise ValueError("monomial does not divide")
    return _normalize(exps)


def mono_key(m: Monomial) -> tuple:
    """Term order key: degree, then the descending list of levels, then of variable ranks.

    Comparing level multisets before individual variables makes every marked
    initial term of the quadratic relation tables the leading term, whatever
    order is used inside a level.
    """
    ranks = []
    for v, e in m:
        ranks.extend([var_rank(v)] * e)
    ranks.sort(reverse=True)
    return (len(ranks), tuple(r[0] for r in ranks), tuple(ranks))


def mono_vars(m: Monomial) -> list:
    out = []
    for v, e in m:
        out.extend([v] * e)
    return out


# ---------------------------------------------------------------------------


class Polynomial:
    """A sparse polynomial: dictionary from monomials to nonzero Fractions."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def var(cls, var: tuple, coeff=1) -> "Polynomial":
        return cls({((var, 1),): coeff})

    @classmethod
    def mono(cls, m: Monomial, coeff=1) -> "Polynomial":
        return cls({m: coeff})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({ONE: 1})

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial({ONE: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial()
        return Polynomial._raw({m: c * x for m, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial({m: c for m, c in out.items() if c})

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, e: int) -> "Polynomial":
        out = Polynomial.one()
        for _ in range(e):
            out = out * self
        return out

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def leading(self) -> Monomial:
        return max(self.terms, key=mono_key)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda mc: mono_key(mc[0]), reverse=True)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


def poly_sum(items: Iterable[Polynomial]) -> Polynomial:
    out: dict = {}
    for p in items:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return Polynomial({m: c for m, c in out.items() if c})


def substitute(p: Polynomial, images: Mapping[tuple, Polynomial]) -> Polynomial:
    """Ring homomorphism sending each variable in `images` to its image (others fixed)."""
    out: dict = {}
    cache: dict = {}
    for m, c in p.terms.items():
        img = Polynomial.one()
        for v, e in m:
            key = (v, e)
            if key not in cache:
                base = images.get(v)
                cache[key] = (base if base is not None else Polynomial.var(v)) ** e
            img = img * cache[key]
        for mm, cc in img.terms.items():
            out[mm] = out.get(mm, 0) + c * cc
    return Polynomial({m: c for m, c in out.items() if c})


# ---------------------------------------------------------------------------
# text form


def format_var(var: tuple) -> str:
    if var[0] == "u":
        return f"u{var[1]}"
    name = {"t": "t", "p": "u+", "m": "u-", "v": "v", "w": "w"}[var[0]]
    i, j = var[1], var[2]
    sep = "," if i >= 10 or j >= 10 else ""
    return f"{name}{i}{sep}{j}"


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for v, e in m:
        parts.append(format_var(v) + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for m, c in p.sorted_terms():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = format_monomial(m)
        else:
            body = f"{a}*{format_monomial(m)}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


_VAR_RE = re.compile(r"^(u\+|u-|t|u|v|w)(\d+(?:,\d+)?)(?:\^(\d+))?$")


def parse_var_token(token: str) -> tuple[tuple, int]:
    match = _VAR_RE.match(token.strip())
    if not match:
        raise ValueError(f"cannot parse variable {token!r}")
    name, idx, exp = match.groups()
    exp = int(exp) if exp else 1
    if name == "u":
        return make_var("u", int(idx)), exp
    if "," in idx:
        i, j = (int(x) for x in idx.split(","))
    else:
        if len(idx) != 2:
            raise ValueError(f"ambiguous index {idx!r}; write it as i,j")
        i, j = int(idx[0]), int(idx[1])
    kind = {"t": "t", "u+": "p", "u-": "m", "v": "v", "w": "w"}[name]
    return make_var(kind, i, j), exp


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text in ("", "1"):
        return ONE
    factors = [parse_var_token(tok) for tok in text.split("*")]
    return monomial(*factors)
