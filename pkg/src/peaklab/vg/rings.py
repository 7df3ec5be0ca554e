"""Presentations, Groebner normal forms, standard bases and Hilbert series.

Four presentations are supported, each a quotient of a polynomial ring by a
quadratic ideal whose generators below form a Groebner basis with the
recorded initial terms:

    A_t      k[t_ij] (type A)
    B_u      k[u_i, u+_ij, u-_ij] (type B)
    B_vw     k[u_i, v_ij, w_ij], the type B ring after v = u+ + u-, w = u+ - u-
    B_vw_gr  associated graded of B_vw for the u-adic filtration
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from .polynomial import (
    ONE,
    Monomial,
    Polynomial,
    mono_div,
    mono_key,
    mono_mul,
    monomial,
)

TAGS = ("A_t", "B_u", "B_vw", "B_vw_gr")
TAG_ALIASES = {
    "a-t": "A_t",
    "b-u": "B_u",
    "b-vw": "B_vw",
    "b-vw-gr": "B_vw_gr",
}


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RingSpec:
    n: int
    tag: str

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown presentation {self.tag!r}; expected one of {TAGS}")
        if self.n < 1:
            raise ValueError("n must be at least 1")

    @classmethod
    def parse(cls, n: int, tag: str) -> "RingSpec":
        return cls(n, TAG_ALIASES.get(tag, tag))

    @property
    def kinds(self) -> frozenset:
        return {
            "A_t": frozenset("t"),
            "B_u": frozenset("upm"),
            "B_vw": frozenset("uvw"),
            "B_vw_gr": frozenset("uvw"),
        }[self.tag]


def level_sets(spec: RingSpec) -> list[list[tuple]]:
    """Variables grouped by level, in increasing level order."""
    n = spec.n
    if spec.tag == "A_t":
        return [[("t", i, j) for i in range(1, j)] for j in range(2, n + 1)]
    pair = ("p", "m") if spec.tag == "B_u" else ("v", "w")
    out = []
    for j in range(1, n + 1):
        level = [("u", j)]
        for i in range(1, j):
            level.append((pair[0], i, j))
            level.append((pair[1], i, j))
        out.append(level)
    return out


def alphabet(spec: RingSpec) -> list[tuple]:
    return [v for level in level_sets(spec) for v in level]


def check_alphabet(p: Polynomial, spec: RingSpec) -> None:
    for v in p.variables():
        if v[0] not in spec.kinds or max(v[1:]) > spec.n:
            raise AlphabetMismatch(f"variable {v} is not in the alphabet of {spec}")


# ---------------------------------------------------------------------------
# relations


@dataclass(frozen=True)
class Relation:
    poly: Polynomial
    initial: Monomial

    def __repr__(self) -> str:
        from .polynomial import format_monomial

        return f"Relation({self.poly}, initial={format_monomial(self.initial)})"


def _rel(terms: list, initial: Monomial) -> Relation:
    p = Polynomial({monomial(*vs): c for c, vs in terms})
    if initial not in p.terms:
        raise AssertionError("initial term missing from relation")
    return Relation(p, initial)


def _sq(v: tuple) -> tuple:
    return (v, 2)


@lru_cache(maxsize=None)
def relations(spec: RingSpec) -> tuple:
    n, tag = spec.n, spec.tag
    out: list[Relation] = []
    pairs = list(combinations(range(1, n + 1), 2))
    triples = list(combinations(range(1, n + 1), 3))
    if tag == "A_t":
        for i, j in pairs:
            t = ("t", i, j)
            out.append(_rel([(1, [_sq(t)])], monomial(_sq(t))))
        for i, j, k in triples:
            tij, tjk, tik = ("t", i, j), ("t", j, k), ("t", i, k)
            out.append(
                _rel(
                    [(1, [tij, tjk]), (-1, [tik, tij]), (-1, [tik, tjk])],
                    monomial(tik, tjk),
                )
            )
        return tuple(out)

    if tag == "B_u":
        for i, j in pairs:
            P, M = ("p", i, j), ("m", i, j)
            out.append(_rel([(1, [_sq(P)])], monomial(_sq(P))))
            out.append(_rel([(1, [_sq(M)])], monomial(_sq(M))))
        for i in range(1, n + 1):
            u = ("u", i)
            out.append(_rel([(1, [_sq(u)])], monomial(_sq(u))))
        for i, j in pairs:
            ui, uj, P, M = ("u", i), ("u", j), ("p", i, j), ("m", i, j)
            out.append(_rel([(1, [ui, P]), (-1, [ui, M]), (-1, [P, M])], monomial(P, M)))
            out.append(_rel([(1, [ui, P]), (-1, [ui, uj]), (-1, [P, uj])], monomial(P, uj)))
            out.append(_rel([(1, [ui, uj]), (-1, [ui, M]), (-1, [uj, M])], monomial(uj, M)))
        for i, j, k in triples:
            Pij, Pjk, Pik = ("p", i, j), ("p", j, k), ("p", i, k)
            Mij, Mjk, Mik = ("m", i, j), ("m", j, k), ("m", i, k)
            out.append(
                _rel([(1, [Pij, Pjk]), (-1, [Pij, Pik]), (-1, [Pik, Pjk])], monomial(Pik, Pjk))
            )
            out.append(
                _rel([(1, [Mij, Pjk]), (-1, [Mij, Mik]), (-1, [Mik, Pjk])], monomial(Mik, Pjk))
            )
            out.append(
                _rel([(-1, [Mij, Mjk]), (1, [Mij, Pik]), (-1, [Pik, Mjk])], monomial(Pik, Mjk))
            )
            out.append(
                _rel([(-1, [Pij, Mjk]), (1, [Pij, Mik]), (-1, [Mik, Mjk])], monomial(Mik, Mjk))
            )
        return tuple(out)

    graded = tag == "B_vw_gr"
    for i in range(1, n + 1):
        u = ("u", i)
        out.append(_rel([(1, [_sq(u)])], monomial(_sq(u))))
    for i, j in pairs:
        ui, uj, V, W = ("u", i), ("u", j), ("v", i, j), ("w", i, j)
        if graded:
            out.append(_rel([(1, [_sq(V)])], monomial(_sq(V))))
            out.append(_rel([(1, [_sq(W)])], monomial(_sq(W))))
        else:
            out.append(_rel([(-2, [ui, W]), (1, [_sq(V)])], monomial(_sq(V))))
            out.append(_rel([(2, [ui, W]), (1, [_sq(W)])], monomial(_sq(W))))
        out.append(_rel([(1, [V, W])], monomial(V, W)))
        out.append(_rel([(1, [ui, W]), (-1, [uj, V])], monomial(uj, V)))
        if graded:
            out.append(_rel([(1, [ui, V]), (-1, [uj, W])], monomial(uj, W)))
        else:
            out.append(_rel([(1, [ui, V]), (-2, [ui, uj]), (-1, [uj, W])], monomial(uj, W)))
    for i, j, k in triples:
        Vij, Vjk, Vik = ("v", i, j), ("v", j, k), ("v", i, k)
        Wij, Wjk, Wik = ("w", i, j), ("w", j, k), ("w", i, k)
        out.append(_rel([(1, [Vij, Wjk]), (-1, [Wij, Wik]), (-1, [Vik, Vjk])], monomial(Vik, Vjk)))
        out.append(_rel([(1, [Wij, Wjk]), (-1, [Vij, Wik]), (-1, [Wik, Wjk])], monomial(Wik, Wjk)))
        out.append(_rel([(1, [Vij, Vjk]), (-1, [Vij, Vik]), (-1, [Vik, Wjk])], monomial(Vik, Wjk)))
        out.append(_rel([(1, [Wij, Vjk]), (-1, [Wij, Vik]), (-1, [Wik, Vjk])], monomial(Wik, Vjk)))
    return tuple(out)


# ---------------------------------------------------------------------------
# normal forms


class Reducer:
    """Division by the quadratic Groebner basis of one presentation, memoized per monomial."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.rules: dict[Monomial, tuple] = {}
        for rel in relations(spec):
            lead = rel.poly.terms[rel.initial]
            tail = tuple(
                (m, -c / lead) for m, c in rel.poly.terms.items() if m != rel.initial
            )
            if rel.initial in self.rules:
                raise AssertionError(f"duplicate initial term {rel.initial}")
            self.rules[rel.initial] = tail
        self._cache: dict[Monomial, dict] = {}

    def find_rule(self, m: Monomial):
        for a, (v, e) in enumerate(m):
            if e >= 2:
                key = ((v, 2),)
                if key in self.rules:
                    return key
            for w, _ in m[a + 1 :]:
                key = ((v, 1), (w, 1))
                if key in self.rules:
                    return key
        return None

    def reduce_monomial(self, m: Monomial) -> dict:
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        rule = self.find_rule(m)
        if rule is None:
            out = {m: Fraction(1)}
        else:
            rest = mono_div(m, rule)
            out = {}
            for tm, tc in self.rules[rule]:
                for mm, cc in self.reduce_monomial(mono_mul(tm, rest)).items():
                    s = out.get(mm, 0) + tc * cc
                    if s:
                        out[mm] = s
                    else:
                        out.pop(mm, None)
        self._cache[m] = out
        return out

    def normal_form(self, p: Polynomial) -> Polynomial:
        out: dict = {}
        for m, c in p.terms.items():
            for mm, cc in self.reduce_monomial(m).items():
                s = out.get(mm, 0) + c * cc
                if s:
                    out[mm] = s
                else:
                    out.pop(mm, None)
        return Polynomial._raw(out)

    def is_standard(self, m: Monomial) -> bool:
        return self.find_rule(m) is None


@lru_cache(maxsize=None)
def reducer(spec: RingSpec) -> Reducer:
    return Reducer(spec)


def normal_form(p: Polynomial, spec: RingSpec) -> Polynomial:
    check_alphabet(p, spec)
    return reducer(spec).normal_form(p)


def initial_terms_are_leading(spec: RingSpec) -> list:
    """Relations whose recorded initial term is not the largest under the package term order."""
    bad = []
    for rel in relations(spec):
        top = max(rel.poly.terms, key=mono_key)
        if top != rel.initial:
            bad.append(rel)
    return bad


def s_polynomials_reduce(spec: RingSpec) -> list:
    """Buchberger's criterion: S-pairs of relations with overlapping initial terms reduce to 0.

    Returns the list of offending (rel1, rel2, remainder) triples.
    """
    rels = relations(spec)
    red = reducer(spec)
    bad = []
    for a in range(len(rels)):
        for b in range(a + 1, len(rels)):
            ra, rb = rels[a], rels[b]
            va, vb = dict(ra.initial), dict(rb.initial)
            if not set(va) & set(vb):
                continue  # coprime initial terms reduce to zero automatically
            lcm_exp = {v: max(va.get(v, 0), vb.get(v, 0)) for v in set(va) | set(vb)}
            lcm_m = monomial(*lcm_exp.items())
            sa = ra.poly * Polynomial.mono(mono_div(lcm_m, ra.initial))
            sb = rb.poly * Polynomial.mono(mono_div(lcm_m, rb.initial))
            ca, cb = ra.poly.terms[ra.initial], rb.poly.terms[rb.initial]
            s = sa.scale(cb) - sb.scale(ca)
            rem = red.normal_form(s)
            if not rem.is_zero():
                bad.append((ra, rb, rem))
    return bad


# ---------------------------------------------------------------------------
# standard monomials and Hilbert series


def iter_standard_basis(spec: RingSpec) -> Iterator[Monomial]:
    """Squarefree monomials using at most one variable per level (mixed-radix enumeration)."""
    choices = [[None] + level for level in level_sets(spec)]
    for pick in product(*choices):
        yield monomial(*(v for v in pick if v is not None))


@lru_cache(maxsize=None)
def standard_basis(spec: RingSpec) -> tuple:
    return tuple(iter_standard_basis(spec))


def _poly_mul_int(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def hilbert_series(spec: RingSpec) -> list:
    """Coefficients (degree 0 first) of the Hilbert series, counted from the standard basis levels."""
    out = [1]
    for level in level_sets(spec):
        out = _poly_mul_int(out, [1, len(level)])
    return out


def bigraded_hilbert_series(spec: RingSpec) -> dict:
    """{(total degree, vw-degree): dim} for the vw presentations."""
    if spec.tag not in ("B_vw", "B_vw_gr"):
        raise ValueError("bigraded series is defined for the vw presentations")
    out = {(0, 0): 1}
    for level in level_sets(spec):
        n_u = sum(1 for v in level if v[0] == "u")
        n_vw = len(level) - n_u
        new: dict = {}
        for (k, l), d in out.items():
            new[(k, l)] = new.get((k, l), 0) + d
            if n_u:
                new[(k + 1, l)] = new.get((k + 1, l), 0) + d * n_u
            if n_vw:
                new[(k + 1, l + 1)] = new.get((k + 1, l + 1), 0) + d * n_vw
        out = new
    return dict(sorted(out.items()))


def count_by_degree(monomials, grading) -> dict:
    out: dict = {}
    for m in monomials:
        key = grading(m)
        out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items()))


def vw_degree(m: Monomial) -> int:
    return sum(e for v, e in m if v[0] in ("v", "w", "p", "m", "t"))


def independence_series(spec: RingSpec) -> list:
    """Hilbert series of the monomials divisible by no initial term, computed from the
    conflict graph of the relation table alone (no use of the level description).

    All initial terms are quadratic, so the standard monomials are the squarefree
    monomials avoiding every initial pair, i.e. independent sets of the graph whose
    edges are the non-square initial terms.  The independence polynomial is computed
    per connected component by brute force.
    """
    verts = alphabet(spec)
    adj: dict = {v: set() for v in verts}
    for rel in relations(spec):
        init = rel.initial
        if len(init) == 2:
            a, b = init[0][0], init[1][0]
            adj[a].add(b)
            adj[b].add(a)
        elif init[0][1] != 2:
            raise AssertionError("unexpected initial term shape")
    seen: set = set()
    total = [1]
    for v in verts:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(comp) > 22:
            raise ValueError("component too large for brute force")
        pos = {x: i for i, x in enumerate(comp)}
        masks = [sum(1 << pos[y] for y in adj[x]) for x in comp]
        counts = [0] * (len(comp) + 1)
        for subset in range(1 << len(comp)):
            ok = True
            s = subset
            while s:
                low = s & -s
                i = low.bit_length() - 1
                if masks[i] & subset:
                    ok = False
                    break
                s ^= low
            if ok:
                counts[bin(subset).count("1")] += 1
        while counts and counts[-1] == 0:
            counts.pop()
        total = _poly_mul_int(total, counts)
    return total


__all__ = [
    "ONE",
    "AlphabetMismatch",
    "Reducer",
    "Relation",
    "RingSpec",
    "TAGS",
    "alphabet",
    "bigraded_hilbert_series",
    "check_alphabet",
    "count_by_degree",
    "hilbert_series",
    "independence_series",
    "initial_terms_are_leading",
    "iter_standard_basis",
    "level_sets",
    "normal_form",
    "reducer",
    "relations",
    "s_polynomials_reduce",
    "standard_basis",
    "vw_degree",
]
