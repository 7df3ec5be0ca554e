"""Sparse exact-rational group algebras kS_n and kB_n.

Elements are dictionaries from windows (plain tuples) to nonzero Fractions.
Products go through a cached multiplication table per (group, n): both
operands are scaled to integer vectors over a common denominator and
accumulated with numpy, falling back to Python integers (object arrays)
whenever int64 could overflow.  The result is therefore exact and does not
depend on the order terms are visited.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from .combinatorics import (
    Partition,
    compose,
    cycle_type,
    format_permutation,
    format_signed,
    forget_signs,
    partitions_of,
    permutations_of,
    sign_changes,
    signed_permutations_of,
    z_lambda,
)

GROUPS = ("S", "B")


class GroupMismatch(ValueError):
    pass


class NotIdempotent(ValueError):
    pass


# ---------------------------------------------------------------------------
# indexing and multiplication tables


class GroupIndex:
    """Enumeration of a group with a dense multiplication table T[i, j] = index(g_i g_j)."""

    _ROW_CHUNK = 256

    def __init__(self, group: str, n: int):
        if group not in GROUPS:
            raise ValueError(f"unknown group {group!r}")
        self.group = group
        self.n = n
        if group == "S":
            elements = [tuple(w) for w in permutations_of(n)]
        else:
            elements = [tuple(w) for w in signed_permutations_of(n)]
        self.elements = elements
        self.size = len(elements)
        self.index = {w: i for i, w in enumerate(elements)}
        self.windows = np.array(elements, dtype=np.int64).reshape(self.size, n)
        self._table = None

    def _encode(self, windows: np.ndarray) -> np.ndarray:
        base = 2 * self.n + 1
        weights = base ** np.arange(self.n, dtype=np.int64)
        return ((windows + self.n) * weights).sum(axis=-1)

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            self._table = self._build_table()
        return self._table

    def _build_table(self) -> np.ndarray:
        n, size, W = self.n, self.size, self.windows
        lookup = np.full((2 * n + 1) ** n, -1, dtype=np.int64)
        lookup[self._encode(W)] = np.arange(size)
        table = np.empty((size, size), dtype=np.int32)
        pos = np.abs(W) - 1  # (size, n): where each right factor sends k
        sgn = np.sign(W)
        for start in range(0, size, self._ROW_CHUNK):
            left = W[start : start + self._ROW_CHUNK]  # (r, n)
            # (a o b)(k) = sign(b_k) * a[|b_k| - 1]
            prod_w = left[:, pos] * sgn[None, :, :]  # (r, size, n)
            table[start : start + self._ROW_CHUNK] = lookup[self._encode(prod_w)]
        if (table < 0).any():
            raise RuntimeError("multiplication table is not closed")
        return table


@lru_cache(maxsize=None)
def group_index(group: str, n: int) -> GroupIndex:
    return GroupIndex(group, n)


def identity_window(n: int) -> tuple:
    return tuple(range(1, n + 1))


# ---------------------------------------------------------------------------
# elements


class GroupAlgebraElement:
    """A finite sum of group elements with rational coefficients."""

    __slots__ = ("group", "n", "terms")

    def __init__(self, group: str, n: int, terms: Mapping[Sequence[int], object] | None = None):
        if group not in GROUPS:
            raise ValueError(f"unknown group {group!r}")
        self.group = group
        self.n = n
        clean: dict[tuple, Fraction] = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                w = tuple(w)
                if len(w) != n:
                    raise ValueError(f"window {w} has wrong length for n={n}")
                clean[w] = clean.get(w, Fraction(0)) + c
        self.terms = {w: c for w, c in clean.items() if c}

    # constructors
    @classmethod
    def identity(cls, group: str, n: int) -> "GroupAlgebraElement":
        return cls(group, n, {identity_window(n): 1})

    @classmethod
    def basis(cls, group: str, w: Sequence[int]) -> "GroupAlgebraElement":
        return cls(group, len(w), {tuple(w): 1})

    @classmethod
    def zero(cls, group: str, n: int) -> "GroupAlgebraElement":
        return cls(group, n)

    # basics
    def _check(self, other: "GroupAlgebraElement") -> None:
        if not isinstance(other, GroupAlgebraElement):
            raise TypeError(f"expected GroupAlgebraElement, got {type(other).__name__}")
        if (self.group, self.n) != (other.group, other.n):
            raise GroupMismatch(
                f"group mismatch: {self.group}_{self.n} vs {other.group}_{other.n}"
            )

    def coefficient(self, w: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return (self.group, self.n, self.terms) == (other.group, other.n, other.terms)

    def __hash__(self):
        return hash((self.group, self.n, frozenset(self.terms.items())))

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return GroupAlgebraElement(self.group, self.n, out)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.group, self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(self.group, self.n, {w: c * x for w, x in self.terms.items()})

    def __rmul__(self, c) -> "GroupAlgebraElement":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({self.group!r}, {self.n}, {len(self.terms)} terms)"

    def to_json(self) -> dict:
        return element_to_json(self)


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution product sum_{g,h} a_g b_h (g h), computed exactly."""
    a._check(b)
    if not a.terms or not b.terms:
        return GroupAlgebraElement(a.group, a.n)
    if len(a.terms) * len(b.terms) <= 64:
        return _multiply_small(a, b)
    return _multiply_dense(a, b)


def _multiply_small(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    out: dict[tuple, Fraction] = {}
    for g, c in a.terms.items():
        for h, d in b.terms.items():
            gh = compose(g, h)
            out[gh] = out.get(gh, Fraction(0)) + c * d
    return GroupAlgebraElement(a.group, a.n, out)


def _integer_vector(x: GroupAlgebraElement, idx: GroupIndex):
    den = lcm(*(c.denominator for c in x.terms.values()))
    positions = np.fromiter((idx.index[w] for w in x.terms), dtype=np.int64, count=len(x.terms))
    values = [c.numerator * (den // c.denominator) for c in x.terms.values()]
    return den, positions, values


def _multiply_dense(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    idx = group_index(a.group, a.n)
    table = idx.table
    da, pa, va = _integer_vector(a, idx)
    db, pb, vb = _integer_vector(b, idx)
    bound = max(abs(v) for v in va) * max(abs(v) for v in vb) * min(len(va), len(vb))
    dtype = np.int64 if bound < 2**62 else object
    acc = np.zeros(idx.size, dtype=dtype)
    if len(va) <= len(vb):
        dense_b = np.zeros(idx.size, dtype=dtype)
        dense_b[pb] = np.array(vb, dtype=dtype)
        for i, c in zip(pa, va):
            # row i of the table is a permutation of the group, so no index repeats
            acc[table[i]] += c * dense_b
    else:
        dense_a = np.zeros(idx.size, dtype=dtype)
        dense_a[pa] = np.array(va, dtype=dtype)
        for j, c in zip(pb, vb):
            acc[table[:, j]] += c * dense_a
    den = da * db
    nz = np.nonzero(acc)[0]
    terms = {idx.elements[k]: Fraction(int(acc[k]), den) for k in nz}
    return GroupAlgebraElement(a.group, a.n, terms)


# ---------------------------------------------------------------------------
# phi, projector, diagnostics


def phi_push(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Push a kB_n element to kS_n by forgetting signs."""
    if a.group != "B":
        raise ValueError("phi_push expects an element of kB_n")
    out: dict[tuple, Fraction] = {}
    for w, c in a.terms.items():
        key = tuple(forget_signs(w))
        out[key] = out.get(key, Fraction(0)) + c
    return GroupAlgebraElement("S", a.n, out)


def z2n_projector(n: int) -> GroupAlgebraElement:
    """The central idempotent averaging over all 2^n sign changes."""
    if n < 1:
        raise ValueError("n must be at least 1")
    c = Fraction(1, 2**n)
    return GroupAlgebraElement("B", n, {tuple(z): c for z in sign_changes(n)})


@dataclass(frozen=True)
class FamilyDiagnosis:
    size: int
    idempotent: tuple  # per element
    orthogonal: bool
    complete: bool
    failures: tuple  # (i, j) pairs where E_i E_j != delta_ij E_i

    @property
    def ok(self) -> bool:
        return all(self.idempotent) and self.orthogonal and self.complete


def idempotent_family_check(family: Sequence[GroupAlgebraElement]) -> FamilyDiagnosis:
    """Check E_i E_j = delta_ij E_i for all i, j and sum E_i = 1."""
    if not family:
        raise ValueError("empty family")
    group, n = family[0].group, family[0].n
    for e in family:
        if (e.group, e.n) != (group, n):
            raise GroupMismatch("family elements live in different group algebras")
    failures = []
    idem = []
    for i, ei in enumerate(family):
        for j, ej in enumerate(family):
            prod_ij = multiply(ei, ej)
            expected = ei if i == j else GroupAlgebraElement(group, n)
            good = prod_ij == expected
            if i == j:
                idem.append(good)
            if not good:
                failures.append((i, j))
    total = GroupAlgebraElement(group, n)
    for e in family:
        total = total + e
    complete = total == GroupAlgebraElement.identity(group, n)
    orthogonal = all(i == j for i, j in failures)
    return FamilyDiagnosis(len(family), tuple(idem), orthogonal, complete, tuple(failures))


def is_idempotent(e: GroupAlgebraElement) -> bool:
    return multiply(e, e) == e


# ---------------------------------------------------------------------------
# characters


class ClassFunction:
    """A class function on S_n, stored by cycle type."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping[Sequence[int], object]):
        self.n = n
        vals = {Partition(k): Fraction(v) for k, v in values.items()}
        for lam in partitions_of(n):
            vals.setdefault(lam, Fraction(0))
        extra = set(vals) - set(partitions_of(n))
        if extra:
            raise ValueError(f"cycle types {sorted(extra)} are not partitions of {n}")
        self.values = {lam: vals[lam] for lam in partitions_of(n)}

    def __getitem__(self, lam: Sequence[int]) -> Fraction:
        return self.values[Partition(lam)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.n, {k: v + other.values[k] for k, v in self.values.items()})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.n, {k: v - other.values[k] for k, v in self.values.items()})

    def dimension(self) -> Fraction:
        return self.values[Partition([1] * self.n)]

    def __repr__(self) -> str:
        body = ", ".join(f"{','.join(map(str, k))}: {v}" for k, v in self.values.items())
        return f"ClassFunction(n={self.n}, {{{body}}})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "values": {",".join(map(str, k)): str(v) for k, v in self.values.items()},
        }


@dataclass(frozen=True)
class IdealCharacter:
    """Character of a left ideal kG e; for B_n only the dimension is recorded."""

    group: str
    n: int
    dimension: Fraction
    character: ClassFunction | None


def left_ideal_character(e: GroupAlgebraElement, check: bool = True):
    """Character of the left ideal kG.e for an idempotent e.

    The trace of v -> g v e on kG equals sum_h e(h^-1 g^-1 h), which is
    |C(g)| times the sum of e over the conjugacy class of g^-1.  For S_n this
    is z_lambda * sum of e over permutations of cycle type lambda.  For B_n
    only the value at the identity, |B_n| * e(1), is returned (as an
    IdealCharacter with character None).
    """
    if check and not is_idempotent(e):
        raise NotIdempotent("left_ideal_character needs an idempotent")
    n = e.n
    if e.group == "B":
        dim = (2**n * factorial(n)) * e.coefficient(identity_window(n))
        return IdealCharacter("B", n, dim, None)
    sums: dict[Partition, Fraction] = {}
    for w, c in e.terms.items():
        lam = cycle_type(w)
        sums[lam] = sums.get(lam, Fraction(0)) + c
    values = {lam: z_lambda(tuple(lam)) * sums.get(lam, Fraction(0)) for lam in partitions_of(n)}
    return ClassFunction(n, values)


def trace_left_right(e: GroupAlgebraElement, g: Sequence[int]) -> Fraction:
    """Direct trace of v -> g v e on kG, summing the coefficient of h in g h e over all h."""
    idx = group_index(e.group, e.n)
    g = tuple(g)
    total = Fraction(0)
    for h in idx.elements:
        gh = compose(g, h)
        # coefficient of h in gh.e is e(x) with gh x = h, x = (gh)^-1 h
        inv = _inverse(gh)
        total += e.coefficient(compose(inv, h))
    return total


def _inverse(w: Sequence[int]) -> tuple:
    inv = [0] * len(w)
    for i, x in enumerate(w, start=1):
        inv[abs(x) - 1] = i if x > 0 else -i
    return tuple(inv)


# ---------------------------------------------------------------------------
# serialization


def element_to_json(a: GroupAlgebraElement) -> dict:
    fmt = format_permutation if a.group == "S" else format_signed
    return {
        "group": a.group,
        "n": a.n,
        "terms": [{"w": fmt(w), "c": str(c)} for w, c in sorted(a.terms.items())],
    }


def element_from_json(data: Mapping | str) -> GroupAlgebraElement:
    if isinstance(data, str):
        data = json.loads(data)
    terms = {}
    for t in data["terms"]:
        w = tuple(int(x) for x in t["w"].split(","))
        terms[w] = Fraction(t["c"])
    return GroupAlgebraElement(data["group"], int(data["n"]), terms)


def sum_elements(items: Iterable[GroupAlgebraElement], group: str, n: int) -> GroupAlgebraElement:
    out: dict[tuple, Fraction] = {}
    for x in items:
        for w, c in x.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
    return GroupAlgebraElement(group, n, out)
