"""Partitions, permutations and signed permutations, with the statistics used
throughout the package (descents, peaks, cycle types, odd/even parts).

All objects are immutable tuple subclasses, so they hash and compare like the
plain tuples they wrap.  Group elements are windows in one-line notation.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence


class Partition(tuple):
    """An integer partition, stored as a weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def odd(self) -> int:
        """Number of odd parts."""
        return sum(1 for p in self if p % 2)

    @property
    def even(self) -> int:
        """Number of even parts."""
        return sum(1 for p in self if p % 2 == 0)

    @property
    def oddparts(self) -> "Partition":
        return Partition(p for p in self if p % 2)

    @property
    def evenparts(self) -> "Partition":
        return Partition(p for p in self if p % 2 == 0)

    def is_odd(self) -> bool:
        """True when every part is odd."""
        return all(p % 2 for p in self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    @property
    def z(self) -> int:
        """Order of the centralizer of a permutation of this cycle type."""
        return z_lambda(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


@lru_cache(maxsize=None)
def z_lambda(parts: tuple) -> int:
    out = 1
    for i, m in Counter(parts).items():
        out *= i**m * factorial(m)
    return out


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def class_size(lam: Sequence[int]) -> int:
    """Number of permutations of cycle type lam, i.e. n!/z_lam."""
    lam = Partition(lam)
    return factorial(lam.weight) // z_lambda(tuple(lam))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(x) for x in text.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


# ---------------------------------------------------------------------------
# permutations


class Permutation(tuple):
    """An element of S_n in one-line notation: w = (w(1), ..., w(n))."""

    def __new__(cls, window: Sequence[int]):
        window = tuple(int(x) for x in window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"not a permutation window: {window}")
        return super().__new__(cls, window)

    @property
    def n(self) -> int:
        return len(self)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        return Permutation(compose(self, other))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self, start=1):
            inv[x - 1] = i
        return Permutation(inv)

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def descents(self) -> frozenset:
        return descent_set_A(self)

    def des(self) -> int:
        return len(descent_set_A(self))

    def peaks(self) -> frozenset:
        return peak_set(self)

    @property
    def cyc(self) -> int:
        return len(cycle_type(self))

    @property
    def odd(self) -> int:
        return cycle_type(self).odd

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)!r})"

    def __str__(self) -> str:
        return format_permutation(self)


class SignedPermutation(tuple):
    """An element of B_n: a window of nonzero integers whose absolute values permute 1..n."""

    def __new__(cls, window: Sequence[int]):
        window = tuple(int(x) for x in window)
        if sorted(abs(x) for x in window) != list(range(1, len(window) + 1)):
            raise ValueError(f"not a signed permutation window: {window}")
        return super().__new__(cls, window)

    @property
    def n(self) -> int:
        return len(self)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(range(1, n + 1))

    def __call__(self, i: int) -> int:
        return self[i - 1] if i > 0 else -self[-i - 1]

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(compose(self, other))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * len(self)
        for i, x in enumerate(self, start=1):
            inv[abs(x) - 1] = i if x > 0 else -i
        return SignedPermutation(inv)

    def descents(self) -> frozenset:
        return descent_set_B(self)

    def des(self) -> int:
        return len(descent_set_B(self))

    def forget_signs(self) -> Permutation:
        return forget_signs(self)

    def __repr__(self) -> str:
        return f"SignedPermutation({tuple(self)!r})"

    def __str__(self) -> str:
        return format_signed(self)


def tau(i: int, n: int) -> SignedPermutation:
    """The sign change in position i."""
    return SignedPermutation(-k if k == i else k for k in range(1, n + 1))


def compose(a: Sequence[int], b: Sequence[int]) -> tuple:
    """(a o b)(i) = a(b(i)), with a(-j) = -a(j) for signed windows."""
    if len(a) != len(b):
        raise ValueError(f"cannot compose windows of lengths {len(a)} and {len(b)}")
    return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)


def forget_signs(w: Sequence[int]) -> Permutation:
    return Permutation(abs(x) for x in w)


def cycle_type(sigma: Sequence[int]) -> Partition:
    n = len(sigma)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = abs(sigma[i]) - 1
            length += 1
        lengths.append(length)
    return Partition(lengths)


def descent_set_A(sigma: Sequence[int]) -> frozenset:
    return frozenset(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def descent_set_B(w: Sequence[int]) -> frozenset:
    """Generator 0 is the sign change in position 1; generator i swaps i and i+1."""
    out = {i for i in range(1, len(w)) if w[i - 1] > w[i]}
    if w and w[0] < 0:
        out.add(0)
    return frozenset(out)


def peak_set(sigma: Sequence[int]) -> frozenset:
    padded = (0,) + tuple(sigma)
    return frozenset(
        i for i in range(1, len(sigma)) if padded[i - 1] < padded[i] > padded[i + 1]
    )


def permutations_of(n: int) -> Iterator[Permutation]:
    """All of S_n, lexicographic on windows."""
    for w in permutations(range(1, n + 1)):
        yield Permutation(w)


def signed_permutations_of(n: int) -> Iterator[SignedPermutation]:
    """All of B_n, lexicographic on windows as integer tuples."""
    out = []
    for w in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            out.append(tuple(s * x for s, x in zip(signs, w)))
    out.sort()
    for w in out:
        yield SignedPermutation(w)


def sign_changes(n: int) -> list[SignedPermutation]:
    """The 2^n elements of the normal subgroup Z_2^n of B_n."""
    return [
        SignedPermutation(s * k for s, k in zip(signs, range(1, n + 1)))
        for signs in product((1, -1), repeat=n)
    ]


def class_representative(lam: Sequence[int]) -> Permutation:
    """A permutation of cycle type lam built from consecutive cycles (1..a)(a+1..a+b)..."""
    window = []
    start = 1
    for part in Partition(lam):
        window.extend(range(start + 1, start + part))
        window.append(start)
        start += part
    return Permutation(window)


def parse_permutation(text: str) -> Permutation:
    return Permutation(int(x) for x in text.split(","))


def parse_signed(text: str) -> SignedPermutation:
    return SignedPermutation(int(x) for x in text.split(","))


def format_permutation(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


def format_signed(w: Sequence[int]) -> str:
    return ",".join(f"{x:+d}" for x in w)


def stirling_first(n: int, k: int) -> int:
    """Signless Stirling number of the first kind c(n, k)."""
    return sum(class_size(lam) for lam in partitions_of(n) if len(lam) == k)


def hyperoctahedral_order(n: int) -> int:
    return 2**n * factorial(n)


__all__ = [
    "Partition",
    "Permutation",
    "SignedPermutation",
    "class_representative",
    "class_size",
    "compose",
    "cycle_type",
    "descent_set_A",
    "descent_set_B",
    "forget_signs",
    "format_partition",
    "format_permutation",
    "format_signed",
    "hyperoctahedral_order",
    "parse_partition",
    "parse_permutation",
    "parse_signed",
    "partitions_of",
    "peak_set",
    "permutations_of",
    "sign_changes",
    "signed_permutations_of",
    "stirling_first",
    "tau",
    "z_lambda",
]
