"""The sign-change-invariant quadratics, the pairing bijection and the fixed-space basis."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .polynomial import Monomial, Polynomial, format_monomial, monomial, var_level
from .rings import RingSpec, reducer, standard_basis


class NotStandard(ValueError):
    pass


def quad_generators(n: int) -> list[Monomial]:
    """u_i w_ij (i<j), w_ij w_ik (i<j<k), v_ij w_jk (i<j<k)."""
    out = []
    for i, j in combinations(range(1, n + 1), 2):
        out.append(monomial(("u", i), ("w", i, j)))
    for i, j, k in combinations(range(1, n + 1), 3):
        out.append(monomial(("w", i, j), ("w", i, k)))
    for i, j, k in combinations(range(1, n + 1), 3):
        out.append(monomial(("v", i, j), ("w", j, k)))
    return out


def _t_indices(m: Monomial) -> list[tuple[int, int]]:
    out = []
    for v, e in m:
        if v[0] != "t":
            raise ValueError(f"pairing expects a t-monomial, found {v}")
        out.extend([(v[1], v[2])] * e)
    return out


def is_standard_t(m: Monomial) -> bool:
    """Squarefree with at most one t_ij for each j."""
    pairs = _t_indices(m)
    tops = [j for _, j in pairs]
    return len(set(pairs)) == len(pairs) and len(set(tops)) == len(tops)


def pairing_steps(m: Monomial) -> list[tuple[str, tuple, Monomial]]:
    """Run the pairing recursion and return its steps as (case, chosen max pair, factor).

    The variables t_ij are totally ordered lexicographically on (i, j).  At each
    step the largest remaining t_{i0 j0} is paired with the largest remaining
    t_{i0 k} (case 1, factor w_{i0 k} w_{i0 j0}), else with the largest remaining
    t_{h i0} (case 2, factor v_{h i0} w_{i0 j0}), else with u_{i0} (case 3).
    No standardness check is made here.
    """
    remaining = sorted(_t_indices(m))
    steps = []
    while remaining:
        i0, j0 = remaining.pop()  # lexicographic maximum
        row = [(a, b) for a, b in remaining if a == i0]
        col = [(a, b) for a, b in remaining if b == i0]
        if row:
            _, k0 = max(row)
            remaining.remove((i0, k0))
            steps.append(("1", (i0, j0), monomial(("w", i0, k0), ("w", i0, j0))))
        elif col:
            h0, _ = max(col)
            remaining.remove((h0, i0))
            steps.append(("2", (i0, j0), monomial(("v", h0, i0), ("w", i0, j0))))
        else:
            steps.append(("3", (i0, j0), monomial(("u", i0), ("w", i0, j0))))
    return steps


def pairing_phi(m: Monomial, check: bool = True) -> Monomial:
    """The pairing bijection from standard t-monomials into the fixed-space basis."""
    if check and not is_standard_t(m):
        raise NotStandard(f"{format_monomial(m)} is not a standard type A monomial")
    out: list = []
    for _, _, factor in pairing_steps(m):
        out.extend(factor)
    return monomial(*out)


def pairing_factors(m: Monomial, check: bool = True) -> list[Monomial]:
    if check and not is_standard_t(m):
        raise NotStandard(f"{format_monomial(m)} is not a standard type A monomial")
    return [f for _, _, f in pairing_steps(m)]


def gamma(p: Polynomial) -> Polynomial:
    """u_i -> 1, v_ij -> t_ij, w_ij -> t_ij."""
    out: dict = {}
    for m, c in p.terms.items():
        factors = []
        for v, e in m:
            if v[0] == "u":
                continue
            if v[0] not in ("v", "w"):
                raise ValueError(f"gamma expects the u, v, w alphabet, found {v}")
            factors.append((("t", v[1], v[2]), e))
        mm = monomial(*factors)
        out[mm] = out.get(mm, 0) + c
    return Polynomial({m: c for m, c in out.items() if c})


def gamma_monomial(m: Monomial) -> Monomial:
    ((mm, _),) = gamma(Polynomial.mono(m)).terms.items()
    return mm


@lru_cache(maxsize=None)
def fixed_basis(n: int) -> tuple:
    """Images of the standard type A basis under the pairing map, in that order."""
    return tuple(pairing_phi(m) for m in standard_basis(RingSpec(n, "A_t")))


def factors_into_quadratics(m: Monomial, n: int) -> bool:
    """Whether m is a product of elements of quad_generators(n) (exhaustive search)."""
    gens = quad_generators(n)
    exps = dict(m)

    def search(exps: dict) -> bool:
        if not any(exps.values()):
            return True
        # the smallest remaining variable must be covered by some generator
        target = min((v for v, e in exps.items() if e), key=lambda v: (v[0] != "u", v))
        for q in gens:
            qd = dict(q)
            if target in qd and all(exps.get(v, 0) >= e for v, e in qd.items()):
                for v, e in qd.items():
                    exps[v] -= e
                ok = search(exps)
                for v, e in qd.items():
                    exps[v] += e
                if ok:
                    return True
        return False

    return search(exps)


def is_in_fixed_basis_set(m: Monomial, n: int) -> bool:
    """Membership in the standard vw basis intersected with products of quad generators."""
    return reducer(RingSpec(n, "B_vw")).is_standard(m) and _squarefree_levels(m) and factors_into_quadratics(m, n)


def _squarefree_levels(m: Monomial) -> bool:
    levels = [var_level(v) for v, e in m for _ in range(e)]
    return len(levels) == len(set(levels))


__all__ = [
    "NotStandard",
    "factors_into_quadratics",
    "fixed_basis",
    "gamma",
    "gamma_monomial",
    "is_in_fixed_basis_set",
    "is_standard_t",
    "pairing_factors",
    "pairing_phi",
    "pairing_steps",
    "quad_generators",
]
