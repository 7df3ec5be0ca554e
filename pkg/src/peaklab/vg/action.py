"""Group actions on the ring alphabets and the change of basis between u+/u- and v/w.

Each generator is attached to a linear form in x_1, ..., x_n:

    u_i ~ x_i,    t_ij, u+_ij ~ x_j - x_i,    u-_ij ~ x_j + x_i.

A signed permutation g acts by x_k -> sign(g(k)) x_|g(k)|.  The image form is
matched back to the representative generator with i < j, which produces a
sign.  The v/w alphabet is handled by conjugating with the change of basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .polynomial import Polynomial, substitute
from .rings import RingSpec, check_alphabet

HALF = Fraction(1, 2)


def linear_form(var: tuple) -> dict:
    kind = var[0]
    if kind == "u":
        return {var[1]: 1}
    i, j = var[1], var[2]
    if kind in ("t", "p"):
        return {j: 1, i: -1}
    if kind == "m":
        return {j: 1, i: 1}
    raise ValueError(f"no linear form attached to {var}")


def _act_form(g: Sequence[int], form: Mapping[int, int]) -> dict:
    out: dict = {}
    for k, c in form.items():
        image = g[k - 1]
        out[abs(image)] = out.get(abs(image), 0) + (c if image > 0 else -c)
    return out


def _match_form(form: Mapping[int, int], pair_kind: str) -> tuple[int, tuple]:
    """Return (sign, variable) with sign * linear_form(variable) == form."""
    items = sorted((k, c) for k, c in form.items() if c)
    if len(items) == 1:
        (k, c), = items
        return c, ("u", k)
    (i, ci), (j, cj) = items
    if ci == -cj:
        # cj (x_j - x_i)
        return cj, (pair_kind, i, j)
    return cj, ("m", i, j)


@lru_cache(maxsize=None)
def _act_var_u(g: tuple, var: tuple) -> tuple[int, tuple]:
    """Image of a t/u/u+/u- variable under g as (sign, variable)."""
    pair_kind = "t" if var[0] == "t" else "p"
    sign, image = _match_form(_act_form(g, linear_form(var)), pair_kind)
    if var[0] == "t" and image[0] != "t":
        raise ValueError("type A variables only admit unsigned permutations")
    return sign, image


def vw_to_u(p: Polynomial) -> Polynomial:
    """v -> u+ + u-, w -> u+ - u-, u fixed."""
    images = {}
    for v in p.variables():
        if v[0] == "v":
            images[v] = Polynomial.var(("p",) + v[1:]) + Polynomial.var(("m",) + v[1:])
        elif v[0] == "w":
            images[v] = Polynomial.var(("p",) + v[1:]) - Polynomial.var(("m",) + v[1:])
        elif v[0] not in ("u",):
            raise ValueError(f"variable {v} is not in the u, v, w alphabet")
    return substitute(p, images)


def u_to_vw(p: Polynomial) -> Polynomial:
    """u+ -> (v + w)/2, u- -> (v - w)/2, u fixed."""
    images = {}
    for v in p.variables():
        if v[0] == "p":
            images[v] = (Polynomial.var(("v",) + v[1:]) + Polynomial.var(("w",) + v[1:])).scale(HALF)
        elif v[0] == "m":
            images[v] = (Polynomial.var(("v",) + v[1:]) - Polynomial.var(("w",) + v[1:])).scale(HALF)
        elif v[0] not in ("u",):
            raise ValueError(f"variable {v} is not in the u, u+, u- alphabet")
    return substitute(p, images)


def change_basis(p: Polynomial, direction: str) -> Polynomial:
    """direction 'vw->u' applies the change of basis, 'u->vw' its inverse."""
    if direction in ("vw->u", "vw->u±"):
        return vw_to_u(p)
    if direction in ("u->vw", "u±->vw"):
        return u_to_vw(p)
    raise ValueError(f"unknown direction {direction!r}")


@lru_cache(maxsize=None)
def _act_var_vw(g: tuple, var: tuple) -> Polynomial:
    if var[0] == "u":
        s, image = _act_var_u(g, var)
        return Polynomial.var(image, s)
    lifted = vw_to_u(Polynomial.var(var))
    moved = Polynomial()
    for m, c in lifted.terms.items():
        ((x, _),) = m
        s, image = _act_var_u(g, x)
        moved = moved + Polynomial.var(image, c * s)
    return u_to_vw(moved)


def act_var(g: Sequence[int], var: tuple) -> Polynomial:
    g = tuple(g)
    if var[0] in ("v", "w"):
        return _act_var_vw(g, var)
    s, image = _act_var_u(g, var)
    return Polynomial.var(image, s)


def act_monomial(g: tuple, m: tuple) -> Polynomial:
    out = Polynomial.one()
    for v, e in m:
        out = out * (act_var(g, v) ** e)
    return out


def act_monomial_signed(g: tuple, m: tuple) -> tuple[int, tuple] | None:
    """Fast path when every variable maps to plus or minus a single variable."""
    from .polynomial import monomial

    sign = 1
    factors = []
    for v, e in m:
        img = act_var(g, v)
        if len(img.terms) != 1:
            return None
        ((mm, c),) = img.terms.items()
        if c not in (1, -1):
            return None
        ((x, _),) = mm
        if c == -1 and e % 2:
            sign = -sign
        factors.append((x, e))
    return sign, monomial(*factors)


def act(g: Sequence[int], p: Polynomial, spec: RingSpec | None = None) -> Polynomial:
    """Apply the group element g (a permutation or signed permutation window) to p."""
    g = tuple(g)
    if spec is not None:
        check_alphabet(p, spec)
        if spec.tag == "A_t" and any(x < 0 for x in g):
            raise ValueError("the type A ring only carries an S_n action")
        if len(g) != spec.n:
            raise ValueError(f"group element of size {len(g)} acting on a ring with n={spec.n}")
    out: dict = {}
    for m, c in p.terms.items():
        fast = act_monomial_signed(g, m)
        if fast is not None:
            s, mm = fast
            out[mm] = out.get(mm, 0) + s * c
            continue
        for mm, cc in act_monomial(g, m).terms.items():
            out[mm] = out.get(mm, 0) + c * cc
    return Polynomial({m: c for m, c in out.items() if c})


__all__ = [
    "act",
    "act_monomial",
    "act_monomial_signed",
    "act_var",
    "change_basis",
    "linear_form",
    "u_to_vw",
    "vw_to_u",
]
