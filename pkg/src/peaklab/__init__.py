"""Exact computations with Eulerian and peak idempotents, Varchenko-Gelfand
rings of the braid and type B arrangements, and higher Lie characters."""

from .combinatorics import Partition, Permutation, SignedPermutation, partitions_of
from .group_algebra import (
    ClassFunction,
    GroupAlgebraElement,
    idempotent_family_check,
    left_ideal_character,
    multiply,
    phi_push,
)
from .idempotents import eulerian_A, eulerian_B, peak_idempotents
from .series import bihilb_expression, bihilb_recursion, equivariant_series
from .symfunc import L_lambda, SymFunc, character, frobenius, to_schur

__version__ = "0.1.0"

__all__ = [
    "ClassFunction",
    "GroupAlgebraElement",
    "L_lambda",
    "Partition",
    "Permutation",
    "SignedPermutation",
    "SymFunc",
    "bihilb_expression",
    "bihilb_recursion",
    "character",
    "equivariant_series",
    "eulerian_A",
    "eulerian_B",
    "frobenius",
    "idempotent_family_check",
    "left_ideal_character",
    "multiply",
    "partitions_of",
    "peak_idempotents",
    "phi_push",
    "to_schur",
]
