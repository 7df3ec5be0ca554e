"""Varchenko-Gelfand rings: presentations, normal forms, group actions,
the sign-change-invariant basis and the pairing map."""

from .action import act, change_basis
from .fixed import fixed_basis, gamma, gamma_monomial, pairing_phi
from .multigraph import Multigraph, double_partition
from .polynomial import Polynomial, format_monomial, parse_monomial
from .rings import RingSpec, hilbert_series, normal_form, standard_basis

__all__ = [
    "Multigraph",
    "Polynomial",
    "RingSpec",
    "act",
    "change_basis",
    "double_partition",
    "fixed_basis",
    "format_monomial",
    "gamma",
    "gamma_monomial",
    "hilbert_series",
    "normal_form",
    "pairing_phi",
    "parse_monomial",
    "standard_basis",
]
