"""Trivial submodules of tensor products of two-dimensional evaluation modules of quantum affine sl2."""

from .arcs import (
    all_configs,
    catalan_configs,
    intersection_polynomial,
    irreducible_configs,
    standard_config,
    steady_configs,
)
from .rep import h_exact, h_rules, hom_dim, hom_space, pivots, sigma_vector
from .words import DomainError, canonical_form, format_word, parse_word

__all__ = [
    "DomainError",
    "all_configs",
    "canonical_form",
    "catalan_configs",
    "format_word",
    "h_exact",
    "h_rules",
    "hom_dim",
    "hom_space",
    "intersection_polynomial",
    "irreducible_configs",
    "parse_word",
    "pivots",
    "sigma_vector",
    "standard_config",
    "steady_configs",
]

__version__ = "0.1.0"
