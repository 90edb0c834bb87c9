"""Garside normal forms, normal-pair adjacency spectra, and the signed-permutation Hopf algebra."""

__version__ = "0.1.0"

from .coxeter import CoxeterGroup, DihedralGroup, ResourceRefusal, make_group, parse_type
from .exact import GoldenNumber, Polynomial, RationalFunction, charpoly, series_coeffs
from .normal_form import garside_length, is_normal_pair, left_normal_form, normalize_pair
from .signed import HyperoctahedralGroup
from .spectra import (build_descent_class_matrix, build_full_adjacency, charpoly_full,
                      count_braids, count_sequence, divisibility_verdict, generating_series)

__all__ = [
    "CoxeterGroup", "DihedralGroup", "GoldenNumber", "HyperoctahedralGroup", "Polynomial",
    "RationalFunction", "ResourceRefusal", "build_descent_class_matrix", "build_full_adjacency",
    "charpoly", "charpoly_full", "count_braids", "count_sequence", "divisibility_verdict",
    "garside_length", "generating_series", "is_normal_pair", "left_normal_form", "make_group",
    "normalize_pair", "parse_type", "series_coeffs",
]
