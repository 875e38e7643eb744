"""Exact linear algebra: integer SNF, field matrices, two-step homology."""

from .groups import Coeffs, GroupClass, F2, Q, Z, direct_sum, parse_coeffs
from .intmat import IntMatrix, ZHomology, rank_q, smith_normal_form, snf_full, z_homology
from . import fieldmat

__all__ = [
    "Coeffs", "GroupClass", "F2", "Q", "Z", "direct_sum", "parse_coeffs",
    "IntMatrix", "ZHomology", "rank_q", "smith_normal_form", "snf_full",
    "z_homology", "fieldmat",
]
