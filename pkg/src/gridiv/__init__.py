"""Exact counting of divisions of m x n grid boards into connected pieces."""

from .core import (
    BoardShape,
    Division,
    adjacency,
    brute_count,
    brute_count_all,
    enumerate_divisions,
    is_valid_removal,
    separation_count,
)
from .closedform import FittedFamily, fit_families, fit_family, verify_recursion_identity
from .dpcount import dp_count, dp_separation_count
from .errors import FittingError, GridivError, InputError, OracleDisagreement, SizeError
from .polynomial import Polynomial, faulhaber, interpolate
from .recurrence import SequenceTable, d_table, s_table
from .symmetry import GroupElement, apply_isometry, orbit_count

__version__ = "0.1.0"

__all__ = [
    "BoardShape",
    "Division",
    "FittedFamily",
    "FittingError",
    "GridivError",
    "GroupElement",
    "InputError",
    "OracleDisagreement",
    "Polynomial",
    "SequenceTable",
    "SizeError",
    "adjacency",
    "apply_isometry",
    "brute_count",
    "brute_count_all",
    "d_table",
    "dp_count",
    "dp_separation_count",
    "enumerate_divisions",
    "faulhaber",
    "fit_families",
    "fit_family",
    "interpolate",
    "is_valid_removal",
    "orbit_count",
    "s_table",
    "separation_count",
    "verify_recursion_identity",
]
