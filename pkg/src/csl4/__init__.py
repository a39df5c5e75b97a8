"""Exact coincidence-site-lattice arithmetic for D4*, Z4, A4 and the icosian ring."""
from .coincidence import (
    Family,
    NotAdmissible,
    RotParam,
    coincidence_data,
    csl_brute,
    csl_closed,
    is_admissible,
    point_group_rotations,
    rotation_matrix,
    sigma,
    theorem1_equal,
)
from .counting import euler_expand, f_csl, f_rot, isometry_count, rotation_count, series, spectrum_member
from .golden import GoldenInt, GoldenRat
from .oracle import BudgetExceeded, EnumReport, count_classes, verify_point_groups, verify_theorem1
from .quaternions import HurwitzQuat, Icosian, glcd, grcd, parse_quaternion
from .zmodules import FreeModule, index_in, module_intersect, module_sum

__all__ = [
    "BudgetExceeded", "EnumReport", "Family", "FreeModule", "GoldenInt", "GoldenRat", "HurwitzQuat",
    "Icosian", "NotAdmissible", "RotParam", "coincidence_data", "count_classes", "csl_brute",
    "csl_closed", "euler_expand", "f_csl", "f_rot", "glcd", "grcd", "index_in", "is_admissible",
    "isometry_count", "module_intersect", "module_sum", "parse_quaternion", "point_group_rotations",
    "rotation_count", "rotation_matrix", "series", "sigma", "spectrum_member", "theorem1_equal",
    "verify_point_groups", "verify_theorem1",
]
