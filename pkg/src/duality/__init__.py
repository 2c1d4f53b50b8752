"""对偶码模块"""

from .dual import (
    DualReport,
    DualVerdict,
    ReversalPerm,
    annihilator,
    annihilator_bruteforce,
    dual,
    dual_code,
    dual_constacyclic_constants,
    dual_min_distance_check,
    dual_torsion_profile,
    expected_dual_matrix,
    inner_product_dual,
    is_dual_constacyclic,
)

__all__ = [
    "DualReport",
    "DualVerdict",
    "ReversalPerm",
    "annihilator",
    "annihilator_bruteforce",
    "dual",
    "dual_code",
    "dual_constacyclic_constants",
    "dual_min_distance_check",
    "dual_torsion_profile",
    "expected_dual_matrix",
    "inner_product_dual",
    "is_dual_constacyclic",
]
