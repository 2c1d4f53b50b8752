"""NIE-常循环码核心模块"""

from .code import (
    Code,
    LinearCode,
    TorsionCode,
    canonical_representation,
    cardinality,
    code_from_basis,
    code_from_generators,
    enumerate_codewords,
    layer_form_members,
    full_code,
    gamma_power_code,
    hamming_weight,
    membership,
    min_distance,
    preimage_span,
    representation_shape_ok,
    residue_span,
    torsion_code,
    torsion_commutes_check,
    torsion_degree_bound_holds,
    weight_one_witness,
    zero_code,
)

__all__ = [
    "Code",
    "LinearCode",
    "TorsionCode",
    "canonical_representation",
    "cardinality",
    "code_from_basis",
    "code_from_generators",
    "enumerate_codewords",
    "layer_form_members",
    "full_code",
    "gamma_power_code",
    "hamming_weight",
    "membership",
    "min_distance",
    "preimage_span",
    "representation_shape_ok",
    "residue_span",
    "torsion_code",
    "torsion_commutes_check",
    "torsion_degree_bound_holds",
    "weight_one_witness",
    "zero_code",
]
