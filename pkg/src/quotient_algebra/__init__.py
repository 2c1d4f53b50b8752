"""商代数 S = R[x]/<x^n - λ> 模块"""

from .algebra import (
    Algebra,
    AlgebraKind,
    Classification,
    GammaXForm,
    GammaXTerm,
    SPoly,
    classify,
    find_inverse_bruteforce,
    format_poly,
    gamma_x_decompose,
    make_algebra,
    parse_algebra_spec,
    parse_poly,
    poly_mul,
    s_add,
    s_invert,
    s_is_unit,
    s_mul,
    s_sub,
    scalar_mul,
    shift_codes,
    tau_shift,
)
from .lattice import (
    chain_ideals,
    ideal_basis,
    ideal_lattice,
    lattice_is_chain,
    principal_ideals,
)

__all__ = [
    "Algebra",
    "AlgebraKind",
    "Classification",
    "GammaXForm",
    "GammaXTerm",
    "SPoly",
    "chain_ideals",
    "classify",
    "find_inverse_bruteforce",
    "format_poly",
    "gamma_x_decompose",
    "ideal_basis",
    "ideal_lattice",
    "lattice_is_chain",
    "make_algebra",
    "parse_algebra_spec",
    "parse_poly",
    "poly_mul",
    "principal_ideals",
    "s_add",
    "s_invert",
    "s_is_unit",
    "s_mul",
    "s_sub",
    "scalar_mul",
    "shift_codes",
    "tau_shift",
]
