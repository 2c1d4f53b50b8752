"""有限链环模块"""

from .echelon import (
    Row,
    contains,
    enumerate_module,
    express,
    howell_form,
    kernel,
    module_log_size,
    module_size,
    pivot_of,
    reduce_vector,
    same_module,
)
from .ring import (
    ChainRing,
    Quotient,
    RingElem,
    arith,
    enumerate_elements,
    gamma_adic,
    invert,
    is_unit,
    make_ring,
    quotient_ring,
    teichmuller_set,
)
from .spec import ChainRingSpec, Family, parse_ring_spec, validate_spec

__all__ = [
    "ChainRing",
    "ChainRingSpec",
    "Family",
    "Quotient",
    "RingElem",
    "Row",
    "arith",
    "contains",
    "enumerate_elements",
    "enumerate_module",
    "express",
    "gamma_adic",
    "howell_form",
    "invert",
    "is_unit",
    "kernel",
    "make_ring",
    "module_log_size",
    "module_size",
    "parse_ring_spec",
    "pivot_of",
    "quotient_ring",
    "reduce_vector",
    "same_module",
    "teichmuller_set",
    "validate_spec",
]
