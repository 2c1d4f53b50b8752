"""有限主理想环上的码模块"""

from .code import (
    PirCode,
    PirWitness,
    crt_code,
    nie_pir_distance_check,
    pir_min_distance,
    pir_min_distance_bruteforce,
    project_code,
)
from .optimal import (
    CONSTRUCTIONS,
    OptimalKind,
    OptimalityCertificate,
    certify,
    galois_mds_component,
    galois_mds_construction,
    optimal_construction,
    rs_component,
    rs_construction,
)
from .ring import PirRing, make_pir, parse_pir_spec

__all__ = [
    "CONSTRUCTIONS",
    "OptimalKind",
    "OptimalityCertificate",
    "PirCode",
    "PirRing",
    "PirWitness",
    "certify",
    "crt_code",
    "galois_mds_component",
    "galois_mds_construction",
    "make_pir",
    "nie_pir_distance_check",
    "optimal_construction",
    "parse_pir_spec",
    "pir_min_distance",
    "pir_min_distance_bruteforce",
    "project_code",
    "rs_component",
    "rs_construction",
]
