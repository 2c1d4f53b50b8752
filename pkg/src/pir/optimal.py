"""Reed-Solomon 与 Galois 环 MDS 分量, 以及由它们拼出的最优主理想环码"""

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from math import floor
from typing import Callable

from sympy import factorint, multiplicity, primefactors

from src.chain_ring import ChainRing, ChainRingSpec, make_ring
from src.code_core import Code, code_from_generators, zero_code
from src.errors import BadParameters
from src.quotient_algebra import make_algebra

from .code import PirCode, crt_code, pir_min_distance
from .ring import PirRing


def _root_product(ring: ChainRing, roots: list[int]) -> list[int]:
    """Π (x - r), 系数按升幂排列"""
    poly = [1]
    for r in roots:
        shifted = [0] + poly
        scaled = [ring.mul(ring.neg(r), c) for c in poly] + [0]
        poly = [ring.add(a, b) for a, b in zip(shifted, scaled)]
    return poly


def _cyclic_component(ring: ChainRing, n: int, k: int, alpha: int) -> Code:
    """以 α^0, ..., α^{n-k-1} 为根的长度 n 循环码"""
    alg = make_algebra(ring, n, 1)
    roots = [ring.pow(alpha, i) for i in range(n - k)]
    return code_from_generators(alg, [alg.poly(_root_product(ring, roots))])


def _prime_power(q: int) -> tuple[int, int]:
    factors = factorint(q)
    if len(factors) != 1:
        raise BadParameters(f"q={q} 不是素数幂")
    (p, m), = factors.items()
    return p, m


def rs_component(q: int, k: int) -> Code:
    """F_q 上的 [q-1, k, q-k] Reed-Solomon 码, α 取编码最小的本原元

    Raises:
        BadParameters: q 不是素数幂, 或不满足 0 < k < q
    """
    if q < 2:
        raise BadParameters(f"q={q} 不是素数幂")
    p, m = _prime_power(q)
    if not 0 < k < q:
        raise BadParameters(f"需要 0 < k < q, 实际 k={k}, q={q}")
    ring = make_ring(ChainRingSpec.finite_field(p, m))
    return _cyclic_component(ring, q - 1, k, ring.zeta)


def galois_mds_component(p: int, t: int, m: int, n: int, k: int) -> Code:
    """GR(p^t, m) 上长度 n、基数 p^{tmk} 的 MDS 循环码, α = ζ^{(p^m-1)/n}

    Raises:
        BadParameters: n 不整除 p^m - 1, 或不满足 0 < k < n
    """
    q = p**m
    if n < 1 or (q - 1) % n:
        raise BadParameters(f"n={n} 不整除 p^m - 1 = {q - 1}")
    if not 0 < k < n:
        raise BadParameters(f"需要 0 < k < n, 实际 k={k}, n={n}")
    ring = make_ring(ChainRingSpec.galois_ring(p, t, m))
    alpha = ring.pow(ring.zeta, (q - 1) // n)
    return _cyclic_component(ring, n, k, alpha)


def _exact_log(value: int, base: int) -> Fraction:
    """log_base(value), 两者须为同一素数的幂"""
    primes = primefactors(base)
    if len(primes) != 1:
        raise BadParameters(f"{base} 不是素数幂")
    p = primes[0]
    a, b = multiplicity(p, base), multiplicity(p, value)
    if p**b != value:
        raise BadParameters(f"{value} 不是 {p} 的幂")
    return Fraction(b, a)


@dataclass(frozen=True)
class OptimalityCertificate:
    """Singleton 界与最优性证明

    Attributes:
        n: 码长
        cardinality: |C|
        distance: 穷举得到的 d(C)
        singleton_bound: n + 1 - log_{|R|}|C|, 精确有理数
        slack: (1/s)·log_{|R^0|}|C^0|
        optimal: d(C) = ⌊界⌋ 且 0 < slack < 1
    """

    n: int
    cardinality: int
    distance: int
    singleton_bound: Fraction
    slack: Fraction
    optimal: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cardinality": str(self.cardinality),
            "distance": self.distance,
            "singleton_bound": {
                "numerator": self.singleton_bound.numerator,
                "denominator": self.singleton_bound.denominator,
            },
            "slack": {"numerator": self.slack.numerator, "denominator": self.slack.denominator},
            "optimal": self.optimal,
        }


def certify(code: PirCode, base: Code) -> OptimalityCertificate:
    """为 CRT(C^0, ..., C^0, 0) 型的码出具 Singleton 证明"""
    s = code.pir.s
    bound = code.n + 1 - _exact_log(code.size, code.pir.size)
    slack = _exact_log(base.module.size, base.ring.size) / s
    distance = pir_min_distance(code)
    optimal = distance == floor(bound) and 0 < slack < 1
    return OptimalityCertificate(code.n, code.size, distance, bound, slack, optimal)


def _crt_with_zero_tail(base: Code, s: int) -> PirCode:
    """C = CRT(C^0, ..., C^0, 0), λ = (1, ..., 1, 0)"""
    ring, n = base.ring, base.n
    pir = PirRing([ring] * s)
    tail = zero_code(make_algebra(ring, n, 0))
    comps = [base] * (s - 1) + [tail]
    return crt_code(pir, n, [1] * (s - 1) + [0], comps)


def rs_construction(q: int, k: int, s: int) -> tuple[PirCode, OptimalityCertificate]:
    """Raises: BadParameters (需要 0 < k < min{s, q})"""
    if not 0 < k < min(s, q):
        raise BadParameters(f"需要 0 < k < min(s, q), 实际 k={k}, s={s}, q={q}")
    base = rs_component(q, k)
    code = _crt_with_zero_tail(base, s)
    return code, certify(code, base)


def galois_mds_construction(
    p: int, t: int, m: int, n: int, k: int, s: int
) -> tuple[PirCode, OptimalityCertificate]:
    """Raises: BadParameters (需要 0 < k < min{s, n})"""
    if not 0 < k < min(s, n):
        raise BadParameters(f"需要 0 < k < min(s, n), 实际 k={k}, s={s}, n={n}")
    base = galois_mds_component(p, t, m, n, k)
    code = _crt_with_zero_tail(base, s)
    return code, certify(code, base)


class OptimalKind(StrEnum):
    RS = "rs"
    GALOIS = "galois"


CONSTRUCTIONS: dict[OptimalKind, Callable[..., tuple[PirCode, OptimalityCertificate]]] = {
    OptimalKind.RS: rs_construction,
    OptimalKind.GALOIS: galois_mds_construction,
}


def optimal_construction(kind: OptimalKind | str, **params: int) -> tuple[PirCode, OptimalityCertificate]:
    """按种类构造最优码并出具证明

    Args:
        kind: "rs" (参数 q, k, s) 或 "galois" (参数 p, t, m, n, k, s)

    Raises:
        BadParameters: 种类未知或参数不满足前提
    """
    try:
        builder = CONSTRUCTIONS[OptimalKind(kind)]
    except ValueError:
        raise BadParameters(f"未知的构造种类: {kind}") from None
    return builder(**params)


