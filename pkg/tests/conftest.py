"""测试公用夹具"""

import pytest

from src.chain_ring import ChainRing, make_ring, parse_ring_spec
from src.quotient_algebra import Algebra, make_algebra


def ring_of(text: str) -> ChainRing:
    return make_ring(parse_ring_spec(text))


def algebra_of(text: str, n: int, lam: int) -> Algebra:
    return make_algebra(ring_of(text), n, lam)


@pytest.fixture
def z4() -> ChainRing:
    return ring_of("Z(4)")


@pytest.fixture
def z8() -> ChainRing:
    return ring_of("Z(8)")


@pytest.fixture
def chain_alg() -> Algebra:
    """Z_4[x]/<x^2 - 2>, 链环情形 (x 生成极大理想)"""
    return algebra_of("Z(4)", 2, 2)


@pytest.fixture
def local_alg() -> Algebra:
    """Z_4[x]/<x^2>, 非链环的局部环"""
    return algebra_of("Z(4)", 2, 0)
