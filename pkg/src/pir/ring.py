"""有限主理想环: 有限链环的直积

R 直接表示为分量元组, ψ 即元组上的恒等映射, ψ^(t) 为取第 t 个分量 (t 从 1 开始)。
"""

import itertools
import re
from typing import Iterator, Sequence

from src.chain_ring import ChainRing, ChainRingSpec, make_ring, parse_ring_spec
from src.config import EnumConfig
from src.errors import BadParameters, ComponentMismatch, IndexOutOfRange, SpecSyntaxError, TooLarge

PirElem = tuple[int, ...]


class PirRing:
    """R = R^(1) × ... × R^(s), 运算逐分量进行"""

    def __init__(self, components: Sequence[ChainRing]) -> None:
        if not components:
            raise BadParameters("主理想环至少需要一个分量")
        self.components = tuple(components)

    @property
    def s(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        total = 1
        for ring in self.components:
            total *= ring.size
        return total

    def _check(self, *elems: PirElem) -> None:
        for a in elems:
            if len(a) != self.s:
                raise ComponentMismatch(f"元素 {a} 的分量个数与 s={self.s} 不符")

    def add(self, a: PirElem, b: PirElem) -> PirElem:
        self._check(a, b)
        return tuple(r.add(x, y) for r, x, y in zip(self.components, a, b))

    def mul(self, a: PirElem, b: PirElem) -> PirElem:
        self._check(a, b)
        return tuple(r.mul(x, y) for r, x, y in zip(self.components, a, b))

    def neg(self, a: PirElem) -> PirElem:
        self._check(a)
        return tuple(r.neg(x) for r, x in zip(self.components, a))

    @property
    def zero(self) -> PirElem:
        return (0,) * self.s

    @property
    def one(self) -> PirElem:
        return (1,) * self.s

    def psi(self, a: PirElem, t: int) -> int:
        """ψ^(t): 第 t 个分量 (1 ≤ t ≤ s)"""
        self._check(a)
        if not 1 <= t <= self.s:
            raise IndexOutOfRange(f"分量下标 t={t} 不在 [1, {self.s}] 内")
        return a[t - 1]

    def elements(self, cap: int | None = None) -> Iterator[PirElem]:
        """Raises: TooLarge"""
        cap = EnumConfig().max_enum if cap is None else cap
        if self.size > cap:
            raise TooLarge(self.size, cap)
        return itertools.product(*(range(r.size) for r in self.components))

    def to_text(self) -> str:
        return " x ".join(r.spec.to_text() for r in self.components)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PirRing) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"PirRing({self.to_text()})"


def make_pir(specs: Sequence[ChainRingSpec]) -> PirRing:
    """由各分量的链环规格构造主理想环

    Raises:
        BadParameters: 分量为空
        NonPrime / ReducibleModulus / DegreeMismatch: 分量规格非法
    """
    return PirRing([make_ring(spec) for spec in specs])


_SEPARATOR = re.compile(r"\s+x\s+")


def parse_pir_spec(text: str) -> PirRing:
    """解析 "Z(4) x F(5) x GR(4,2;mod=1,1,1)"

    Raises:
        SpecSyntaxError: 语法错误
    """
    parts = [part for part in _SEPARATOR.split(text.strip()) if part]
    if not parts:
        raise SpecSyntaxError(f"无法解析主理想环规格: '{text}'")
    return make_pir([parse_ring_spec(part) for part in parts])
