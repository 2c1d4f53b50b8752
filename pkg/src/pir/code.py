"""主理想环上的常循环码: 各分量码的 CRT 乘积"""

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from src.code_core import Code, enumerate_codewords, min_distance, weight_one_witness
from src.config import EnumConfig
from src.errors import ComponentMismatch, IndexOutOfRange, LengthMismatch, TooLarge, ZeroCode
from src.quotient_algebra import make_algebra

from .ring import PirElem, PirRing

PirWord = tuple[PirElem, ...]


@dataclass(frozen=True)
class PirCode:
    """CRT(C^(1), ..., C^(s))

    码字是长度 n 的 R-向量, 每个位置是一个分量元组;
    一个向量是码字当且仅当它的每个投影都是对应分量码的码字。
    """

    pir: PirRing
    n: int
    lambdas: tuple[int, ...]
    components: tuple[Code, ...]

    @property
    def size(self) -> int:
        total = 1
        for comp in self.components:
            total *= comp.module.size
        return total

    def is_zero(self) -> bool:
        return all(comp.is_zero() for comp in self.components)

    def project(self, word: Sequence[PirElem], t: int) -> tuple[int, ...]:
        """ψ^(t) 作用在每个位置上"""
        return tuple(self.pir.psi(a, t) for a in word)

    def contains(self, word: Sequence[PirElem]) -> bool:
        if len(word) != self.n:
            raise LengthMismatch(f"向量长度 {len(word)} 与 n={self.n} 不符")
        return all(
            comp.module.contains(self.project(word, t))
            for t, comp in enumerate(self.components, start=1)
        )

    def codewords(self, cap: int | None = None) -> Iterator[PirWord]:
        """Raises: TooLarge"""
        cap = EnumConfig().max_enum if cap is None else cap
        if self.size > cap:
            raise TooLarge(self.size, cap)
        per_component = [[w.coeffs for w in enumerate_codewords(comp, cap)] for comp in self.components]
        for choice in itertools.product(*per_component):
            yield tuple(zip(*choice))

    def to_json(self) -> dict:
        return {
            "pir": self.pir.to_text(),
            "n": self.n,
            "lambdas": list(self.lambdas),
            "cardinality": str(self.size),
            "components": [comp.to_json() for comp in self.components],
        }


def crt_code(pir: PirRing, n: int, lambdas: Sequence[int], comps: Sequence[Code]) -> PirCode:
    """把各分量上的理想拼成主理想环上的码

    Raises:
        ComponentMismatch: 分量个数、分量环或 λ 不符
        LengthMismatch: 分量码长不是 n
    """
    if len(comps) != pir.s or len(lambdas) != pir.s:
        raise ComponentMismatch(f"需要 {pir.s} 个分量, 实际 {len(comps)} 个码、{len(lambdas)} 个 λ")
    for t, (ring, lam, comp) in enumerate(zip(pir.components, lambdas, comps), start=1):
        if comp.n != n:
            raise LengthMismatch(f"第 {t} 个分量码长 {comp.n} 与 n={n} 不符")
        if comp.algebra != make_algebra(ring, n, lam):
            raise ComponentMismatch(f"第 {t} 个分量码不在 {ring.spec.to_text()}[x]/<x^{n} - {lam}> 中")
    return PirCode(pir, n, tuple(lambdas), tuple(comps))


def project_code(code: PirCode, t: int) -> Code:
    """ψ^(t)(C)

    Raises:
        IndexOutOfRange: t 不在 [1, s] 内
    """
    if not 1 <= t <= code.pir.s:
        raise IndexOutOfRange(f"分量下标 t={t} 不在 [1, {code.pir.s}] 内")
    return code.components[t - 1]


def pir_min_distance(code: PirCode, cap: int | None = None) -> int:
    """d(C) = min_t d(ψ^(t)(C)); 零分量的距离 n+1 不会取到最小值

    Raises:
        ZeroCode: C 为零码
    """
    if code.is_zero():
        raise ZeroCode("零码的最小距离按 n+1 约定, 不做分量取最小")
    return min(min_distance(comp, cap) for comp in code.components)


def pir_min_distance_bruteforce(code: PirCode, cap: int | None = None) -> int:
    """直接穷举主理想环码字求最小距离, 零码为 n+1"""
    best = code.n + 1
    zero = code.pir.zero
    for word in code.codewords(cap):
        weight = sum(1 for a in word if a != zero)
        if 0 < weight < best:
            best = weight
    return best


@dataclass(frozen=True)
class PirWitness:
    """不可逆 λ 分量给出的重量 1 码字"""

    distance: int
    component: int
    word: PirWord

    def to_json(self) -> dict:
        return {
            "distance": self.distance,
            "component": self.component,
            "witness": [list(a) for a in self.word],
        }


def nie_pir_distance_check(code: PirCode) -> PirWitness | None:
    """若某分量的 λ 不可逆且该分量码非零, 则 d(C) = 1, 并给出重量 1 的码字

    条件不满足时返回 None。
    """
    for t, comp in enumerate(code.components, start=1):
        if not comp.algebra.nie or comp.is_zero():
            continue
        local = weight_one_witness(comp)
        word = []
        for c in local.coeffs:
            elem = [0] * code.pir.s
            elem[t - 1] = c
            word.append(tuple(elem))
        return PirWitness(1, t, tuple(word))
    return None
