"""商代数 S = R[x]/<x^n - λ>

λ 可以是任意元素; λ 不可逆时称为 NIE 情形, 只有该情形下才有
x 的幂零性、单位判别与极大理想分类等结论。
"""

import itertools
import re
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Iterator, Sequence

from src.chain_ring import ChainRing, RingElem, make_ring, parse_ring_spec
from src.config import EnumConfig
from src.errors import (
    AlgebraMismatch,
    BadParameters,
    IndexOutOfRange,
    LengthMismatch,
    NotAUnit,
    NotNIE,
    RingMismatch,
    SpecSyntaxError,
    TooLarge,
)


def poly_mul(ring: ChainRing, n: int, lam: int, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """编码层的乘法, 按 x^n = λ 约化"""
    res = [0] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            k = i + j
            prod = ring.mul(ai, bj)
            if k >= n:
                prod = ring.mul(lam, prod)
                k -= n
            res[k] = ring.add(res[k], prod)
    return tuple(res)


def shift_codes(ring: ChainRing, lam: int, vec: Sequence[int]) -> tuple[int, ...]:
    """τ_λ(v_0, ..., v_{n-1}) = (λ v_{n-1}, v_0, ..., v_{n-2})"""
    if not vec:
        return ()
    return (ring.mul(lam, vec[-1]), *vec[:-1])


@dataclass(frozen=True)
class Algebra:
    """S = R[x]/<x^n - λ>

    Attributes:
        ring: 链环 R
        n: 码长
        lam: λ 的编码
        nie: λ 是否不可逆
        lambda_nilpotency: λ 的幂零指数 e' (λ 可逆时为 None, λ=0 时为 1)
    """

    ring: ChainRing
    n: int
    lam: int
    nie: bool = field(init=False, compare=False)
    lambda_nilpotency: int | None = field(init=False, compare=False)

    def __post_init__(self) -> None:
        nie = not self.ring.is_unit(self.lam)
        object.__setattr__(self, "nie", nie)
        if not nie:
            nilpotency = None
        elif self.lam == 0:
            nilpotency = 1
        else:
            v = self.ring.valuation(self.lam)
            nilpotency = -(-self.ring.e // v)
        object.__setattr__(self, "lambda_nilpotency", nilpotency)

    @property
    def lambda_(self) -> RingElem:
        return RingElem(self.ring, self.lam)

    @property
    def size(self) -> int:
        return self.ring.size**self.n

    @property
    def x_nilpotency(self) -> int:
        """x 在 S 中的幂零指数 N = n·e'

        Raises:
            NotNIE: λ 可逆, x 不是幂零元
        """
        if not self.nie:
            raise NotNIE(f"λ={self.lam} 可逆, x 在 S 中不幂零")
        return self.n * self.lambda_nilpotency

    def require_nie(self) -> None:
        if not self.nie:
            raise NotNIE(f"λ={self.lam} 在 {self.ring.spec.to_text()} 中可逆, 该结论仅适用于 NIE 情形")

    def to_text(self) -> str:
        return f"{self.ring.spec.to_text()};n={self.n};lambda={self.lam}"

    # ===== 元素构造 =====

    def poly(self, coeffs: Sequence[int | RingElem]) -> "SPoly":
        """由系数 (编码或 RingElem, 常数项在前) 构造 S 中元素, 不足 n 位补零"""
        if len(coeffs) > self.n:
            raise LengthMismatch(f"系数个数 {len(coeffs)} 超过 n={self.n}")
        codes = []
        for c in coeffs:
            if isinstance(c, RingElem):
                if c.ring != self.ring:
                    raise RingMismatch("系数不属于 S 的系数环")
                c = c.code
            if not 0 <= c < self.ring.size:
                raise IndexOutOfRange(f"系数编码 {c} 不在 [0, {self.ring.size}) 内")
            codes.append(c)
        return SPoly(self, tuple(codes) + (0,) * (self.n - len(codes)))

    def zero(self) -> "SPoly":
        return SPoly(self, (0,) * self.n)

    def one(self) -> "SPoly":
        return self.constant(1)

    def constant(self, code: int) -> "SPoly":
        return SPoly(self, (code,) + (0,) * (self.n - 1))

    def x_power(self, k: int) -> "SPoly":
        """x^k, 利用 x^{an+r} = λ^a x^r"""
        a, r = divmod(k, self.n)
        coeffs = [0] * self.n
        coeffs[r] = self.ring.pow(self.lam, a)
        return SPoly(self, tuple(coeffs))

    def elements(self, cap: int | None = None) -> Iterator["SPoly"]:
        """逐个产生 S 的全部元素

        Raises:
            TooLarge: |S| 超过穷举上限
        """
        cap = EnumConfig().max_enum if cap is None else cap
        if self.size > cap:
            raise TooLarge(self.size, cap)
        for coeffs in itertools.product(range(self.ring.size), repeat=self.n):
            yield SPoly(self, coeffs[::-1])


@dataclass(frozen=True)
class SPoly:
    """S 中的元素, coeffs[i] 为 x^i 的系数编码"""

    algebra: Algebra
    coeffs: tuple[int, ...]

    def _check(self, other: "SPoly") -> None:
        if not isinstance(other, SPoly) or other.algebra != self.algebra:
            raise AlgebraMismatch("参与运算的多项式不属于同一个商代数")

    @property
    def ring(self) -> ChainRing:
        return self.algebra.ring

    @property
    def coefficients(self) -> list[RingElem]:
        return [RingElem(self.ring, c) for c in self.coeffs]

    def __add__(self, other: "SPoly") -> "SPoly":
        self._check(other)
        return SPoly(self.algebra, tuple(self.ring.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SPoly") -> "SPoly":
        self._check(other)
        return SPoly(self.algebra, tuple(self.ring.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "SPoly":
        return SPoly(self.algebra, tuple(self.ring.neg(a) for a in self.coeffs))

    def __mul__(self, other: "SPoly") -> "SPoly":
        self._check(other)
        alg = self.algebra
        return SPoly(alg, poly_mul(alg.ring, alg.n, alg.lam, self.coeffs, other.coeffs))

    def scale(self, c: int | RingElem) -> "SPoly":
        if isinstance(c, RingElem):
            if c.ring != self.ring:
                raise RingMismatch("标量不属于 S 的系数环")
            c = c.code
        return SPoly(self.algebra, tuple(self.ring.mul(c, a) for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def to_text(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"SPoly({self.to_text()})"


def make_algebra(ring: ChainRing, n: int, lam: RingElem | int) -> Algebra:
    """构造 S = R[x]/<x^n - λ>

    Raises:
        RingMismatch: λ 不属于 R
        BadParameters: n < 1
        IndexOutOfRange: λ 的编码越界
    """
    if isinstance(lam, RingElem):
        if lam.ring != ring:
            raise RingMismatch("λ 不属于给定的链环")
        lam = lam.code
    if n < 1:
        raise BadParameters(f"码长 n={n} 必须为正整数")
    if not 0 <= lam < ring.size:
        raise IndexOutOfRange(f"λ 的编码 {lam} 不在 [0, {ring.size}) 内")
    return Algebra(ring, n, lam)


def s_mul(a: SPoly, b: SPoly) -> SPoly:
    return a * b


def s_add(a: SPoly, b: SPoly) -> SPoly:
    return a + b


def s_sub(a: SPoly, b: SPoly) -> SPoly:
    return a - b


def scalar_mul(c: RingElem, a: SPoly) -> SPoly:
    return a.scale(c)


def tau_shift(v: Sequence[RingElem], lam: RingElem, n: int | None = None) -> list[RingElem]:
    """常循环移位 τ_λ

    Raises:
        LengthMismatch: 给定 n 时向量长度不符
        RingMismatch: 分量与 λ 不在同一个环
    """
    if n is not None and len(v) != n:
        raise LengthMismatch(f"向量长度 {len(v)} 与 n={n} 不符")
    if any(c.ring != lam.ring for c in v):
        raise RingMismatch("向量分量与 λ 不属于同一个环")
    shifted = shift_codes(lam.ring, lam.code, [c.code for c in v])
    return [RingElem(lam.ring, c) for c in shifted]


def s_is_unit(a: SPoly) -> bool:
    """a 在 S 中可逆当且仅当常数项 a_0 在 R 中可逆 (NIE 情形)"""
    a.algebra.require_nie()
    return a.ring.is_unit(a.coeffs[0])


def s_invert(a: SPoly) -> SPoly:
    """几何级数求逆: a^{-1} = a_0^{-1}(1 + Σ A^i), A = -a_0^{-1}(a - a_0)

    A 幂零, A^i 一旦为零即停止累加。

    Raises:
        NotNIE: λ 可逆
        NotAUnit: a_0 不可逆
    """
    alg = a.algebra
    alg.require_nie()
    ring = alg.ring
    if not ring.is_unit(a.coeffs[0]):
        raise NotAUnit(f"{a.to_text()} 的常数项不可逆")
    a0_inv = ring.inv(a.coeffs[0])
    tail = SPoly(alg, (0,) + a.coeffs[1:])
    big_a = tail.scale(ring.neg(a0_inv))
    total = alg.one()
    power = big_a
    for _ in range(1, alg.x_nilpotency):
        if power.is_zero():
            break
        total = total + power
        power = power * big_a
    return total.scale(a0_inv)


def find_inverse_bruteforce(a: SPoly) -> SPoly | None:
    """穷举 S 寻找 b 使 ab = 1, 仅用于小规模校验"""
    one = a.algebra.one()
    for b in a.algebra.elements():
        if a * b == one:
            return b
    return None


class AlgebraKind(StrEnum):
    """极大理想 <γ, x> 的四种情形"""

    FIELD_QUOTIENT = "FieldQuotient"
    CHAIN_VIA_GAMMA = "ChainViaGamma"
    CHAIN_VIA_X = "ChainViaX"
    LOCAL_NON_CHAIN = "LocalNonChain"


@dataclass(frozen=True)
class Classification:
    """分类结果; 链环情形下 nilpotency 为极大理想生成元的幂零指数"""

    kind: AlgebraKind
    nilpotency: int | None = None

    @property
    def is_chain(self) -> bool:
        return self.kind != AlgebraKind.LOCAL_NON_CHAIN

    @property
    def ideal_count(self) -> int | None:
        """链环情形下理想个数 (幂零指数 + 1)"""
        return None if self.nilpotency is None else self.nilpotency + 1


def classify(alg: Algebra) -> Classification:
    """判定 <γ, x> 是否主理想, 即 S 是否链环

    Raises:
        NotNIE: λ 可逆
    """
    alg.require_nie()
    ring = alg.ring
    if ring.e == 1:
        return Classification(AlgebraKind.FIELD_QUOTIENT, alg.n)
    if alg.n == 1:
        return Classification(AlgebraKind.CHAIN_VIA_GAMMA, ring.e)
    if ring.valuation(alg.lam) == 1:
        return Classification(AlgebraKind.CHAIN_VIA_X, alg.n * ring.e)
    return Classification(AlgebraKind.LOCAL_NON_CHAIN)


@dataclass(frozen=True)
class GammaXTerm:
    """γ^j x^{t_j} h_j(x) 中的一项"""

    j: int
    t: int
    h: SPoly


@dataclass(frozen=True)
class GammaXForm:
    """a(x) = Σ_j γ^j x^{t_j} h_j(x), h_j 的系数均在 Teichmüller 集中"""

    terms: tuple[GammaXTerm, ...]

    def reassemble(self) -> SPoly:
        alg = self.terms[0].h.algebra
        ring = alg.ring
        total = alg.zero()
        for term in self.terms:
            part = (alg.x_power(term.t) * term.h).scale(ring.gamma_powers[term.j])
            total = total + part
        return total


def gamma_x_decompose(a: SPoly) -> GammaXForm:
    """按 γ 层分解并提取每层的最低 x 次幂

    零层按惯例取 t_j = n-1, h_j = 0。
    """
    alg = a.algebra
    ring = alg.ring
    digit_rows = [ring.digits(c) for c in a.coeffs]
    terms = []
    for j in range(ring.e):
        layer = [row[j] for row in digit_rows]
        nonzero = [i for i, d in enumerate(layer) if d]
        if not nonzero:
            terms.append(GammaXTerm(j, alg.n - 1, alg.zero()))
            continue
        t = nonzero[0]
        h = tuple(layer[t:]) + (0,) * t
        terms.append(GammaXTerm(j, t, SPoly(alg, h)))
    return GammaXForm(tuple(terms))


# ===== 文本语法 =====

_POLY_RE = re.compile(r"^\s*\[\s*([\d\s,]*)\]\s*$")
_ALGEBRA_RE = re.compile(r"^\s*(.+\))\s*;\s*n\s*=\s*(\d+)\s*;\s*lambda\s*=\s*(\d+)\s*$")


def format_poly(coeffs: Sequence[int]) -> str:
    return "[" + ",".join(str(c) for c in coeffs) + "]"


def parse_poly(alg: Algebra, text: str) -> SPoly:
    """解析 "[c0,c1,...]" 形式的多项式

    Raises:
        SpecSyntaxError: 语法错误
    """
    match = _POLY_RE.match(text)
    if not match:
        raise SpecSyntaxError(f"无法解析多项式: '{text}'")
    body = match.group(1).strip()
    coeffs = [int(c) for c in body.split(",") if c.strip()] if body else []
    return alg.poly(coeffs)


def parse_algebra_spec(text: str) -> Algebra:
    """解析 "<环规格>;n=<整数>;lambda=<元素编码>"

    Raises:
        SpecSyntaxError: 语法错误
    """
    match = _ALGEBRA_RE.match(text)
    if not match:
        raise SpecSyntaxError(f"无法解析代数规格: '{text}'")
    ring = make_ring(parse_ring_spec(match.group(1)))
    return make_algebra(ring, int(match.group(2)), int(match.group(3)))
