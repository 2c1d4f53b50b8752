"""有限链环的构造与运算

元素统一用非负整数编码, 环对象提供基于编码的运算;
RingElem 是面向调用者的轻量包装, 支持运算符。

编码规则:
- Z(p^e): 整数本身
- F(p^m)、GR(p^t,m): 多项式系数按 p^t 进制打包, 常数项为最低位
- FU(p^m,e): u 的各次系数 (每个是 F_q 编码) 按 q 进制打包, u^0 为最低位
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, NamedTuple

from sympy import factorint

from src.config import EnumConfig
from src.errors import IndexOutOfRange, NotAUnit, RingMismatch, TooLarge
from .spec import ChainRingSpec, Family, validate_spec


class _GaloisCore:
    """Z_P[z]/<modulus> 上基于编码的运算, P = p^c"""

    def __init__(self, base: int, modulus: tuple[int, ...]) -> None:
        self.base = base
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.size = base**self.degree

    def decode(self, code: int) -> list[int]:
        coeffs = []
        for _ in range(self.degree):
            code, digit = divmod(code, self.base)
            coeffs.append(digit)
        return coeffs

    def encode(self, coeffs: list[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.base + c % self.base
        return code

    def add(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a + b) % self.base
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def sub(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a - b) % self.base
        return self.encode([x - y for x, y in zip(self.decode(a), self.decode(b))])

    def mul(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a * b) % self.base
        xs, ys = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(xs):
            if x:
                for j, y in enumerate(ys):
                    prod[i + j] += x * y
        # 用首一模多项式消去高次项
        for k in range(len(prod) - 1, self.degree - 1, -1):
            top = prod[k] % self.base
            if top:
                for i, c in enumerate(self.modulus[:-1]):
                    prod[k - self.degree + i] -= top * c
            prod[k] = 0
        return self.encode(prod[: self.degree])


class ChainRing:
    """具体的有限交换链环 R

    Attributes:
        spec: 规范化后的环规格
        gamma: 极大理想生成元 γ 的编码
        e: γ 的幂零指数
        q: 剩余域阶 p^m
        size: |R| = q^e
        zeta: Teichmüller 生成元 ζ 的编码 (乘法阶 q-1)
        teichmuller: Teichmüller 集 (0, 1, ζ, ..., ζ^{q-2}) 的编码
    """

    def __init__(self, spec: ChainRingSpec, table_limit: int | None = None) -> None:
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.e = spec.nilpotency
        self.q = spec.residue_order
        self.size = spec.size
        self.unit_group_order = (self.q - 1) * self.q ** (self.e - 1)

        if spec.family == Family.EISENSTEIN:
            self._field = _GaloisCore(spec.p, spec.modulus)
            self._core = None
            self.gamma = self.q if self.e > 1 else 0
        else:
            self._field = None
            self._core = _GaloisCore(spec.p**spec.t, spec.modulus)
            self.gamma = spec.p % (spec.p**spec.t)

        self._add_table: list[list[int]] | None = None
        self._mul_table: list[list[int]] | None = None
        self._digit_table: list[tuple[int, ...]] | None = None

        if table_limit is None:
            table_limit = EnumConfig().table_limit
        if self.size <= table_limit:
            elements = range(self.size)
            self._add_table = [[self._raw_add(a, b) for b in elements] for a in elements]
            self._mul_table = [[self._raw_mul(a, b) for b in elements] for a in elements]

        self.gamma_powers = tuple(self.pow(self.gamma, k) for k in range(self.e + 1))
        self.teichmuller, self.zeta = self._build_teichmuller()
        self._teich_index = {t: i for i, t in enumerate(self.teichmuller)}
        if self._add_table is not None:
            self._digit_table = [self._raw_digits(a) for a in range(self.size)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ChainRing) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"ChainRing({self.spec.to_text()})"

    # ===== 基本运算 (编码层) =====

    def _raw_add(self, a: int, b: int) -> int:
        if self._core is not None:
            return self._core.add(a, b)
        xs, ys = self._u_decode(a), self._u_decode(b)
        return self._u_encode([self._field.add(x, y) for x, y in zip(xs, ys)])

    def _raw_mul(self, a: int, b: int) -> int:
        if self._core is not None:
            return self._core.mul(a, b)
        xs, ys = self._u_decode(a), self._u_decode(b)
        prod = [0] * self.e
        for i, x in enumerate(xs):
            if x:
                for j in range(self.e - i):
                    if ys[j]:
                        prod[i + j] = self._field.add(prod[i + j], self._field.mul(x, ys[j]))
        return self._u_encode(prod)

    def _u_decode(self, code: int) -> list[int]:
        digits = []
        for _ in range(self.e):
            code, d = divmod(code, self.q)
            digits.append(d)
        return digits

    def _u_encode(self, digits: list[int]) -> int:
        code = 0
        for d in reversed(digits):
            code = code * self.q + d
        return code

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._raw_add(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._raw_mul(a, b)

    def neg(self, a: int) -> int:
        if self._core is not None:
            return self._core.sub(0, a)
        return self._u_encode([self._field.sub(0, x) for x in self._u_decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def from_int(self, k: int) -> int:
        """整数 k 在 R 中的像 k·1"""
        char = self.p if self._core is None else self._core.base
        return k % char

    # ===== γ-adic 结构 =====

    def _div_gamma(self, a: int) -> int:
        """a ∈ γR 时返回某个 b 使 γb = a"""
        if self._core is not None:
            return self._core.encode([c // self.p for c in self._core.decode(a)])
        return self._u_encode(self._u_decode(a)[1:] + [0])

    def _teich_lift(self, a: int) -> int:
        return self.pow(a, self.q ** (self.e - 1))

    def _raw_digits(self, a: int) -> tuple[int, ...]:
        digits = []
        cur = a
        for _ in range(self.e):
            d = self._teich_lift(cur)
            digits.append(d)
            cur = self._div_gamma(self.sub(cur, d))
        return tuple(digits)

    def digits(self, a: int) -> tuple[int, ...]:
        """γ-adic 展开 a = Σ a_i γ^i 的 Teichmüller 数字 (a_0, ..., a_{e-1})"""
        if self._digit_table is not None:
            return self._digit_table[a]
        return self._raw_digits(a)

    def from_digits(self, digits: tuple[int, ...] | list[int]) -> int:
        total = 0
        for k, d in enumerate(digits):
            if d:
                total = self.add(total, self.mul(d, self.gamma_powers[k]))
        return total

    def valuation(self, a: int) -> int:
        """γ-adic 赋值, 零元为 e"""
        for k, d in enumerate(self.digits(a)):
            if d:
                return k
        return self.e

    def unit_part(self, a: int) -> int:
        """a = γ^v u 中的单位 u (a ≠ 0)"""
        ds = self.digits(a)
        v = self.valuation(a)
        return self.from_digits(ds[v:])

    def split(self, a: int, v: int) -> tuple[int, int]:
        """按 γ^v 拆分: a = r + γ^v t, r 只含前 v 位数字"""
        ds = self.digits(a)
        return self.from_digits(ds[:v]), self.from_digits(ds[v:])

    def is_unit(self, a: int) -> bool:
        return self.digits(a)[0] != 0

    def inv(self, a: int) -> int:
        if not self.is_unit(a):
            raise NotAUnit(f"{a} 在 {self.spec.to_text()} 中不可逆")
        return self.pow(a, self.unit_group_order - 1)

    def teich_index(self, t: int) -> int:
        """Teichmüller 元素在 teichmuller 序列中的位置"""
        return self._teich_index[t]

    def _multiplicative_order_is(self, a: int, order: int) -> bool:
        if self.pow(a, order) != 1:
            return False
        return all(self.pow(a, order // r) != 1 for r in factorint(order))

    def _build_teichmuller(self) -> tuple[tuple[int, ...], int]:
        if self.q == 2:
            return (0, 1), 1
        # Teichmüller 提升 a^{q^{e-1}} 落在阶为 q-1 的循环子群中
        for a in range(1, self.size):
            if not self._raw_is_unit(a):
                continue
            zeta = self._teich_lift(a)
            if self._multiplicative_order_is(zeta, self.q - 1):
                break
        else:  # pragma: no cover - Teichmüller 生成元总是存在
            raise NotAUnit("未找到 Teichmüller 生成元")
        candidates = []
        power = 1
        for _ in range(self.q - 1):
            candidates.append(power)
            power = self.mul(power, zeta)
        zeta = min(c for c in candidates if self._multiplicative_order_is(c, self.q - 1))
        powers = [1]
        for _ in range(self.q - 2):
            powers.append(self.mul(powers[-1], zeta))
        return (0, *powers), zeta

    def _raw_is_unit(self, a: int) -> bool:
        if self._core is not None:
            return any(c % self.p for c in self._core.decode(a))
        return self._u_decode(a)[0] != 0

    # ===== 面向调用者的接口 =====

    def elem(self, code: int) -> "RingElem":
        if not 0 <= code < self.size:
            raise IndexOutOfRange(f"编码 {code} 不在 [0, {self.size}) 内")
        return RingElem(self, code)

    @property
    def zero(self) -> "RingElem":
        return RingElem(self, 0)

    @property
    def one(self) -> "RingElem":
        return RingElem(self, 1)

    def describe(self) -> dict:
        """环的概要信息 (供报告使用)"""
        return {
            "spec": self.spec.to_text(),
            "family": self.spec.family.value,
            "p": self.p,
            "m": self.m,
            "q": self.q,
            "e": self.e,
            "size": self.size,
            "gamma": self.gamma,
            "zeta": self.zeta,
            "teichmuller": list(self.teichmuller),
            "modulus": list(self.spec.modulus),
        }


@dataclass(frozen=True)
class RingElem:
    """链环元素: 所属环 + 规范编码"""

    ring: ChainRing
    code: int

    def _check(self, other: "RingElem") -> None:
        if not isinstance(other, RingElem) or other.ring != self.ring:
            raise RingMismatch("参与运算的元素不属于同一个环")

    def __add__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        return RingElem(self.ring, self.ring.add(self.code, other.code))

    def __sub__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        return RingElem(self.ring, self.ring.sub(self.code, other.code))

    def __mul__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        return RingElem(self.ring, self.ring.mul(self.code, other.code))

    def __neg__(self) -> "RingElem":
        return RingElem(self.ring, self.ring.neg(self.code))

    def __pow__(self, k: int) -> "RingElem":
        return RingElem(self.ring, self.ring.pow(self.code, k))

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        return f"{self.code}@{self.ring.spec.to_text()}"


@lru_cache(maxsize=None)
def make_ring(spec: ChainRingSpec) -> ChainRing:
    """构造链环 (同一规格返回同一对象)

    Raises:
        NonPrime / ReducibleModulus / DegreeMismatch: 规格非法
    """
    return ChainRing(validate_spec(spec))


_ARITH_OPS: dict[str, Callable[[RingElem, RingElem], RingElem]] = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "neg": lambda a, b: -a,
}


def arith(op: str, a: RingElem, b: RingElem) -> RingElem:
    """按名称执行环运算 (neg 忽略 b, 但仍检查同环)"""
    if a.ring != b.ring:
        raise RingMismatch("参与运算的元素不属于同一个环")
    return _ARITH_OPS[op](a, b)


def is_unit(a: RingElem) -> bool:
    """a 可逆当且仅当 γ-adic 首位数字 a_0 ≠ 0"""
    return a.ring.is_unit(a.code)


def invert(a: RingElem) -> RingElem:
    return RingElem(a.ring, a.ring.inv(a.code))


def teichmuller_set(ring: ChainRing) -> list[RingElem]:
    return [RingElem(ring, t) for t in ring.teichmuller]


def gamma_adic(a: RingElem) -> list[RingElem]:
    return [RingElem(a.ring, d) for d in a.ring.digits(a.code)]


def enumerate_elements(ring: ChainRing, cap: int | None = None) -> Iterator[RingElem]:
    """按编码升序逐个产生环中元素

    Raises:
        TooLarge: |R| 超过穷举上限
    """
    cap = EnumConfig().max_enum if cap is None else cap
    if ring.size > cap:
        raise TooLarge(ring.size, cap)
    for code in range(ring.size):
        yield RingElem(ring, code)


class Quotient(NamedTuple):
    """R_j = R/γ^j R 以及映射 μ_j、Φ_j"""

    ring: ChainRing
    source: ChainRing
    j: int
    mu_code: Callable[[int], int]
    lift_code: Callable[[int], int]

    def mu(self, a: RingElem) -> RingElem:
        """自然满同态 μ_j: R → R_j"""
        if a.ring != self.source:
            raise RingMismatch("μ_j 的输入不属于源环")
        return RingElem(self.ring, self.mu_code(a.code))

    def lift(self, a: RingElem) -> RingElem:
        """按 Teichmüller 数字把 R_j 中元素提升回 R"""
        return RingElem(self.source, self.lift_code(a.code))

    def phi(self, a: RingElem) -> RingElem:
        """剩余域同构 Φ_j: R_j/γR_j → R/γR, 剩余域元素以 R_1 中的元素表示"""
        residue = quotient_ring(self.source, 1)
        return residue.mu(self.lift(a))


def _quotient_spec(spec: ChainRingSpec, j: int) -> ChainRingSpec:
    if spec.family == Family.INTEGER_MOD:
        return ChainRingSpec.integer_mod(spec.p, j)
    if spec.family == Family.FINITE_FIELD:
        return spec
    if spec.family == Family.GALOIS_RING:
        return ChainRingSpec.galois_ring(
            spec.p, j, spec.m, tuple(c % spec.p**j for c in spec.modulus)
        )
    return ChainRingSpec.eisenstein(spec.p, spec.m, j, spec.modulus)


@lru_cache(maxsize=None)
def quotient_ring(ring: ChainRing, j: int) -> Quotient:
    """构造商环 R_j 及 μ_j、Φ_j

    Args:
        ring: 链环 R
        j: 1 ≤ j ≤ e

    Raises:
        IndexOutOfRange: j 越界
    """
    if not 1 <= j <= ring.e:
        raise IndexOutOfRange(f"商环阶数 j={j} 不在 [1, {ring.e}] 内")
    if j == ring.e:
        return Quotient(ring, ring, j, lambda c: c, lambda c: c)

    target = make_ring(_quotient_spec(ring.spec, j))
    if ring.spec.family in (Family.EISENSTEIN, Family.INTEGER_MOD):
        # 低位优先的打包方式下, 截断即取模
        def mu_code(code: int) -> int:
            return code % target.size
    else:
        def mu_code(code: int) -> int:
            return target._core.encode(ring._core.decode(code))

    # μ_j 把 𝒯_R 双射到 𝒯_{R_j}
    teich_lift = {mu_code(t): t for t in ring.teichmuller}

    def lift_code(code: int) -> int:
        return ring.from_digits([teich_lift[d] for d in target.digits(code)])

    return Quotient(target, ring, j, mu_code, lift_code)
