"""链环规格 - 四类具体有限链环的参数描述与文本解析

支持的文本语法 (模多项式系数以逗号分隔, 常数项在前):
- Z(p^e)                  例如 Z(8) 或 Z(2^3)
- F(p^m)[;mod=...]        例如 F(5)、F(4;mod=1,1,1)
- GR(p^t,m[;mod=...])     例如 GR(4,2;mod=1,1,1)
- FU(p^m,e[;mod=...])     即 F_q[u]/<u^e>, 例如 FU(2,2)
"""

import re
from dataclasses import dataclass, replace
from enum import StrEnum
from functools import lru_cache
from typing import Callable

from sympy import Poly, factorint, isprime, symbols

from src.errors import (
    BadParameters,
    DegreeMismatch,
    NonPrime,
    ReducibleModulus,
    SpecSyntaxError,
)

_z = symbols("z")


class Family(StrEnum):
    """链环族"""

    INTEGER_MOD = "Z"
    FINITE_FIELD = "F"
    GALOIS_RING = "GR"
    EISENSTEIN = "FU"


@dataclass(frozen=True)
class ChainRingSpec:
    """有限链环的参数

    Attributes:
        family: 所属环族
        p: 特征素数
        m: 剩余域次数, q = p^m
        t: 系数环 Z_{p^t} 的指数 (Z 与 GR 族), 其余族为 1
        e: FU 族中 u 的幂零指数, 其余族为 1
        modulus: 首一模多项式系数 (常数项在前), m=1 时为 (0, 1)
    """

    family: Family
    p: int
    m: int = 1
    t: int = 1
    e: int = 1
    modulus: tuple[int, ...] | None = None

    @classmethod
    def integer_mod(cls, p: int, e: int) -> "ChainRingSpec":
        return cls(Family.INTEGER_MOD, p, 1, e, 1, (0, 1))

    @classmethod
    def finite_field(cls, p: int, m: int, modulus: tuple[int, ...] | None = None) -> "ChainRingSpec":
        return cls(Family.FINITE_FIELD, p, m, 1, 1, modulus)

    @classmethod
    def galois_ring(
        cls, p: int, t: int, m: int, modulus: tuple[int, ...] | None = None
    ) -> "ChainRingSpec":
        return cls(Family.GALOIS_RING, p, m, t, 1, modulus)

    @classmethod
    def eisenstein(
        cls, p: int, m: int, e: int, modulus: tuple[int, ...] | None = None
    ) -> "ChainRingSpec":
        return cls(Family.EISENSTEIN, p, m, 1, e, modulus)

    @property
    def nilpotency(self) -> int:
        """γ 的幂零指数 e"""
        if self.family in (Family.INTEGER_MOD, Family.GALOIS_RING):
            return self.t
        if self.family == Family.EISENSTEIN:
            return self.e
        return 1

    @property
    def residue_order(self) -> int:
        return self.p**self.m

    @property
    def size(self) -> int:
        return self.residue_order**self.nilpotency

    def to_text(self) -> str:
        """还原为规格文本"""
        mod = ""
        if self.m > 1 and self.modulus is not None:
            mod = ";mod=" + ",".join(str(c) for c in self.modulus)
        if self.family == Family.INTEGER_MOD:
            return f"Z({self.p**self.t})"
        if self.family == Family.FINITE_FIELD:
            return f"F({self.p**self.m}{mod})"
        if self.family == Family.GALOIS_RING:
            return f"GR({self.p**self.t},{self.m}{mod})"
        return f"FU({self.p**self.m},{self.e}{mod})"


@lru_cache(maxsize=None)
def is_irreducible_mod_p(coeffs: tuple[int, ...], p: int) -> bool:
    """判断多项式在 F_p 上是否不可约 (系数常数项在前)"""
    if len(coeffs) == 2:
        return True
    poly = Poly(list(reversed([c % p for c in coeffs])), _z, modulus=p)
    return bool(poly.is_irreducible)


@lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """按编码从小到大搜索第一个 m 次首一不可约多项式"""
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        lower = []
        rest = code
        for _ in range(m):
            rest, digit = divmod(rest, p)
            lower.append(digit)
        candidate = tuple(lower) + (1,)
        if is_irreducible_mod_p(candidate, p):
            return candidate
    raise ReducibleModulus(f"F_{p} 上不存在 {m} 次不可约多项式")


def validate_spec(spec: ChainRingSpec) -> ChainRingSpec:
    """校验规格并补全缺省模多项式

    Returns:
        规范化后的规格 (模多项式系数已约化到 [0, p^t))

    Raises:
        NonPrime: p 不是素数
        BadParameters: m, t, e 不是正整数
        DegreeMismatch: 模多项式不是首一 m 次
        ReducibleModulus: 模多项式模 p 可约
    """
    if not isprime(spec.p):
        raise NonPrime(f"特征 p={spec.p} 不是素数")
    if spec.m < 1 or spec.t < 1 or spec.e < 1:
        raise BadParameters(f"参数必须为正整数: m={spec.m}, t={spec.t}, e={spec.e}")
    if spec.family == Family.INTEGER_MOD and spec.m != 1:
        raise DegreeMismatch("Z(p^e) 的剩余域次数必须为 1")
    if spec.family == Family.FINITE_FIELD and spec.t != 1:
        raise BadParameters("有限域的 t 必须为 1")

    modulus = spec.modulus
    if modulus is None:
        modulus = default_modulus(spec.p, spec.m)
    coeff_mod = spec.p**spec.t
    modulus = tuple(c % coeff_mod for c in modulus)
    if len(modulus) != spec.m + 1:
        raise DegreeMismatch(
            f"模多项式次数为 {len(modulus) - 1}, 但剩余域次数 m={spec.m}"
        )
    if modulus[-1] != 1:
        raise DegreeMismatch(f"模多项式必须首一, 首项系数为 {modulus[-1]}")
    if not is_irreducible_mod_p(modulus, spec.p):
        raise ReducibleModulus(
            f"模多项式 {list(modulus)} 在 F_{spec.p} 上可约"
        )
    return replace(spec, modulus=modulus)


def _prime_power(text: str) -> tuple[int, int]:
    """解析 'p^k' 或整数形式的素数幂"""
    text = text.strip()
    match = re.fullmatch(r"(\d+)\s*\^\s*(\d+)", text)
    if match:
        p, k = int(match.group(1)), int(match.group(2))
        if not isprime(p):
            raise NonPrime(f"特征 p={p} 不是素数")
        return p, k
    if not text.isdigit():
        raise SpecSyntaxError(f"无法解析素数幂: '{text}'")
    value = int(text)
    factors = factorint(value)
    if value < 2 or len(factors) != 1:
        raise NonPrime(f"{value} 不是素数幂")
    ((p, k),) = factors.items()
    return int(p), int(k)


def _parse_modulus(options: str | None) -> tuple[int, ...] | None:
    if not options:
        return None
    match = re.fullmatch(r"\s*mod\s*=\s*([-\d,\s]+)", options)
    if not match:
        raise SpecSyntaxError(f"无法解析模多项式选项: '{options}'")
    try:
        return tuple(int(c) for c in match.group(1).split(",") if c.strip())
    except ValueError as exc:
        raise SpecSyntaxError(f"模多项式系数必须为整数: '{options}'") from exc


def _parse_z(args: list[str], options: str | None) -> ChainRingSpec:
    if len(args) != 1 or options:
        raise SpecSyntaxError("Z 的语法为 Z(p^e)")
    p, e = _prime_power(args[0])
    return ChainRingSpec.integer_mod(p, e)


def _parse_f(args: list[str], options: str | None) -> ChainRingSpec:
    if len(args) != 1:
        raise SpecSyntaxError("F 的语法为 F(p^m[;mod=...])")
    p, m = _prime_power(args[0])
    return ChainRingSpec.finite_field(p, m, _parse_modulus(options))


def _parse_gr(args: list[str], options: str | None) -> ChainRingSpec:
    if len(args) != 2:
        raise SpecSyntaxError("GR 的语法为 GR(p^t,m[;mod=...])")
    p, t = _prime_power(args[0])
    m = _positive_int(args[1])
    return ChainRingSpec.galois_ring(p, t, m, _parse_modulus(options))


def _parse_fu(args: list[str], options: str | None) -> ChainRingSpec:
    if len(args) != 2:
        raise SpecSyntaxError("FU 的语法为 FU(p^m,e[;mod=...])")
    p, m = _prime_power(args[0])
    e = _positive_int(args[1])
    return ChainRingSpec.eisenstein(p, m, e, _parse_modulus(options))


def _positive_int(text: str) -> int:
    text = text.strip()
    if not text.isdigit() or int(text) < 1:
        raise SpecSyntaxError(f"需要正整数, 得到 '{text}'")
    return int(text)


# 各环族的文本解析函数
SPEC_PARSERS: dict[str, Callable[[list[str], str | None], ChainRingSpec]] = {
    "Z": _parse_z,
    "F": _parse_f,
    "GR": _parse_gr,
    "FU": _parse_fu,
}

_SPEC_RE = re.compile(r"^\s*(GR|FU|Z|F)\s*\(([^;)]*)(?:;([^)]*))?\)\s*$")


def parse_ring_spec(text: str) -> ChainRingSpec:
    """解析链环规格文本

    Args:
        text: 例如 "Z(8)"、"GR(4,2;mod=1,1,1)"

    Returns:
        校验并规范化后的 ChainRingSpec

    Raises:
        SpecSyntaxError: 语法错误
    """
    match = _SPEC_RE.match(text)
    if not match:
        raise SpecSyntaxError(f"无法解析环规格: '{text}'")
    family, body, options = match.groups()
    args = [a for a in body.split(",")]
    if options is not None:
        # "F(4;mod=1,1,1)" 中模多项式的逗号属于选项
        options = options.strip()
    return validate_spec(SPEC_PARSERS[family](args, options))
