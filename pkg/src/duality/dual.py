"""零化子与对偶码

C^⊥ 取标准内积下的对偶; 零化子 𝒜(C) = {a : c(x)a(x) = 0, ∀c ∈ C} 仍是理想,
且 C^⊥ 是 𝒜(C) 经坐标反转 π 后的像。
"""

from dataclasses import dataclass, field
from typing import Sequence

from src.chain_ring import Row, enumerate_elements, howell_form, kernel
from src.code_core import Code, LinearCode, code_from_basis, gamma_power_code, torsion_code
from src.errors import BadParameters, FullCode
from src.quotient_algebra import AlgebraKind, classify, poly_mul, shift_codes


@dataclass(frozen=True)
class ReversalPerm:
    """坐标反转 π: 下标 i 映到 n-1-i, 对应置换矩阵 P_n"""

    n: int

    def apply(self, vec: Sequence[int]) -> Row:
        return tuple(reversed(vec))

    def apply_rows(self, rows: Sequence[Sequence[int]]) -> list[Row]:
        return [self.apply(row) for row in rows]

    def matrix(self) -> list[list[int]]:
        return [[1 if j == self.n - 1 - i else 0 for j in range(self.n)] for i in range(self.n)]


def annihilator(code: Code) -> Code:
    """𝒜(C): 对 C 的每个基行 b, 要求 a(x)·b(x) = 0, 这是 a 的 R-线性条件

    Raises:
        NotNIE: λ 可逆
    """
    alg = code.algebra
    alg.require_nie()
    ring, n = alg.ring, alg.n
    basis = code.basis
    images = []
    for j in range(n):
        unit = tuple(1 if k == j else 0 for k in range(n))
        image: list[int] = []
        for b in basis:
            image.extend(poly_mul(ring, n, alg.lam, unit, b))
        images.append(tuple(image))
    return code_from_basis(alg, kernel(ring, images, n * len(basis)))


def annihilator_bruteforce(code: Code, cap: int | None = None) -> Code:
    """穷举 S 求零化子, 仅用于小规模对照

    Raises:
        TooLarge: |S| 超过穷举上限
    """
    alg = code.algebra
    alg.require_nie()
    zero = (0,) * alg.n
    found = [
        a.coeffs
        for a in alg.elements(cap)
        if all(poly_mul(alg.ring, alg.n, alg.lam, a.coeffs, b) == zero for b in code.basis)
    ]
    return code_from_basis(alg, howell_form(alg.ring, found, alg.n))


def inner_product_dual(code: Code) -> LinearCode:
    """{v : <c, v> = 0, ∀c ∈ C}, 直接按内积求核"""
    ring, n = code.ring, code.n
    basis = code.basis
    images = [tuple(b[j] for b in basis) for j in range(n)]
    return LinearCode(ring, n, kernel(ring, images, len(basis)))


def dual_torsion_profile(code: Code) -> tuple[int, ...]:
    """W_i = n - T_{e-1-i}

    Raises:
        NotNIE: λ 可逆
    """
    code.algebra.require_nie()
    degrees = code.torsional_degrees
    e = code.ring.e
    return tuple(code.n - degrees[e - 1 - i] for i in range(e))


def dual_code(code: Code) -> LinearCode:
    """C^⊥ = π(𝒜(C))"""
    perm = ReversalPerm(code.n)
    rows = perm.apply_rows(annihilator(code).basis)
    return LinearCode.span(code.ring, rows, code.n)


@dataclass(frozen=True)
class DualVerdict:
    """对偶码是否为常循环码

    Attributes:
        constacyclic: C^⊥ 是否对某个 λ̂ 常循环
        exponent: 成立时 C = γ^i R^n 中的 i
        witness: 不成立时, 对所有 λ̂ 都有 τ_λ̂(b) ∉ C^⊥ 的字典序最小对偶码字 b
        failures: 不成立时, 每个 λ̂ 对应的首个越界码字及其移位
    """

    constacyclic: bool
    exponent: int | None = None
    witness: Row | None = None
    failures: tuple[tuple[int, Row, Row], ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        if self.constacyclic:
            return {"yes": self.exponent}
        return {
            "no": {
                "witness": list(self.witness) if self.witness is not None else None,
                "failures": [
                    {"lambda": lam, "codeword": list(word), "shifted": list(shifted)}
                    for lam, word, shifted in self.failures
                ],
            }
        }


def dual_constacyclic_constants(code: Code, cap: int | None = None) -> list[int]:
    """穷举全部 λ̂ ∈ R, 返回满足 τ_λ̂(C^⊥) ⊆ C^⊥ 的 λ̂

    Raises:
        TooLarge: |R| 超过穷举上限
    """
    dual = dual_code(code)
    ring = code.ring
    return [
        lam.code
        for lam in enumerate_elements(ring, cap)
        if all(dual.contains(shift_codes(ring, lam.code, row)) for row in dual.basis)
    ]


def is_dual_constacyclic(code: Code, cap: int | None = None) -> DualVerdict:
    """C^⊥ 常循环当且仅当 C = γ^i R^n

    Raises:
        NotNIE: λ 可逆
        TooLarge: 寻找反例需要穷举 R 与 C^⊥
    """
    alg = code.algebra
    alg.require_nie()
    ring = alg.ring
    for i in range(ring.e + 1):
        if code == gamma_power_code(alg, i):
            return DualVerdict(True, exponent=i)

    dual = dual_code(code)
    lambdas = [lam.code for lam in enumerate_elements(ring, cap)]
    words = sorted(dual.codewords(cap))
    witness = None
    first_escape: dict[int, tuple[Row, Row]] = {}
    for word in words:
        escapes = True
        for lam in lambdas:
            shifted = shift_codes(ring, lam, word)
            if dual.contains(shifted):
                escapes = False
            elif lam not in first_escape:
                first_escape[lam] = (word, shifted)
        if escapes and witness is None:
            witness = word
        if witness is not None and len(first_escape) == len(lambdas):
            break
    failures = tuple((lam, *first_escape[lam]) for lam in lambdas if lam in first_escape)
    return DualVerdict(False, witness=witness, failures=failures)


def dual_min_distance_check(code: Code, cap: int | None = None) -> int:
    """穷举 C^⊥ 的最小距离

    Raises:
        FullCode: C = R^n, 此时 C^⊥ = 0
        TooLarge: |C^⊥| 超过穷举上限
    """
    code.algebra.require_nie()
    if code.is_full():
        raise FullCode("C = R^n, 对偶码为零码")
    return dual_code(code).min_distance(cap)


def expected_dual_matrix(code: Code) -> list[Row]:
    """链环情形下 C^⊥ 的分块生成矩阵

    C = <x^{kn+w}> 时, 前 w 行为 γ^{e-(k+1)} I_w, 其余为 γ^{e-k} I_{n-w};
    e = 1 时即 (I_i | O)。零行省略。

    Raises:
        BadParameters: S 不是链环
    """
    kind = classify(code.algebra)
    if kind.kind == AlgebraKind.LOCAL_NON_CHAIN:
        raise BadParameters(f"{code.algebra.to_text()} 不是链环, 没有分块形式的对偶矩阵")
    ring, n, e = code.ring, code.n, code.ring.e
    degrees = [torsion_code(code, i).degree for i in range(e)]
    k = sum(1 for t in degrees if t == n)
    w = degrees[k] if k < e else 0
    rows = []
    for j in range(n):
        power = e - k - 1 if j < w else e - k
        entry = ring.gamma_powers[power]
        if entry:
            rows.append(tuple(entry if col == j else 0 for col in range(n)))
    return rows


@dataclass(frozen=True)
class DualReport:
    """对偶计算的完整结果

    Attributes:
        code: 原码 C
        annihilator: 𝒜(C)
        dual: C^⊥ = π(𝒜(C))
        annihilator_profile: 直接计算的 𝒜(C) 挠度
        predicted_profile: 由 C 的挠度给出的 W_i = n - T_{e-1-i}
        verdict: 对偶码是否常循环
    """

    code: Code
    annihilator: Code
    dual: LinearCode
    annihilator_profile: tuple[int, ...]
    predicted_profile: tuple[int, ...]
    verdict: DualVerdict

    @property
    def is_constacyclic_for(self) -> list[int]:
        """对偶码常循环时为全部 λ̂ ∈ R, 否则为空"""
        if self.verdict.constacyclic:
            return list(range(self.code.ring.size))
        return []

    def to_json(self) -> dict:
        return {
            "code": self.code.to_json(),
            "annihilator": {
                "generators": [p.to_text() for p in self.annihilator.basis_polys],
                "cardinality": str(self.annihilator.module.size),
                "torsion_profile": list(self.annihilator_profile),
            },
            "dual": self.dual.to_json(),
            "predicted_torsion_profile": list(self.predicted_profile),
            "verdict": self.verdict.to_json(),
        }


def dual(code: Code, cap: int | None = None) -> DualReport:
    """计算 𝒜(C)、C^⊥、挠度轮廓与常循环判定

    Raises:
        NotNIE: λ 可逆
    """
    code.algebra.require_nie()
    ann = annihilator(code)
    perm = ReversalPerm(code.n)
    dual_lin = LinearCode.span(code.ring, perm.apply_rows(ann.basis), code.n)
    return DualReport(
        code=code,
        annihilator=ann,
        dual=dual_lin,
        annihilator_profile=ann.torsional_degrees,
        predicted_profile=dual_torsion_profile(code),
        verdict=is_dual_constacyclic(code, cap),
    )
