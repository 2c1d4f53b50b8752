"""NIE-常循环码 (S 的理想) 与一般线性码

码在内部以 R^n 中 R-子模的 Howell 标准形保存, 成员判定、计数、
穷举与挠码提取都在这个标准形上完成。
"""

import threading
from dataclasses import dataclass
from typing import Iterator, Sequence

from src.chain_ring import (
    ChainRing,
    Row,
    contains,
    enumerate_module,
    express,
    howell_form,
    kernel,
    module_log_size,
    pivot_of,
    quotient_ring,
    same_module,
)
from src.errors import AlgebraMismatch, IndexOutOfRange, LengthMismatch
from src.quotient_algebra import Algebra, SPoly, ideal_basis, shift_codes


def hamming_weight(vec: Sequence[int]) -> int:
    return sum(1 for c in vec if c)


class LinearCode:
    """R^n 中的 R-子模 (不要求在任何移位下封闭)"""

    def __init__(self, ring: ChainRing, n: int, basis: Sequence[Row]) -> None:
        self.ring = ring
        self.n = n
        self.basis = tuple(basis)

    @classmethod
    def span(cls, ring: ChainRing, rows: Sequence[Sequence[int]], n: int) -> "LinearCode":
        for row in rows:
            if len(row) != n:
                raise LengthMismatch(f"生成向量长度 {len(row)} 与 n={n} 不符")
        return cls(ring, n, howell_form(ring, rows, n))

    @classmethod
    def full(cls, ring: ChainRing, n: int) -> "LinearCode":
        return cls.span(ring, [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)], n)

    @property
    def log_size(self) -> int:
        return module_log_size(self.ring, self.basis)

    @property
    def size(self) -> int:
        return self.ring.q**self.log_size

    def contains(self, vec: Sequence[int]) -> bool:
        if len(vec) != self.n:
            raise LengthMismatch(f"向量长度 {len(vec)} 与 n={self.n} 不符")
        return contains(self.ring, self.basis, vec)

    def codewords(self, cap: int | None = None) -> Iterator[Row]:
        return enumerate_module(self.ring, self.basis, self.n, cap)

    def min_distance(self, cap: int | None = None) -> int:
        """穷举最小汉明距离, 零码为 n+1"""
        best = self.n + 1
        for word in self.codewords(cap):
            w = hamming_weight(word)
            if 0 < w < best:
                best = w
                if best == 1:
                    break
        return best

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.log_size == self.ring.e * self.n

    def shift_closed(self, lam: int) -> bool:
        """τ_λ(C) ⊆ C"""
        return all(self.contains(shift_codes(self.ring, lam, row)) for row in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.n == other.n
            and same_module(self.ring, self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.n, self.log_size))

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, |C|={self.ring.q}^{self.log_size})"

    def to_json(self) -> dict:
        return {
            "ring": self.ring.spec.to_text(),
            "n": self.n,
            "generator_matrix": [list(row) for row in self.basis],
            "cardinality": str(self.size),
        }


@dataclass(frozen=True)
class TorsionCode:
    """第 i 个挠码 Tor_i(C), 以剩余域 R_1 上的标准形表示

    Attributes:
        index: 挠码下标 i
        degree: 挠度 T_i (Tor_i = <x^{T_i}>, 零码为 n)
        basis: R_1 上的标准形行
        field: 剩余域 R_1
    """

    index: int
    degree: int
    basis: tuple[Row, ...]
    field: ChainRing

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def cardinality(self) -> int:
        return self.field.size**self.dimension


def preimage_span(ring: ChainRing, basis: Sequence[Row], n: int, i: int) -> tuple[Row, ...]:
    """{w ∈ R^n : γ^i w ∈ M} 的标准形, M 由 basis 给出"""
    g = ring.gamma_powers[i]
    images = [tuple(g if k == j else 0 for k in range(n)) for j in range(n)]
    images.extend(basis)
    solutions = kernel(ring, images, n)
    return howell_form(ring, [row[:n] for row in solutions], n)


def residue_span(ring: ChainRing, rows: Sequence[Row], n: int) -> tuple[ChainRing, tuple[Row, ...]]:
    """rows 模 γ 后在剩余域 R_1 上张成的子空间"""
    residue = quotient_ring(ring, 1)
    images = [tuple(residue.mu_code(c) for c in row) for row in rows]
    return residue.ring, howell_form(residue.ring, images, n)


def _first_pivot(field: ChainRing, basis: Sequence[Row], n: int) -> int:
    return pivot_of(field, basis[0])[0] if basis else n


def _layer(ring: ChainRing, vec: Sequence[int], j: int) -> list[int]:
    return [ring.digits(c)[j] for c in vec]


class Code:
    """S 的理想, 即长度为 n 的 λ-常循环码

    构造后不可变; 挠码与标准表示按需计算并缓存, 缓存由锁保护。
    """

    def __init__(self, algebra: Algebra, generators: Sequence[SPoly], basis: Sequence[Row]) -> None:
        self.algebra = algebra
        self.generators = tuple(generators)
        self.module = LinearCode(algebra.ring, algebra.n, basis)
        self._lock = threading.Lock()
        self._torsion: dict[int, TorsionCode] = {}
        self._preimages: dict[int, tuple[Row, ...]] = {}
        self._representation: tuple[SPoly, ...] | None = None

    @property
    def ring(self) -> ChainRing:
        return self.algebra.ring

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def basis(self) -> tuple[Row, ...]:
        return self.module.basis

    @property
    def basis_polys(self) -> list[SPoly]:
        return [SPoly(self.algebra, row) for row in self.basis]

    @property
    def torsional_degrees(self) -> tuple[int, ...]:
        """(T_0, ..., T_{e-1})"""
        return tuple(torsion_code(self, i).degree for i in range(self.ring.e))

    def is_zero(self) -> bool:
        return self.module.is_zero()

    def is_full(self) -> bool:
        return self.module.is_full()

    def is_ideal(self) -> bool:
        return self.module.shift_closed(self.algebra.lam)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.algebra == other.algebra and self.module == other.module

    def __hash__(self) -> int:
        return hash((self.algebra, self.module.log_size))

    def __repr__(self) -> str:
        return f"Code({self.algebra.to_text()}, |C|={self.ring.q}^{self.module.log_size})"

    def _preimage(self, i: int) -> tuple[Row, ...]:
        with self._lock:
            cached = self._preimages.get(i)
        if cached is None:
            cached = preimage_span(self.ring, self.basis, self.n, i)
            with self._lock:
                cached = self._preimages.setdefault(i, cached)
        return cached

    def to_json(self) -> dict:
        data = {
            "algebra": self.algebra.to_text(),
            "generators": [g.to_text() for g in self.generators],
            "basis_matrix": [list(row) for row in self.basis],
            "cardinality": str(cardinality(self)),
        }
        if self.algebra.nie:
            data["torsional_degrees"] = list(self.torsional_degrees)
            data["representation"] = [f.to_text() for f in canonical_representation(self)]
        return data


def _check_algebra(alg: Algebra, polys: Sequence[SPoly]) -> None:
    for g in polys:
        if not isinstance(g, SPoly) or g.algebra != alg:
            raise AlgebraMismatch("生成元不属于给定的商代数")


def code_from_generators(alg: Algebra, gens: Sequence[SPoly]) -> Code:
    """gens 生成的 S 的理想; 空生成元给出零码

    Raises:
        AlgebraMismatch: 生成元不属于 alg
    """
    _check_algebra(alg, gens)
    return Code(alg, gens, ideal_basis(alg, list(gens)))


def code_from_basis(alg: Algebra, basis: Sequence[Row]) -> Code:
    """由已知是理想的子模标准形构造码, 生成元取标准形各行"""
    return Code(alg, [SPoly(alg, row) for row in basis], basis)


def zero_code(alg: Algebra) -> Code:
    return code_from_generators(alg, [])


def full_code(alg: Algebra) -> Code:
    return code_from_generators(alg, [alg.one()])


def gamma_power_code(alg: Algebra, i: int) -> Code:
    """γ^i R^n, 即 <γ^i>"""
    if not 0 <= i <= alg.ring.e:
        raise IndexOutOfRange(f"γ 的指数 {i} 不在 [0, {alg.ring.e}] 内")
    return code_from_generators(alg, [alg.constant(alg.ring.gamma_powers[i])])


def membership(code: Code, v: SPoly) -> bool:
    _check_algebra(code.algebra, [v])
    return code.module.contains(v.coeffs)


def torsion_code(code: Code, i: int) -> TorsionCode:
    """Tor_i(C) = {v̄ : γ^i v ∈ C}

    Raises:
        NotNIE: λ 可逆
        IndexOutOfRange: i 不在 [0, e-1] 内
    """
    code.algebra.require_nie()
    if not 0 <= i < code.ring.e:
        raise IndexOutOfRange(f"挠码下标 i={i} 不在 [0, {code.ring.e - 1}] 内")
    with code._lock:
        cached = code._torsion.get(i)
    if cached is not None:
        return cached
    field, basis = residue_span(code.ring, code._preimage(i), code.n)
    result = TorsionCode(i, _first_pivot(field, basis, code.n), basis, field)
    with code._lock:
        return code._torsion.setdefault(i, result)


def cardinality(code: Code) -> int:
    """NIE 情形下为 q^{en - ΣT_i}, 否则取子模阶数"""
    if not code.algebra.nie:
        return code.module.size
    ring = code.ring
    return ring.q ** (ring.e * code.n - sum(code.torsional_degrees))


def _compute_representation(code: Code) -> tuple[SPoly, ...]:
    alg, ring, n = code.algebra, code.ring, code.n
    degrees = code.torsional_degrees
    residue = quotient_ring(ring, 1)
    reps: list[Row] = [(0,) * n for _ in range(ring.e)]
    for i in reversed(range(ring.e)):
        t_i = degrees[i]
        if t_i == n:
            continue
        span = code._preimage(i)
        images = [tuple(residue.mu_code(c) for c in row) for row in span]
        target = tuple(1 if k == t_i else 0 for k in range(n))
        coeffs = express(residue.ring, images, target)
        vec = [0] * n
        for c, row in zip(coeffs, span):
            lifted = residue.lift_code(c)
            if lifted:
                vec = [ring.add(a, ring.mul(lifted, b)) for a, b in zip(vec, row)]
        f = [ring.mul(ring.gamma_powers[i], c) for c in vec]
        # 自低向高逐层消去 x^{T_j} 及以上的项
        for j in range(i + 1, ring.e):
            t_j = degrees[j]
            if t_j == n:
                continue
            for pos in range(t_j, n):
                d = ring.digits(f[pos])[j]
                if not d:
                    continue
                shift = pos - t_j
                for k, c in enumerate(reps[j][: n - shift]):
                    if c:
                        f[k + shift] = ring.sub(f[k + shift], ring.mul(d, c))
        reps[i] = tuple(f)
    return tuple(SPoly(alg, f) for f in reps)


def canonical_representation(code: Code) -> tuple[SPoly, ...]:
    """C = <<f_0, ..., f_{e-1}>> 的唯一表示

    f_i 为零当且仅当 Tor_i(C) = 0; 否则 f_i = γ^i x^{T_i} + Σ_{j>i} γ^j x^{t_{j,i}} h_{j,i}(x),
    且 t_{j,i} + deg h_{j,i} < T_j。结果首次计算后缓存。

    Raises:
        NotNIE: λ 可逆
    """
    code.algebra.require_nie()
    with code._lock:
        cached = code._representation
    if cached is not None:
        return cached
    result = _compute_representation(code)
    with code._lock:
        if code._representation is None:
            code._representation = result
        return code._representation


def _has_form(ring: ChainRing, vec: Sequence[int], i: int, degrees: Sequence[int], n: int) -> bool:
    """vec 是否形如 γ^i x^{T_i} + Σ_{j>i} γ^j g_j(x), deg g_j < T_j"""
    t_i = degrees[i]
    if t_i == n:
        return False
    for j in range(ring.e):
        layer = _layer(ring, vec, j)
        if j < i and any(layer):
            return False
        if j == i and layer != [1 if k == t_i else 0 for k in range(n)]:
            return False
        if j > i and any(layer[degrees[j]:]):
            return False
    return True


def representation_shape_ok(code: Code, rep: Sequence[SPoly] | None = None) -> bool:
    """检查表示的形状约束以及每个 f_i ∈ C"""
    rep = canonical_representation(code) if rep is None else rep
    degrees = code.torsional_degrees
    if len(rep) != code.ring.e:
        return False
    for i, f in enumerate(rep):
        if degrees[i] == code.n:
            if not f.is_zero():
                return False
            continue
        if not _has_form(code.ring, f.coeffs, i, degrees, code.n):
            return False
        if not membership(code, f):
            return False
    return True


def layer_form_members(code: Code, i: int, cap: int | None = None) -> list[SPoly]:
    """穷举 C 中所有与 f_i 同形的多项式 (唯一性要求结果恰为 [f_i])"""
    if not 0 <= i < code.ring.e:
        raise IndexOutOfRange(f"下标 i={i} 不在 [0, {code.ring.e - 1}] 内")
    degrees = code.torsional_degrees
    return [
        SPoly(code.algebra, word)
        for word in code.module.codewords(cap)
        if _has_form(code.ring, word, i, degrees, code.n)
    ]


def enumerate_codewords(code: Code, cap: int | None = None) -> Iterator[SPoly]:
    """逐个产生全部码字

    Raises:
        TooLarge: |C| 超过穷举上限
    """
    for word in code.module.codewords(cap):
        yield SPoly(code.algebra, word)


def min_distance(code: Code, cap: int | None = None) -> int:
    """穷举最小汉明距离, 零码为 n+1

    Raises:
        TooLarge: |C| 超过穷举上限
    """
    return code.module.min_distance(cap)


def weight_one_witness(code: Code) -> SPoly | None:
    """构造一个重量为 1 的码字: 先乘 γ 的幂把所有分量推入 γ^{e-1}R, 再用 x 移位

    零码返回 None。

    Raises:
        NotNIE: λ 可逆
    """
    alg = code.algebra
    alg.require_nie()
    if code.is_zero():
        return None
    ring, n = code.ring, code.n
    row = code.basis[0]
    v = min(ring.valuation(c) for c in row if c)
    scaled = tuple(ring.mul(ring.gamma_powers[ring.e - 1 - v], c) for c in row)
    lowest = next(k for k, c in enumerate(scaled) if c)
    word = scaled
    # λ ∈ γR, 越过末位的分量乘 λ 后变为零
    for _ in range(n - 1 - lowest):
        word = shift_codes(ring, alg.lam, word)
    return SPoly(alg, word)


def torsion_degree_bound_holds(code: Code, i: int, t: int, g: SPoly) -> bool:
    """若 γ^i(x^t + γ g(x)) ∈ C, 则必有 t ≥ T_i"""
    alg = code.algebra
    _check_algebra(alg, [g])
    ring = code.ring
    inner = alg.x_power(t) + g.scale(ring.gamma)
    candidate = inner.scale(ring.gamma_powers[i])
    if not membership(code, candidate):
        return True
    return t >= torsion_code(code, i).degree


def torsion_commutes_check(code: Code, j: int, i: int) -> bool:
    """比较 Tor_i(C) 与 Φ_j(Tor_i(μ_j(C)))

    Raises:
        IndexOutOfRange: 不满足 0 ≤ i < j ≤ e
    """
    ring, n = code.ring, code.n
    if not 0 <= i < j <= ring.e:
        raise IndexOutOfRange(f"需要 0 ≤ i < j ≤ e, 实际 i={i}, j={j}, e={ring.e}")
    quotient = quotient_ring(ring, j)
    residue = quotient_ring(ring, 1)
    projected = howell_form(
        quotient.ring, [tuple(quotient.mu_code(c) for c in row) for row in code.basis], n
    )
    span = preimage_span(quotient.ring, projected, n, i)
    images = [tuple(residue.mu_code(quotient.lift_code(c)) for c in row) for row in span]
    left = howell_form(residue.ring, images, n)
    right = torsion_code(code, i).basis
    return same_module(residue.ring, left, right)


