"""S 的理想格"""

from src.chain_ring import Row, howell_form, module_size
from src.errors import BadParameters

from .algebra import Algebra, AlgebraKind, SPoly, classify, shift_codes


def ideal_basis(alg: Algebra, gens: list[SPoly]) -> tuple[Row, ...]:
    """gens 生成的理想 (作为 R-子模) 的 Howell 标准形

    x^{n+k} g = λ x^k g, 所以乘子 x^0, ..., x^{n-1} 已经足够。
    """
    rows = []
    for g in gens:
        cur = g.coeffs
        for _ in range(alg.n):
            rows.append(cur)
            cur = shift_codes(alg.ring, alg.lam, cur)
    return howell_form(alg.ring, rows, alg.n)


def principal_ideals(alg: Algebra, cap: int | None = None) -> dict[tuple[Row, ...], SPoly]:
    """全部主理想, 键为标准形, 值为编码最小的生成元"""
    found: dict[tuple[Row, ...], SPoly] = {}
    for a in alg.elements(cap):
        basis = ideal_basis(alg, [a])
        found.setdefault(basis, a)
    return found


def ideal_lattice(alg: Algebra, cap: int | None = None) -> list[tuple[Row, ...]]:
    """S 的全部理想: 主理想再对加法取闭包

    Returns:
        理想的标准形列表, 按阶数降序、标准形升序排列

    Raises:
        TooLarge: |S| 超过穷举上限
    """
    ideals = set(principal_ideals(alg, cap))
    frontier = list(ideals)
    while frontier:
        fresh = []
        snapshot = list(ideals)
        for left in frontier:
            for right in snapshot:
                total = howell_form(alg.ring, left + right, alg.n)
                if total not in ideals:
                    ideals.add(total)
                    fresh.append(total)
        frontier = fresh
    return sorted(ideals, key=lambda b: (-module_size(alg.ring, b), b))


def lattice_is_chain(alg: Algebra, cap: int | None = None) -> bool:
    """穷举判定主理想两两可比较 (局部环中这等价于 S 是链环)"""
    bases = sorted(principal_ideals(alg, cap), key=lambda b: -module_size(alg.ring, b))
    for bigger, smaller in zip(bases, bases[1:]):
        merged = howell_form(alg.ring, bigger + smaller, alg.n)
        if merged != bigger:
            return False
    return True


def chain_ideals(alg: Algebra) -> list[tuple[SPoly, int]]:
    """链环情形下的全部理想, 以 (生成元, 阶数) 列出, 从 S 到 0

    Raises:
        NotNIE: λ 可逆
        BadParameters: S 不是链环
    """
    kind = classify(alg)
    ring = alg.ring
    q = ring.q
    if kind.kind == AlgebraKind.CHAIN_VIA_GAMMA:
        return [(alg.constant(ring.gamma_powers[i]), q ** (ring.e - i)) for i in range(ring.e + 1)]
    if kind.kind in (AlgebraKind.FIELD_QUOTIENT, AlgebraKind.CHAIN_VIA_X):
        top = kind.nilpotency
        return [(alg.x_power(i), q ** (top - i)) for i in range(top + 1)]
    raise BadParameters(f"{alg.to_text()} 不是链环, 理想不构成链")
