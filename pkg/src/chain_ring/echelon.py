"""链环上的 γ-阶梯 (Howell) 标准形

行向量以元素编码的元组表示。标准形满足:
  - 每行首个非零列 (主元列) 互不相同, 主元恰为 γ^v;
  - 主元上方的元素只保留低于 v 的 γ-adic 数字;
  - 对任意 k, 前 k 列全零的行张成模中前 k 列全零的子模 (Howell 性质)。
最后一条保证逐列约化即可判定成员关系、求核。
"""

import itertools
from typing import Iterator, Sequence

from src.config import EnumConfig
from src.errors import TooLarge
from .ring import ChainRing

Row = tuple[int, ...]


def _axpy(ring: ChainRing, row: list[int], t: int, other: Sequence[int], start: int = 0) -> None:
    """row -= t * other (就地)"""
    for k in range(start, len(row)):
        if other[k]:
            row[k] = ring.sub(row[k], ring.mul(t, other[k]))


def pivot_of(ring: ChainRing, row: Sequence[int]) -> tuple[int, int] | None:
    """返回 (主元列, 主元赋值), 零行返回 None"""
    for col, c in enumerate(row):
        if c:
            return col, ring.valuation(c)
    return None


def howell_form(ring: ChainRing, rows: Sequence[Sequence[int]], width: int) -> tuple[Row, ...]:
    """计算行向量张成的子模的约化 Howell 标准形

    Args:
        ring: 链环
        rows: 生成元 (长度均为 width)
        width: 向量长度

    Returns:
        按主元列升序排列的标准形行
    """
    work = [list(r) for r in rows if any(r)]
    pivots: list[tuple[int, int, list[int]]] = []
    for col in range(width):
        best = None
        for idx, row in enumerate(work):
            if row[col]:
                v = ring.valuation(row[col])
                if best is None or v < best[0]:
                    best = (v, idx)
        if best is None:
            continue
        v, idx = best
        pivot = work.pop(idx)
        scale = ring.inv(ring.unit_part(pivot[col]))
        pivot = [ring.mul(scale, c) for c in pivot]
        for row in work:
            if row[col]:
                _, t = ring.split(row[col], v)
                _axpy(ring, row, t, pivot, col)
        # γ^{e-v} 倍的主元行在本列为零, 保留它以维持 Howell 性质
        if v > 0:
            extra = [ring.mul(ring.gamma_powers[ring.e - v], c) for c in pivot]
            if any(extra):
                work.append(extra)
        work = [row for row in work if any(row)]
        pivots.append((col, v, pivot))

    for i, (col, v, pivot) in enumerate(pivots):
        for _, _, upper in pivots[:i]:
            if upper[col]:
                _, t = ring.split(upper[col], v)
                if t:
                    _axpy(ring, upper, t, pivot, col)
    return tuple(tuple(row) for _, _, row in pivots)


def reduce_vector(ring: ChainRing, basis: Sequence[Row], vec: Sequence[int], limit: int | None = None) -> Row:
    """用标准形约化 vec, 返回余量 (vec 属于子模当且仅当余量为零)

    limit 给出时只使用主元列 < limit 的行, 余量只在前 limit 列上有意义。
    """
    rest = list(vec)
    for row in basis:
        col, v = pivot_of(ring, row)
        if limit is not None and col >= limit:
            break
        if any(rest[:col]):
            break
        if not rest[col]:
            continue
        low, t = ring.split(rest[col], v)
        if low:
            break
        _axpy(ring, rest, t, row, col)
    return tuple(rest)


def contains(ring: ChainRing, basis: Sequence[Row], vec: Sequence[int]) -> bool:
    return not any(reduce_vector(ring, basis, vec))


def module_log_size(ring: ChainRing, basis: Sequence[Row]) -> int:
    """子模阶数以 q 为底的对数: Σ (e - v_i)"""
    return sum(ring.e - pivot_of(ring, row)[1] for row in basis)


def module_size(ring: ChainRing, basis: Sequence[Row]) -> int:
    return ring.q ** module_log_size(ring, basis)


def coefficient_reps(ring: ChainRing, depth: int) -> list[int]:
    """R/γ^depth R 的代表元: 只含前 depth 位 Teichmüller 数字的元素"""
    reps = []
    for digits in itertools.product(ring.teichmuller, repeat=depth):
        reps.append(ring.from_digits(digits[::-1]))
    return reps


def enumerate_module(ring: ChainRing, basis: Sequence[Row], width: int, cap: int | None = None) -> Iterator[Row]:
    """逐个产生子模中的全部向量, 每个恰好一次

    Raises:
        TooLarge: 子模阶数超过穷举上限
    """
    cap = EnumConfig().max_enum if cap is None else cap
    size = module_size(ring, basis)
    if size > cap:
        raise TooLarge(size, cap)
    choices = [coefficient_reps(ring, ring.e - pivot_of(ring, row)[1]) for row in basis]
    for coeffs in itertools.product(*choices):
        vec = [0] * width
        for c, row in zip(coeffs, basis):
            if c:
                _axpy(ring, vec, ring.neg(c), row)
        yield tuple(vec)


def kernel(ring: ChainRing, images: Sequence[Sequence[int]], width: int) -> tuple[Row, ...]:
    """线性映射 a ↦ Σ a_i · images[i] 的核

    Args:
        images: 定义域标准基的像, 每个长度为 width

    Returns:
        核的 Howell 标准形 (向量长度为 len(images))
    """
    dim = len(images)
    augmented = []
    for i, image in enumerate(images):
        unit = [0] * dim
        unit[i] = 1
        augmented.append(tuple(image) + tuple(unit))
    form = howell_form(ring, augmented, width + dim)
    tails = [row[width:] for row in form if not any(row[:width])]
    return howell_form(ring, tails, dim)


def express(ring: ChainRing, vectors: Sequence[Sequence[int]], target: Sequence[int]) -> list[int] | None:
    """求系数 c 使 Σ c_i vectors[i] = target, 不存在时返回 None"""
    width = len(target)
    dim = len(vectors)
    augmented = []
    for i, vec in enumerate(vectors):
        unit = [0] * dim
        unit[i] = 1
        augmented.append(tuple(vec) + tuple(unit))
    form = howell_form(ring, augmented, width + dim)
    rest = reduce_vector(ring, form, tuple(target) + (0,) * dim, limit=width)
    if any(rest[:width]):
        return None
    return [ring.neg(c) for c in rest[width:]]


def same_module(ring: ChainRing, left: Sequence[Row], right: Sequence[Row]) -> bool:
    """两个标准形是否张成同一子模"""
    if module_log_size(ring, left) != module_log_size(ring, right):
        return False
    return all(contains(ring, right, row) for row in left)
