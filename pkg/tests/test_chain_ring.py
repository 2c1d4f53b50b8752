import itertools

import pytest

from conftest import ring_of
from src.chain_ring import (
    ChainRingSpec,
    Family,
    arith,
    contains,
    enumerate_elements,
    enumerate_module,
    express,
    gamma_adic,
    howell_form,
    invert,
    is_unit,
    kernel,
    make_ring,
    module_size,
    parse_ring_spec,
    quotient_ring,
    same_module,
    teichmuller_set,
)
from src.errors import (
    DegreeMismatch,
    IndexOutOfRange,
    NonPrime,
    NotAUnit,
    ReducibleModulus,
    RingMismatch,
    SpecSyntaxError,
    TooLarge,
)

SMALL_RINGS = ["Z(4)", "Z(8)", "Z(9)", "F(4)", "F(5)", "GR(4,2)", "FU(2,2)", "FU(4,2)"]


# ===== 规格解析 =====


@pytest.mark.parametrize(
    "text, family, size, canonical",
    [
        ("Z(8)", Family.INTEGER_MOD, 8, "Z(8)"),
        ("Z(2^3)", Family.INTEGER_MOD, 8, "Z(8)"),
        ("F(5)", Family.FINITE_FIELD, 5, "F(5)"),
        ("F(4)", Family.FINITE_FIELD, 4, "F(4;mod=1,1,1)"),
        ("GR(4,2)", Family.GALOIS_RING, 16, "GR(4,2;mod=1,1,1)"),
        ("GR(4,2;mod=1,1,1)", Family.GALOIS_RING, 16, "GR(4,2;mod=1,1,1)"),
        ("FU(2,2)", Family.EISENSTEIN, 4, "FU(2,2)"),
    ],
)
def test_parse_ring_spec(text, family, size, canonical):
    spec = parse_ring_spec(text)
    assert spec.family == family
    assert spec.size == size
    assert spec.to_text() == canonical
    assert parse_ring_spec(spec.to_text()) == spec


@pytest.mark.parametrize(
    "text, error",
    [
        ("Q(5)", SpecSyntaxError),
        ("Z(4", SpecSyntaxError),
        ("GR(4)", SpecSyntaxError),
        ("F(6)", NonPrime),
        ("Z(4^2)", NonPrime),
        ("F(4;mod=1,0,1)", ReducibleModulus),
        ("F(4;mod=1,1)", DegreeMismatch),
        ("GR(4,2;mod=1,1,3)", DegreeMismatch),
    ],
)
def test_parse_ring_spec_rejects(text, error):
    with pytest.raises(error):
        parse_ring_spec(text)


def test_make_ring_is_cached():
    spec = ChainRingSpec.integer_mod(2, 2)
    assert make_ring(spec) is make_ring(spec)
    assert make_ring(ChainRingSpec.galois_ring(2, 2, 2)) == ring_of("GR(4,2;mod=1,1,1)")


# ===== 环运算 =====


def test_integer_mod_arithmetic(z4):
    two, three = z4.elem(2), z4.elem(3)
    assert (two * two).code == 0
    assert (three + two).code == 1
    assert (-three).code == 1
    assert arith("sub", two, three).code == 3


def test_galois_ring_multiplication():
    gr = ring_of("GR(4,2)")
    z = gr.elem(4)  # z 的系数 [0, 1]
    # z^2 = -z - 1 = 3z + 3
    assert (z * z).code == 3 + 3 * 4
    assert gr.gamma == 2
    assert (gr.q, gr.e, gr.size) == (4, 2, 16)


def test_eisenstein_ring_structure():
    fu = ring_of("FU(2,2)")
    u = fu.elem(fu.gamma)
    assert (u * u).code == 0
    assert (fu.elem(3) + fu.elem(3)).code == 0
    assert fu.digits(3) == (1, 1)


def test_mixed_ring_arithmetic_rejected(z4, z8):
    with pytest.raises(RingMismatch):
        z4.elem(1) + z8.elem(1)
    with pytest.raises(RingMismatch):
        arith("add", z4.elem(1), z8.elem(1))


def test_elem_out_of_range(z4):
    with pytest.raises(IndexOutOfRange):
        z4.elem(4)


def test_invert(z8):
    assert invert(z8.elem(5)).code == 5
    assert invert(z8.elem(3)).code == 3
    with pytest.raises(NotAUnit):
        invert(z8.elem(2))


@pytest.mark.parametrize("text", SMALL_RINGS)
def test_unit_criterion_matches_exhaustive_search(text):
    ring = ring_of(text)
    for a in range(ring.size):
        has_inverse = any(ring.mul(a, b) == 1 for b in range(ring.size))
        assert ring.is_unit(a) == has_inverse
        if has_inverse:
            assert ring.mul(a, ring.inv(a)) == 1


# ===== Teichmüller 集与 γ-adic 展开 =====


def test_teichmuller_sets():
    assert [t.code for t in teichmuller_set(ring_of("Z(9)"))] == [0, 1, 8]
    assert [t.code for t in teichmuller_set(ring_of("Z(4)"))] == [0, 1]
    f5 = ring_of("F(5)")
    assert f5.zeta == 2
    assert f5.teichmuller == (0, 1, 2, 4, 3)


def test_gamma_adic_examples():
    assert [d.code for d in gamma_adic(ring_of("Z(4)").elem(3))] == [1, 1]
    assert [d.code for d in gamma_adic(ring_of("Z(9)").elem(5))] == [8, 8]
    assert [d.code for d in gamma_adic(ring_of("Z(8)").elem(6))] == [0, 1, 1]


@pytest.mark.parametrize("text", SMALL_RINGS)
def test_gamma_adic_is_a_bijection(text):
    ring = ring_of(text)
    teich = set(ring.teichmuller)
    seen = set()
    for a in range(ring.size):
        digits = ring.digits(a)
        assert len(digits) == ring.e
        assert set(digits) <= teich
        assert ring.from_digits(digits) == a
        seen.add(digits)
    assert len(seen) == ring.size


@pytest.mark.parametrize("text", SMALL_RINGS)
def test_teichmuller_differences_are_units(text):
    ring = ring_of(text)
    assert len(ring.teichmuller) == ring.q
    for a, b in itertools.combinations(ring.teichmuller, 2):
        assert ring.is_unit(ring.sub(a, b))
    assert ring.pow(ring.zeta, ring.q - 1) == 1


@pytest.mark.parametrize("text", SMALL_RINGS)
def test_gamma_powers_are_nested(text):
    ring = ring_of(text)
    for k in range(ring.e + 1):
        ideal = {ring.mul(ring.gamma_powers[k], a) for a in range(ring.size)}
        assert len(ideal) == ring.q ** (ring.e - k)
    assert ring.gamma_powers[ring.e] == 0


def test_valuation_and_split(z8):
    assert z8.valuation(0) == 3
    assert z8.valuation(6) == 1
    low, t = z8.split(7, 1)
    assert low == 1
    assert z8.add(low, z8.mul(2, t)) == 7


def test_enumerate_elements_cap(z4):
    assert [a.code for a in enumerate_elements(z4)] == [0, 1, 2, 3]
    with pytest.raises(TooLarge):
        list(enumerate_elements(z4, cap=2))


def test_is_unit_wrapper(z4):
    assert is_unit(z4.elem(3))
    assert not is_unit(z4.elem(2))


# ===== 商环 =====


def test_quotient_ring_projection(z8):
    quotient = quotient_ring(z8, 2)
    assert quotient.ring.spec.to_text() == "Z(4)"
    assert quotient.mu(z8.elem(5)).code == 1
    assert quotient_ring(z8, 3).mu(z8.elem(5)).code == 5
    with pytest.raises(IndexOutOfRange):
        quotient_ring(z8, 0)
    with pytest.raises(IndexOutOfRange):
        quotient_ring(z8, 4)


def test_quotient_lift_uses_teichmuller_digits():
    z9 = ring_of("Z(9)")
    residue = quotient_ring(z9, 1)
    assert residue.ring.size == 3
    assert residue.lift(residue.ring.elem(2)).code == 8
    assert residue.phi(residue.ring.elem(2)).code == 2


@pytest.mark.parametrize("text", ["Z(8)", "GR(4,2)", "FU(2,2)"])
def test_quotient_map_is_a_homomorphism(text):
    ring = ring_of(text)
    for j in range(1, ring.e):
        quotient = quotient_ring(ring, j)
        target, mu = quotient.ring, quotient.mu_code
        assert target.size == ring.q**j
        for a, b in itertools.product(range(ring.size), repeat=2):
            assert mu(ring.add(a, b)) == target.add(mu(a), mu(b))
            assert mu(ring.mul(a, b)) == target.mul(mu(a), mu(b))
        for c in range(target.size):
            assert mu(quotient.lift_code(c)) == c


def test_quotient_mu_rejects_foreign_element(z4, z8):
    with pytest.raises(RingMismatch):
        quotient_ring(z8, 1).mu(z4.elem(1))


# ===== γ-阶梯标准形 =====


def test_howell_form_keeps_hidden_rows(z4):
    # 2·(2,1) = (0,2) 必须出现在标准形中, 否则无法判定 (0,2) 的成员关系
    basis = howell_form(z4, [(2, 1)], 2)
    assert basis == ((2, 1), (0, 2))
    assert module_size(z4, basis) == 4
    assert contains(z4, basis, (0, 2))
    assert contains(z4, basis, (2, 3))
    assert not contains(z4, basis, (0, 1))


def test_howell_form_is_canonical(z4):
    left = howell_form(z4, [(0, 1), (2, 0)], 2)
    right = howell_form(z4, [(2, 1), (0, 3), (2, 2)], 2)
    assert left == right == ((2, 0), (0, 1))
    assert same_module(z4, left, right)


def test_enumerate_module_lists_each_vector_once(z8):
    basis = howell_form(z8, [(2, 4, 1), (0, 4, 6)], 3)
    words = list(enumerate_module(z8, basis, 3))
    assert len(words) == len(set(words)) == module_size(z8, basis)
    assert all(contains(z8, basis, w) for w in words)
    with pytest.raises(TooLarge):
        list(enumerate_module(z8, basis, 3, cap=2))


def test_kernel_of_linear_map(z4):
    # a_0·2 + a_1·2 = 0 当且仅当 a_0 + a_1 为偶数
    ker = kernel(z4, [(2,), (2,)], 1)
    assert module_size(z4, ker) == 8
    assert contains(z4, ker, (1, 1))
    assert contains(z4, ker, (2, 0))
    assert not contains(z4, ker, (1, 0))


def test_express(z4):
    vectors = [(1, 0), (0, 2)]
    coeffs = express(z4, vectors, (3, 2))
    assert coeffs is not None
    combo = [z4.add(z4.mul(coeffs[0], a), z4.mul(coeffs[1], b)) for a, b in zip(*vectors)]
    assert combo == [3, 2]
    assert express(z4, [(0, 2)], (0, 1)) is None
