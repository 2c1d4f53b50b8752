import pytest

from conftest import algebra_of, ring_of
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
from src.quotient_algebra import (
    AlgebraKind,
    chain_ideals,
    classify,
    find_inverse_bruteforce,
    gamma_x_decompose,
    ideal_lattice,
    lattice_is_chain,
    make_algebra,
    parse_algebra_spec,
    parse_poly,
    principal_ideals,
    s_add,
    s_invert,
    s_is_unit,
    s_mul,
    s_sub,
    scalar_mul,
    tau_shift,
)

NIE_ALGEBRAS = [
    ("Z(4)", 1, 0),
    ("Z(4)", 2, 0),
    ("Z(4)", 2, 2),
    ("Z(4)", 3, 2),
    ("Z(8)", 2, 2),
    ("Z(8)", 2, 4),
    ("Z(9)", 2, 3),
    ("F(4)", 2, 0),
    ("FU(2,2)", 2, 2),
    ("FU(2,2)", 3, 0),
]


# ===== 构造与参数 =====


def test_lambda_nilpotency():
    alg = algebra_of("Z(4)", 3, 2)
    assert alg.nie
    assert alg.lambda_nilpotency == 2
    assert alg.x_nilpotency == 6

    alg = algebra_of("Z(4)", 2, 0)
    assert alg.lambda_nilpotency == 1
    assert alg.x_nilpotency == 2

    alg = algebra_of("Z(8)", 2, 4)
    assert alg.lambda_nilpotency == 2
    assert alg.x_nilpotency == 4


def test_unit_lambda_is_not_nie():
    alg = algebra_of("Z(4)", 2, 1)
    assert not alg.nie
    assert alg.lambda_nilpotency is None
    with pytest.raises(NotNIE):
        alg.x_nilpotency
    with pytest.raises(NotNIE):
        s_is_unit(alg.one())
    with pytest.raises(NotNIE):
        classify(alg)


def test_make_algebra_rejects_bad_input(z4, z8):
    with pytest.raises(BadParameters):
        make_algebra(z4, 0, 0)
    with pytest.raises(RingMismatch):
        make_algebra(z4, 2, z8.elem(2))
    with pytest.raises(IndexOutOfRange):
        make_algebra(z4, 2, 7)


def test_poly_construction(chain_alg, z4):
    assert chain_alg.poly([3]).coeffs == (3, 0)
    assert chain_alg.poly([z4.elem(1), z4.elem(2)]).coeffs == (1, 2)
    with pytest.raises(LengthMismatch):
        chain_alg.poly([1, 2, 3])
    with pytest.raises(IndexOutOfRange):
        chain_alg.poly([4])


@pytest.mark.parametrize("ring, n, lam", NIE_ALGEBRAS)
def test_x_nilpotency_is_exact(ring, n, lam):
    alg = algebra_of(ring, n, lam)
    big_n = alg.x_nilpotency
    assert alg.x_power(big_n).is_zero()
    assert not alg.x_power(big_n - 1).is_zero()


# ===== 运算 =====


def test_multiplication_reduces_by_lambda(chain_alg):
    x = chain_alg.poly([0, 1])
    one_plus_x = chain_alg.poly([1, 1])
    assert s_mul(x, x).coeffs == (2, 0)
    assert s_mul(one_plus_x, one_plus_x).coeffs == (3, 2)
    assert s_add(x, one_plus_x).coeffs == (1, 2)
    assert s_sub(x, one_plus_x).coeffs == (3, 0)
    assert scalar_mul(chain_alg.ring.elem(2), one_plus_x).coeffs == (2, 2)


def test_mixed_algebra_rejected(chain_alg, local_alg):
    with pytest.raises(AlgebraMismatch):
        chain_alg.one() + local_alg.one()


def test_tau_shift(z4):
    lam = z4.elem(2)
    v = [z4.elem(0), z4.elem(0), z4.elem(1)]
    assert [c.code for c in tau_shift(v, lam)] == [2, 0, 0]
    v = [z4.elem(1), z4.elem(2), z4.elem(3)]
    assert [c.code for c in tau_shift(v, z4.elem(0))] == [0, 1, 2]
    with pytest.raises(LengthMismatch):
        tau_shift(v, lam, n=2)


def test_unit_and_inverse_examples(chain_alg):
    a = chain_alg.poly([1, 2])
    assert s_is_unit(a)
    assert s_invert(a) == a
    assert not s_is_unit(chain_alg.poly([2, 1]))
    with pytest.raises(NotAUnit):
        s_invert(chain_alg.poly([2, 1]))


@pytest.mark.parametrize("ring, n, lam", NIE_ALGEBRAS)
def test_unit_criterion_matches_exhaustive_inverse(ring, n, lam):
    alg = algebra_of(ring, n, lam)
    if alg.size > 256:
        pytest.skip("穷举求逆只在小代数上运行")
    one = alg.one()
    for a in alg.elements():
        has_inverse = find_inverse_bruteforce(a) is not None
        assert s_is_unit(a) == has_inverse
        if has_inverse:
            assert a * s_invert(a) == one


def test_elements_cap(chain_alg):
    assert len(list(chain_alg.elements())) == 16
    with pytest.raises(TooLarge):
        list(chain_alg.elements(cap=8))


# ===== 分类与理想格 =====


@pytest.mark.parametrize(
    "ring, n, lam, kind, nilpotency",
    [
        ("F(5)", 4, 0, AlgebraKind.FIELD_QUOTIENT, 4),
        ("Z(4)", 1, 2, AlgebraKind.CHAIN_VIA_GAMMA, 2),
        ("Z(4)", 3, 2, AlgebraKind.CHAIN_VIA_X, 6),
        ("Z(4)", 2, 2, AlgebraKind.CHAIN_VIA_X, 4),
        ("Z(4)", 2, 0, AlgebraKind.LOCAL_NON_CHAIN, None),
        ("Z(8)", 2, 4, AlgebraKind.LOCAL_NON_CHAIN, None),
    ],
)
def test_classify(ring, n, lam, kind, nilpotency):
    result = classify(algebra_of(ring, n, lam))
    assert result.kind == kind
    assert result.nilpotency == nilpotency


@pytest.mark.parametrize("ring, n, lam", NIE_ALGEBRAS)
def test_classification_matches_ideal_lattice(ring, n, lam):
    alg = algebra_of(ring, n, lam)
    if alg.size > 256:
        pytest.skip("理想格穷举只在小代数上运行")
    kind = classify(alg)
    assert kind.is_chain == lattice_is_chain(alg)
    if kind.is_chain:
        assert len(ideal_lattice(alg)) == kind.ideal_count


def test_chain_via_x_has_five_ideals(chain_alg):
    lattice = ideal_lattice(chain_alg)
    assert len(lattice) == 5
    ideals = chain_ideals(chain_alg)
    assert [size for _, size in ideals] == [16, 8, 4, 2, 1]
    assert [g.to_text() for g, _ in ideals] == ["[1,0]", "[0,1]", "[2,0]", "[0,2]", "[0,0]"]


def test_local_non_chain_lattice(local_alg):
    assert not lattice_is_chain(local_alg)
    # 极大理想 <2, x> 不是主理想
    assert len(ideal_lattice(local_alg)) > len(principal_ideals(local_alg))
    with pytest.raises(BadParameters):
        chain_ideals(local_alg)


def test_chain_via_gamma_ideals():
    ideals = chain_ideals(algebra_of("Z(8)", 1, 2))
    assert [g.coeffs for g, _ in ideals] == [(1,), (2,), (4,), (0,)]
    assert [size for _, size in ideals] == [8, 4, 2, 1]


# ===== γ-x 分解 =====


def test_gamma_x_decompose_single_layer():
    alg = algebra_of("Z(4)", 3, 2)
    form = gamma_x_decompose(alg.poly([0, 0, 2]))
    (t0, t1) = form.terms
    assert (t0.j, t0.t, t0.h.coeffs) == (0, 2, (0, 0, 0))
    assert (t1.j, t1.t, t1.h.coeffs) == (1, 2, (1, 0, 0))


def test_gamma_x_decompose_two_layers(chain_alg):
    a = chain_alg.poly([3, 2])
    t0, t1 = gamma_x_decompose(a).terms
    assert (t0.t, t0.h.coeffs) == (0, (1, 0))
    assert (t1.t, t1.h.coeffs) == (0, (1, 1))
    assert gamma_x_decompose(a).reassemble() == a


@pytest.mark.parametrize("ring, n, lam", NIE_ALGEBRAS)
def test_gamma_x_decomposition_reassembles(ring, n, lam):
    alg = algebra_of(ring, n, lam)
    teich = set(alg.ring.teichmuller)
    for a in alg.elements(cap=4096):
        form = gamma_x_decompose(a)
        assert form.reassemble() == a
        for term in form.terms:
            assert set(term.h.coeffs) <= teich


# ===== 文本语法 =====


def test_parse_algebra_spec_round_trip():
    alg = parse_algebra_spec("Z(4);n=3;lambda=2")
    assert (alg.ring, alg.n, alg.lam) == (ring_of("Z(4)"), 3, 2)
    assert alg.to_text() == "Z(4);n=3;lambda=2"
    gr = parse_algebra_spec("GR(4,2;mod=1,1,1) ; n=2 ; lambda=2")
    assert parse_algebra_spec(gr.to_text()) == gr


@pytest.mark.parametrize("text", ["Z(4);n=3", "Z(4);n=x;lambda=2", "n=3;lambda=2"])
def test_parse_algebra_spec_rejects(text):
    with pytest.raises(SpecSyntaxError):
        parse_algebra_spec(text)


def test_parse_poly(chain_alg):
    assert parse_poly(chain_alg, "[1, 2]").coeffs == (1, 2)
    assert parse_poly(chain_alg, "[]").is_zero()
    assert parse_poly(chain_alg, "[3]").to_text() == "[3,0]"
    with pytest.raises(SpecSyntaxError):
        parse_poly(chain_alg, "1+x")
