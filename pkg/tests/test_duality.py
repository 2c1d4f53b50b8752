import pytest

from conftest import algebra_of
from src.chain_ring import contains
from src.code_core import (
    LinearCode,
    code_from_basis,
    code_from_generators,
    full_code,
    gamma_power_code,
    zero_code,
)
from src.duality import (
    DualVerdict,
    ReversalPerm,
    annihilator,
    annihilator_bruteforce,
    dual,
    dual_code,
    dual_constacyclic_constants,
    dual_min_distance_check,
    dual_torsion_profile,
    expected_dual_matrix,
    inner_product_dual,
    is_dual_constacyclic,
)
from src.errors import BadParameters, FullCode
from src.quotient_algebra import ideal_lattice, shift_codes

SWEEP_ALGEBRAS = [
    ("Z(4)", 2, 0),
    ("Z(4)", 2, 2),
    ("Z(4)", 3, 2),
    ("Z(8)", 2, 2),
    ("F(4)", 2, 0),
    ("F(3)", 3, 0),
    ("FU(2,2)", 2, 2),
]


@pytest.fixture
def x_code(chain_alg):
    return code_from_generators(chain_alg, [chain_alg.poly([0, 1])])


def test_reversal_permutation():
    perm = ReversalPerm(3)
    assert perm.apply((1, 2, 3)) == (3, 2, 1)
    assert perm.apply_rows([(1, 0, 0), (0, 1, 2)]) == [(0, 0, 1), (2, 1, 0)]
    assert perm.matrix() == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_annihilator_of_x(x_code, chain_alg):
    ann = annihilator(x_code)
    assert ann.module.size == 2
    assert ann == code_from_generators(chain_alg, [chain_alg.x_power(3)])
    assert ann == annihilator_bruteforce(x_code)
    assert ann.torsional_degrees == (2, 1)
    assert dual_torsion_profile(x_code) == (2, 1)


def test_dual_of_x(x_code, z4):
    d = dual_code(x_code)
    assert d.size == 2
    assert d.contains((2, 0))
    assert not d.contains((0, 2))
    assert d == inner_product_dual(x_code)
    assert d == LinearCode.span(z4, expected_dual_matrix(x_code), 2)
    assert expected_dual_matrix(x_code) == [(2, 0)]
    assert dual_min_distance_check(x_code) == 1


def test_dual_of_x_is_not_constacyclic(x_code):
    verdict = is_dual_constacyclic(x_code)
    assert not verdict.constacyclic
    assert verdict.witness == (2, 0)
    assert [lam for lam, _, _ in verdict.failures] == [0, 1, 2, 3]
    assert verdict.to_json()["no"]["witness"] == [2, 0]
    assert dual_constacyclic_constants(x_code) == []


def test_dual_of_gamma_code_is_constacyclic(local_alg):
    code = gamma_power_code(local_alg, 1)
    verdict = is_dual_constacyclic(code)
    assert verdict == DualVerdict(True, exponent=1)
    assert verdict.to_json() == {"yes": 1}
    assert dual_constacyclic_constants(code) == [0, 1, 2, 3]
    assert is_dual_constacyclic(zero_code(local_alg)).exponent == 2
    assert is_dual_constacyclic(full_code(local_alg)).exponent == 0


def test_full_code_dual_distance_undefined(chain_alg):
    with pytest.raises(FullCode):
        dual_min_distance_check(full_code(chain_alg))


def test_expected_dual_matrix_shapes():
    field_alg = algebra_of("F(3)", 3, 0)
    code = code_from_generators(field_alg, [field_alg.x_power(2)])
    assert expected_dual_matrix(code) == [(1, 0, 0), (0, 1, 0)]

    alg = algebra_of("Z(8)", 2, 2)
    code = code_from_generators(alg, [alg.x_power(3)])
    # k = 1, w = 1: 第一行 γ^{e-2}, 第二行 γ^{e-1}
    assert expected_dual_matrix(code) == [(2, 0), (0, 4)]
    assert dual_code(code) == LinearCode.span(alg.ring, expected_dual_matrix(code), 2)

    with pytest.raises(BadParameters):
        expected_dual_matrix(gamma_power_code(algebra_of("Z(4)", 2, 0), 1))


def test_dual_report(x_code):
    report = dual(x_code)
    assert report.annihilator_profile == report.predicted_profile == (2, 1)
    assert report.is_constacyclic_for == []
    data = report.to_json()
    assert data["annihilator"]["cardinality"] == "2"
    assert data["dual"]["cardinality"] == "2"
    assert "no" in data["verdict"]


@pytest.mark.parametrize("ring, n, lam", SWEEP_ALGEBRAS)
def test_duality_sweep(ring, n, lam):
    alg = algebra_of(ring, n, lam)
    total = alg.ring.size**n
    gamma_codes = [gamma_power_code(alg, i) for i in range(alg.ring.e + 1)]
    for basis in ideal_lattice(alg):
        code = code_from_basis(alg, basis)
        ann = annihilator(code)
        d = dual_code(code)
        assert ann.is_ideal()
        assert ann.module.size * code.module.size == total
        assert ann == annihilator_bruteforce(code)
        assert ann.torsional_degrees == dual_torsion_profile(code)
        assert d == inner_product_dual(code)
        # 对偶码中的每个向量与码字内积为零
        for row in d.basis:
            for word in code.basis:
                acc = 0
                for a, b in zip(row, word):
                    acc = alg.ring.add(acc, alg.ring.mul(a, b))
                assert acc == 0
        if not code.is_full():
            assert dual_min_distance_check(code) == 1
        verdict = is_dual_constacyclic(code)
        assert verdict.constacyclic == (code in gamma_codes)
        assert verdict.constacyclic == bool(dual_constacyclic_constants(code))
        if not verdict.constacyclic:
            w = verdict.witness
            assert w is not None and d.contains(w)
            for other in range(alg.ring.size):
                assert not contains(alg.ring, d.basis, shift_codes(alg.ring, other, w))
