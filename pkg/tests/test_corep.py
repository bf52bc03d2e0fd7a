import pytest

from slq2.algebra import AlgebraMode, from_word, generators, is_central, multiply, unit
from slq2.corep import (
    DirectSum,
    Extension,
    Irr,
    Leaf,
    Subspace,
    build_v,
    build_w,
    build_y,
    decompose_l3,
    hom_space,
    irreducibility_certificate,
    quotient_corep,
    restrict_corep,
    span_of_basis_indices,
    standard_y_subspace_indices,
    subcomodule_check,
    tensor,
    tree_flag,
    tree_layers,
    verify_corep,
)
from slq2.cyclo import CyclotomicScalar, q_power
from slq2.hopf import counit
from slq2.linalg import is_invertible

GEN3 = AlgebraMode.generic(3)


def el(*word):
    return from_word(GEN3, [(g, 1) for g in word])


# -- builders ----------------------------------------------------------------

def test_v1_matrix_is_the_generator_matrix():
    v1 = build_v(1, 3)
    a, b, c, d = generators(GEN3)
    assert v1.rho == [[a, b], [c, d]]
    assert v1.basis_labels == ["a", "c"]


def test_y0_is_trivial():
    y0 = build_y(0, 3)
    assert y0.dim == 1 and y0.rho == [[unit(GEN3)]]


def test_v2_matrix_matches_reference():
    v2 = build_v(2, 3)
    q = q_power(3, 1)
    a, b, c, d = generators(GEN3)
    # reference layout: [[a^2, -q^2 ab, b^2], [ac, ad + q^-1 bc, bd], [c^2, -q^2 cd, d^2]]
    assert v2.rho[0][0] == multiply(a, a)
    assert v2.rho[0][1] == multiply(a, b).scale(-(q**2))
    assert v2.rho[0][2] == multiply(b, b)
    assert v2.rho[1][0] == multiply(a, c)
    assert v2.rho[1][1] == multiply(a, d) + multiply(b, c).scale(q.inverse())
    assert v2.rho[1][2] == multiply(b, d)
    assert v2.rho[2][0] == multiply(c, c)
    assert v2.rho[2][1] == multiply(c, d).scale(-(q**2))
    assert v2.rho[2][2] == multiply(d, d)


def test_w1_matrix_is_the_cube_matrix():
    w1 = build_w(1, 3)
    assert w1.rho[0][0] == from_word(GEN3, [("a", 3)])
    assert w1.rho[0][1] == from_word(GEN3, [("b", 3)])
    assert w1.rho[1][0] == from_word(GEN3, [("c", 3)])
    assert w1.rho[1][1] == from_word(GEN3, [("d", 3)])


def test_w_entries_are_central_with_counit_pattern():
    w2 = build_w(2, 3)
    one = CyclotomicScalar.one(3)
    for i in range(w2.dim):
        for j in range(w2.dim):
            assert is_central(w2.rho[i][j])
            assert counit(w2.rho[i][j]) == (one if i == j else CyclotomicScalar.zero(3))


def test_build_v_range_checked():
    with pytest.raises(ValueError):
        build_v(3, 3)


# -- verification ---------------------------------------------------------------

@pytest.mark.parametrize("factory", [lambda: build_y(4, 3), lambda: build_w(3, 5), lambda: build_v(3, 5)])
def test_verify_corep_passes(factory):
    assert verify_corep(factory()).ok


def test_verify_corep_detects_corruption():
    y = build_y(2, 3)
    y.rho[0][1], y.rho[1][0] = y.rho[1][0], y.rho[0][1]
    assert not verify_corep(y).ok


def test_tensor_corep_satisfies_axioms():
    t = tensor(build_v(1, 3), build_w(1, 3))
    assert verify_corep(t).ok
    assert t.dim == 4


# -- certificates ------------------------------------------------------------------

def test_certificates():
    assert irreducibility_certificate(build_v(1, 3)).rank == 4
    y3 = build_y(3, 3)
    cert = irreducibility_certificate(y3)
    assert not cert.independent and cert.witness is not None
    assert irreducibility_certificate(build_y(5, 3)).independent
    assert irreducibility_certificate(build_y(8, 3)).independent  # Y_{l-1+l m1} for m1 = 2


def test_schur_property():
    for c in (build_v(1, 3), build_v(2, 3), build_w(1, 3), build_w(2, 3)):
        assert len(hom_space(c, c)) == 1


# -- hom spaces ---------------------------------------------------------------------

def test_hom_space_examples():
    v0, v1 = build_v(0, 3), build_v(1, 3)
    w1 = build_w(1, 3)
    assert len(hom_space(v0, tensor(v1, v1))) == 1
    assert hom_space(v1, w1) == []
    homs = hom_space(build_y(5, 3), tensor(w1, build_v(2, 3)))
    assert len(homs) == 1 and is_invertible(homs[0])


def test_invariant_vector_of_v1_v1():
    v0 = build_v(0, 3)
    t = hom_space(v0, tensor(build_v(1, 3), build_v(1, 3)))[0]
    q = q_power(3, 1)
    row = t.data[0]
    # the quantum determinant direction a(x)c - q c(x)a, up to scale
    assert row[0].is_zero() and row[3].is_zero()
    assert row[2] == -(q * row[1])


# -- subcomodules and quotients -------------------------------------------------------

def test_y3_filtration():
    y3 = build_y(3, 3)
    assert standard_y_subspace_indices(3, 3) == [0, 3]
    sub = span_of_basis_indices(y3, [0, 3])
    assert subcomodule_check(y3, sub)
    restricted = restrict_corep(y3, sub)
    assert restricted.rho == build_w(1, 3).rho
    quotient = quotient_corep(y3, sub)
    homs = hom_space(quotient, build_v(1, 3))
    assert any(is_invertible(t) for t in homs)


def test_bad_subspace_rejected():
    y3 = build_y(3, 3)
    bad = span_of_basis_indices(y3, [0])
    assert not subcomodule_check(y3, bad)
    with pytest.raises(ValueError):
        quotient_corep(y3, bad)


def test_y4_filtration():
    y4 = build_y(4, 3)
    assert standard_y_subspace_indices(4, 3) == [0, 1, 3, 4]
    sub = span_of_basis_indices(y4, [0, 1, 3, 4])
    assert subcomodule_check(y4, sub)
    restricted = restrict_corep(y4, sub)
    model = tensor(build_w(1, 3), build_v(1, 3))
    assert restricted.rho == model.rho
    quotient = quotient_corep(y4, sub)
    assert quotient.dim == 1
    assert quotient.rho == [[unit(GEN3)]]


# -- decomposition ----------------------------------------------------------------------

def test_decompose_v1_v1():
    tree = decompose_l3(tensor(build_v(1, 3), build_v(1, 3)))
    assert tree == DirectSum((Leaf(Irr(0, 0)), Leaf(Irr(0, 2))))


def test_decompose_v1_v2():
    tree = decompose_l3(tensor(build_v(1, 3), build_v(2, 3)))
    assert tree == Extension(Leaf(Irr(0, 1)), Extension(Leaf(Irr(1, 0)), Leaf(Irr(0, 1))))
    assert tree_flag(tree) == ["V1", "W1", "V1"]


def test_decompose_w_ladder():
    tree = decompose_l3(tensor(build_w(1, 3), build_w(1, 3)))
    assert tree_layers(tree) == [["V0", "W2"]]


def test_decompose_requires_ell3():
    with pytest.raises(ValueError):
        decompose_l3(build_v(1, 5))


def test_opposite_orders_equivalent():
    for m, mp in [(1, 2), (2, 1), (2, 2)]:
        one = tree_layers(decompose_l3(tensor(build_v(m, 3), build_v(mp, 3))))
        two = tree_layers(decompose_l3(tensor(build_v(mp, 3), build_v(m, 3))))
        assert one == two


# -- ell = 5 spot checks -------------------------------------------------------------

def test_y7_filtration_ell5():
    ell = 5
    y7 = build_y(7, ell)  # m0 = 2, m1 = 1
    indices = standard_y_subspace_indices(7, ell)
    sub = span_of_basis_indices(y7, indices)
    assert subcomodule_check(y7, sub)
    restricted = restrict_corep(y7, sub)
    model = tensor(build_w(1, ell), build_v(2, ell))
    assert restricted.rho == model.rho
    quotient = quotient_corep(y7, sub)
    homs = hom_space(quotient, build_v(1, ell))
    assert any(is_invertible(t) for t in homs)
