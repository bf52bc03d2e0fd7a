import pytest
from hypothesis import given, strategies as st

from slq2.algebra import (
    AlgebraMode,
    NormalMonomial,
    all_monomials,
    from_word,
    generators,
    monomial_element,
    monomials_of_degree,
    multiply,
    unit,
)
from slq2.cyclo import CyclotomicScalar, q_binomial, q_power
from slq2.hopf import (
    FRepresentation,
    antipode,
    character,
    characters,
    check_hopf_axioms,
    coinvariance_check,
    convolve,
    coproduct,
    counit,
    evaluate_character,
    restrict_character,
    tensor_of,
)
from slq2.linalg import ScalarMatrix

GEN3 = AlgebraMode.generic(3)
F3 = AlgebraMode.quotient_f(3)
FHAT3 = AlgebraMode.quotient_fhat(3)


def el(mode, *word):
    return from_word(mode, [(g, 1) for g in word])


small_words = st.lists(st.sampled_from("abcd"), min_size=0, max_size=3).map(tuple)


# -- coproduct, counit, antipode ------------------------------------------------

def test_coproduct_generators():
    a, b, c, d = generators(GEN3)
    assert coproduct(a) == tensor_of(a, a) + tensor_of(b, c)
    assert coproduct(b) == tensor_of(a, b) + tensor_of(b, d)
    assert coproduct(c) == tensor_of(c, a) + tensor_of(d, c)
    assert coproduct(d) == tensor_of(c, b) + tensor_of(d, d)
    assert coproduct(unit(GEN3)) == tensor_of(unit(GEN3), unit(GEN3))


def test_coproduct_of_a_squared():
    a, b, c, _ = generators(GEN3)
    a2 = multiply(a, a)
    expected = (
        tensor_of(a2, a2)
        + tensor_of(multiply(a, b), multiply(a, c)).scale(CyclotomicScalar.one(3) + q_power(3, -2))
        + tensor_of(multiply(b, b), multiply(c, c))
    )
    assert coproduct(a2) == expected


def test_counit_values():
    a, b, c, d = generators(GEN3)
    assert counit(a) == 1 and counit(d) == 1
    assert counit(b).is_zero() and counit(c).is_zero()
    assert counit(el(GEN3, "a", "b")).is_zero()
    assert counit(el(GEN3, "a", "d")) == 1


def test_antipode_values():
    a, b, c, d = generators(GEN3)
    assert antipode(a) == d
    assert antipode(d) == a
    assert antipode(b) == b.scale(-q_power(3, -1))
    assert antipode(c) == c.scale(-q_power(3, 1))
    # anti-homomorphism on a product
    assert antipode(multiply(a, b)) == multiply(el(GEN3, "b"), el(GEN3, "d")).scale(-q_power(3, -1))


@given(w1=small_words, w2=small_words)
def test_coproduct_multiplicative(w1, w2):
    x = from_word(GEN3, [(g, 1) for g in w1])
    y = from_word(GEN3, [(g, 1) for g in w2])
    assert coproduct(multiply(x, y)) == coproduct(x).multiply(coproduct(y))
    assert counit(multiply(x, y)) == counit(x) * counit(y)
    assert antipode(multiply(x, y)) == multiply(antipode(y), antipode(x))


@pytest.mark.parametrize("mono", monomials_of_degree(3))
def test_hopf_axioms_low_degree(mono):
    rep = check_hopf_axioms(monomial_element(GEN3, mono))
    assert rep.all_ok


def test_hopf_axioms_in_quotients():
    for mode in (F3, FHAT3):
        for word in [("a",), ("b",), ("a", "b", "c"), ("d", "d")]:
            assert check_hopf_axioms(el(mode, *word)).all_ok


def test_corrected_closed_coproduct_formula():
    """Delta(a^(m-h) c^h) = sum over r and s from 0 of
    q^(-r(h-s)) (m-h r)_{q^-2} (h s)_{q^-2}
    a^(m-h-r) b^r c^(h-s) d^s (x) a^(m-r-s) c^(r+s);
    the printed form of this formula starts the sums at 1, which would drop
    the counit term, so the homomorphic coproduct is the ground truth."""
    from slq2.hopf import TensorElement

    ell = 3
    mode = AlgebraMode.generic(ell)
    for m in range(5):
        for h in range(m + 1):
            mono = NormalMonomial(m - h, 0, h)
            expected = TensorElement(mode, 2, {})
            for r in range(m - h + 1):
                for s in range(h + 1):
                    coeff = (
                        q_power(ell, -r * (h - s))
                        * q_binomial(ell, m - h, r, -2)
                        * q_binomial(ell, h, s, -2)
                    )
                    left = from_word(mode, [("a", m - h - r), ("b", r), ("c", h - s), ("d", s)])
                    right = from_word(mode, [("a", m - r - s), ("c", r + s)])
                    expected = expected + tensor_of(left, right).scale(coeff)
            assert coproduct(monomial_element(mode, mono)) == expected


# -- characters -------------------------------------------------------------------

def test_character_values():
    chi1 = character(F3, 1)
    a_el = el(F3, "a")
    d_el = el(F3, "d")
    assert evaluate_character(chi1, a_el) == q_power(3, 1)
    assert evaluate_character(chi1, d_el) == q_power(3, -1)
    assert evaluate_character(chi1, el(F3, "b")).is_zero()
    # the top character is the counit
    chi3 = character(F3, 3)
    for mono in list(all_monomials(F3))[:9]:
        x = monomial_element(F3, mono)
        assert evaluate_character(chi3, x) == counit(x)


def test_character_multiplicative():
    chi = character(F3, 2)
    x = el(F3, "a", "a", "d")
    y = el(F3, "d", "a")
    assert evaluate_character(chi, multiply(x, y)) == evaluate_character(chi, x) * evaluate_character(chi, y)


def test_character_convolution_cyclic():
    assert convolve(character(F3, 1), character(F3, 2)).index == 3
    assert convolve(character(F3, 2), character(F3, 2)).index == 1
    for i in range(1, 7):
        for j in range(1, 7):
            assert convolve(character(FHAT3, i), character(FHAT3, j)).index == (i + j - 1) % 6 + 1


def test_character_restriction():
    assert len(characters(FHAT3)) == 6
    restricted = [restrict_character(chi).index for chi in characters(FHAT3)]
    assert sorted(set(restricted)) == [1, 2, 3]
    assert restricted.count(3) == 2  # kernel of order two
    with pytest.raises(ValueError):
        restrict_character(character(F3, 1))


def test_character_requires_quotient():
    with pytest.raises(ValueError):
        character(GEN3, 1)


# -- the faithful representation ---------------------------------------------------

def test_representation_generator_images():
    rep = FRepresentation(3)
    a_img = rep.of(el(F3, "a"))
    assert a_img == rep.j_matrix.kron(ScalarMatrix.identity(3, 3)).kron(ScalarMatrix.identity(3, 3))
    assert rep.of(from_word(F3, [("b", 3)])).is_zero()
    # nilpotent shift cubes to zero
    n3 = rep.n_matrix * rep.n_matrix * rep.n_matrix
    assert n3.is_zero()


def test_representation_is_homomorphism_on_samples():
    rep = FRepresentation(3)
    x = el(F3, "a", "b")
    y = el(F3, "d", "c", "a")
    assert rep.of(multiply(x, y)) == rep.of(x) * rep.of(y)


# -- coinvariance --------------------------------------------------------------------

def test_coinvariance_examples():
    alpha = from_word(GEN3, [("a", 3)])
    assert coinvariance_check(alpha, F3)
    assert not coinvariance_check(el(GEN3, "a"), F3)
    even = multiply(alpha, from_word(GEN3, [("b", 3)]))
    assert coinvariance_check(even, FHAT3)
    assert not coinvariance_check(alpha, FHAT3)
