import pytest
from hypothesis import given, strategies as st

from slq2.algebra import AlgebraMode, NormalMonomial, from_word, monomial_element, zero
from slq2.cyclo import CyclotomicScalar, q_half_power, q_power
from slq2.parsing import (
    ParseError,
    element_from_json,
    element_to_json,
    element_to_latex,
    element_to_string,
    parse_element,
    parse_scalar,
    scalar_to_string,
)

GEN3 = AlgebraMode.generic(3)


def test_parse_scalar_basics():
    assert parse_scalar("1 - q^2 + (1/2)q", 3) == CyclotomicScalar.from_coeff_list(3, ["1", "1/2", "-1"])
    assert parse_scalar("q^(-1)", 3) == q_power(3, -1)
    assert parse_scalar("2q^2", 3) == q_power(3, 2) * 2
    assert parse_scalar("-3/2", 5) == CyclotomicScalar.from_coeff_list(5, ["-3/2"])
    assert parse_scalar("q(1+q)", 3) == q_power(3, 1) * (1 + q_power(3, 1))


def test_parse_half_powers():
    assert parse_scalar("q^(1/2)", 3) == q_half_power(3, 1)
    assert parse_scalar("q^(-3/2)", 5) == q_half_power(5, -3)
    with pytest.raises(ParseError):
        parse_scalar("q^(1/3)", 3)


def test_parse_element_words():
    x = parse_element("a^2 b c^3", GEN3)
    assert x == from_word(GEN3, [("a", 2), ("b", 1), ("c", 3)])
    y = parse_element("1 + q^(-1) b c", GEN3)
    assert y == from_word(GEN3, [], 1) + from_word(GEN3, [("b", 1), ("c", 1)], q_power(3, -1))


def test_parse_element_normalizes():
    assert parse_element("d a", GEN3) == from_word(GEN3, [("d", 1), ("a", 1)])
    assert parse_element("b a", GEN3) == from_word(GEN3, [("a", 1), ("b", 1)], q_power(3, -1))


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_element("a + $", GEN3)
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse_element("", GEN3)
    with pytest.raises(ParseError):
        parse_element("a^-1", GEN3)


def scalars(ell=3):
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.lists(coeff, min_size=2, max_size=2).map(
        lambda cs: CyclotomicScalar.from_coeff_list(ell, cs)
    )


def elements(mode=GEN3):
    mono = st.tuples(
        st.integers(min_value=-2, max_value=3),
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=0, max_value=2),
    ).map(lambda t: NormalMonomial(*t))

    def build(pairs):
        out = zero(mode)
        for m, c in pairs:
            out = out + monomial_element(mode, m, c)
        return out

    return st.lists(st.tuples(mono, scalars(mode.ell)), min_size=0, max_size=4).map(build)


@given(x=scalars())
def test_scalar_round_trip(x):
    assert parse_scalar(scalar_to_string(x), 3) == x


@given(x=elements())
def test_element_round_trip(x):
    assert parse_element(element_to_string(x), GEN3) == x


@given(x=elements())
def test_element_json_round_trip(x):
    assert element_from_json(element_to_json(x)) == x


def test_latex_emission():
    x = from_word(GEN3, [("a", 2), ("b", 1)], q_power(3, 1))
    assert element_to_latex(x) == "qa^{2}b"
    y = from_word(GEN3, [("a", 2), ("b", 1)], q_power(3, 2))
    assert element_to_latex(y) == "(-1 - q)a^{2}b"  # q^2 in reduced form
