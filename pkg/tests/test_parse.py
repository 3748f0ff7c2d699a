"""
Expression Syntax Tests for Field Elements

The CLI reads q, lambda lists and lambda_1 as text: integers, fractions, z(N)^k for
zeta_N^k and L for the indeterminate, combined with + - * / ^ and parentheses. These
tests pin down what parses to what, that canonical printing parses back to the same
value, and that malformed input reports the position of the problem.
"""

from fractions import Fraction

import pytest

from qpascal.errors import ConductorMismatch, DivisionByZero, ExprSyntaxError
from qpascal.fields import Cyc, Poly, RatFunc, parse_element, parse_list, parse_poly


def test_parse_cyclotomic_values():
    assert parse_element("z(12)^5") == Cyc.zeta(12, 5)
    assert parse_element("1/2 + z(4)/2") == Fraction(1, 2) + Cyc.zeta(4) / 2
    assert parse_element("-z(3)^2") == -(Cyc.zeta(3) ** 2)
    assert parse_element("z(9)^(-1)") == Cyc.zeta(9, 8)
    assert parse_element("2^-2") == Fraction(1, 4)


def test_parse_rational_functions_and_constant_collapse():
    """
    Expressions in L give rational functions in canonical form; an expression in L
    that cancels to a constant comes back as a plain field element.
    """
    L = RatFunc.variable()
    assert parse_element("(L^2 - 1)/(L - 1)") == L + 1
    value = parse_element("L/L")
    assert isinstance(value, Cyc)
    assert value == 1
    assert isinstance(parse_element("L^2 + z(3)"), RatFunc)


@pytest.mark.parametrize(
    "value",
    [
        Cyc.zeta(12, 5) + Fraction(3, 7),
        Cyc.zeta(12, 3) * Fraction(-1, 2),
        RatFunc.variable() ** 2 * (1 + Cyc.zeta(3)) - Fraction(1, 2),
        (RatFunc.variable() - Cyc.zeta(3)) / (RatFunc.variable() ** 3 + 2),
    ],
)
def test_canonical_strings_parse_back(value):
    assert parse_element(str(value)) == value


def test_syntax_errors_carry_positions():
    with pytest.raises(ExprSyntaxError) as exc_info:
        parse_element("1 + ")
    assert exc_info.value.position == 4

    with pytest.raises(ExprSyntaxError) as exc_info:
        parse_element("2 $ 3")
    assert exc_info.value.position == 2

    with pytest.raises(ExprSyntaxError):
        parse_element("")

    with pytest.raises(ExprSyntaxError):
        parse_element("z(0)")


def test_list_errors_point_into_the_whole_text():
    assert parse_list("1, z(3), L") == [1, Cyc.zeta(3), RatFunc.variable()]
    with pytest.raises(ExprSyntaxError) as exc_info:
        parse_list("1, 2, 3 +")
    assert exc_info.value.position == 9
    assert exc_info.value.text == "1, 2, 3 +"


def test_division_by_zero_is_reported():
    with pytest.raises(DivisionByZero):
        parse_element("1/(z(3) - z(3))")
    with pytest.raises(DivisionByZero):
        parse_element("(1 - 1)^-1")


def test_conductor_hint_embeds_or_rejects():
    assert parse_element("z(3)", conductor=12).conductor == 12
    assert parse_element("2", conductor=9).conductor == 9
    with pytest.raises(ConductorMismatch):
        parse_element("z(5)", conductor=12)


def test_parse_poly():
    p = parse_poly("L^2 + 1")
    assert p == Poly([1, 0, 1], "L")
    assert parse_poly("3").degree == 0
    with pytest.raises(ExprSyntaxError):
        parse_poly("1/L")
