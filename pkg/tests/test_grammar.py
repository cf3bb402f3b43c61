from fractions import Fraction

import pytest

from pfaffian.errors import ParseError
from pfaffian.exterior import CScalar, KForm, VarSpace
from pfaffian.grammar import (
    FormExpr,
    format_curve,
    parse_curve,
    parse_field,
    parse_form,
    parse_point,
    parse_poly,
    parse_scalar,
    parse_vars,
)
from pfaffian.planner import plan_single_curve_sym

from corpus import CORPUS

PARSERS = {"form": parse_form, "poly": parse_poly, "field": parse_field}


@pytest.mark.parametrize("kind,text,variables", CORPUS)
def test_round_trip(kind, text, variables):
    parse = PARSERS[kind]
    value = parse(text, variables)
    printed = str(value)
    again = parse(printed, variables)
    assert again == value
    assert str(again) == printed


def test_corpus_size():
    assert len(CORPUS) >= 50


class TestForms:
    def test_contact_form(self):
        w = parse_form("x*dy + dz", "x,y,z")
        assert str(w) == "x*dy + dz" and w.degree == 1

    def test_sign_normalization(self):
        assert parse_form("dy^dx", "x,y") == -parse_form("dx^dy", "x,y")

    def test_zero_form_keeps_degree(self):
        w = parse_form("0*dx", "x,y,z")
        assert w.is_zero() and w.degree == 1
        assert w == KForm.zero(VarSpace("x,y,z"), 1)

    def test_complex_literal(self):
        w = parse_form("(1/2 + 3i)*dx", "x")
        assert w.coefficient((0,)).constant_term() == CScalar(Fraction(1, 2), 3)

    def test_form_expr(self):
        e = FormExpr.parse("x*dy - y*dx - dz", "x,y,z")
        assert e.source == "x*dy - y*dx - dz" and str(e) == "-y*dx + x*dy - dz"

    def test_power_versus_wedge(self):
        assert parse_poly("x^2", "x") == parse_poly("x*x", "x")
        assert parse_form("dx^dy", "x,y").degree == 2


class TestErrors:
    def test_unknown_variable(self):
        with pytest.raises(ParseError) as err:
            parse_form("x*dw", "x,y,z")
        assert err.value.line == 1 and err.value.column == 3

    def test_column_of_bad_token(self):
        with pytest.raises(ParseError) as err:
            parse_poly("x + $", "x")
        assert err.value.column == 5

    def test_malformed_rational(self):
        with pytest.raises(ParseError):
            parse_scalar("1/0")
        with pytest.raises(ParseError):
            parse_scalar("1/")

    def test_mixed_degrees(self):
        with pytest.raises(ParseError):
            parse_form("dx + dx^dy", "x,y")

    def test_product_of_forms(self):
        with pytest.raises(ParseError):
            parse_form("dx*dy", "x,y")

    def test_unbalanced_parenthesis(self):
        with pytest.raises(ParseError):
            parse_poly("(x + 1", "x")

    def test_reserved_names(self):
        with pytest.raises(ParseError):
            parse_vars("x,i")
        with pytest.raises(ParseError):
            parse_vars("x,dx")
        with pytest.raises(ParseError):
            parse_vars("x,x")

    def test_covector_in_polynomial(self):
        with pytest.raises(ParseError):
            parse_poly("x*dy", "x,y")

    def test_field_requires_field_tokens(self):
        with pytest.raises(ParseError):
            parse_field("x", "x")

    def test_message_carries_position(self):
        with pytest.raises(ParseError, match=r"line 1, column \d+"):
            parse_form("x**dy", "x,y")


class TestPoints:
    def test_point(self):
        assert parse_point("1, 1/2 + 3i, 0") == (1, CScalar(Fraction(1, 2), 3), 0)

    def test_negative(self):
        assert parse_point("-1,-2/3,-i") == (-1, Fraction(-2, 3), CScalar(0, -1))

    def test_empty_coordinate(self):
        with pytest.raises(ParseError) as err:
            parse_point("1,,2")
        assert err.value.column == 3


CUBIC = """\
# the cubic
vars: t
x = t
y = t^2
z = 1/3*t^3
t_start=0
t_end=1
"""


class TestCurveFiles:
    def test_parse(self):
        parsed = parse_curve(CUBIC, "x,y,z")
        assert str(parsed.map.components[2]) == "1/3*t^3"
        assert parsed.t_start == 0 and parsed.t_end == 1

    def test_defaults(self):
        parsed = parse_curve("vars: t\nx = 1\ny = 2\nz = 3\n", "x,y,z")
        assert (parsed.t_start, parsed.t_end) == (0, 1)

    def test_format_round_trip(self):
        c = plan_single_curve_sym((2, 3, 1))
        text = format_curve(c.map, c.t_start, c.t_end)
        parsed = parse_curve(text, "x,y,z")
        assert parsed.map == c.map and parsed.t_end == 1

    def test_missing_header(self):
        with pytest.raises(ParseError) as err:
            parse_curve("x = t\n", "x,y,z")
        assert err.value.line == 1

    def test_wrong_coordinate_order(self):
        with pytest.raises(ParseError) as err:
            parse_curve("vars: t\ny = t\nx = t\nz = t\n", "x,y,z")
        assert err.value.line == 2

    def test_error_position_in_expression(self):
        with pytest.raises(ParseError) as err:
            parse_curve("vars: t\nx = t\ny = t + $\nz = t\n", "x,y,z")
        assert err.value.line == 3 and err.value.column == 9

    def test_missing_coordinates(self):
        with pytest.raises(ParseError):
            parse_curve("vars: t\nx = t\n", "x,y,z")
