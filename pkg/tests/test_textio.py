"""Deterministic rendering and the round-trip parser."""
import pytest

from singmin.exact import ParseError, RationalExpr, Var, parse, render

K = RationalExpr.variable(Var.K1)
C = RationalExpr.variable(Var.C)
AL = RationalExpr.variable(Var.ALPHA)


def test_render_sorted_descending():
    e = C + K ** 3 + AL * K
    assert render(e) == "k1^3 + alpha*k1 + c"


def test_render_rational():
    e = (K + 1) / (2 * C)
    assert render(e) == "(k1 + 1)/(2*c)"


def test_render_fractional_coefficient_roundtrip():
    e = 3 * K / 2 - C / 5
    assert parse(render(e)) == e


@pytest.mark.parametrize(
    "text",
    [
        "0",
        "1",
        "-7",
        "k1",
        "(k1^2 - c)/(alpha*k1 + 1)",
        "3*u1^2 + (c/k1)*u2^2 + k1",
        "-(w - 1)^3/(k1*(k1 - c))",
        "2^10",
    ],
)
def test_roundtrip(text):
    e = parse(text)
    assert parse(render(e)) == e


def test_parse_precedence():
    assert parse("1 + 2*k1^2") == 1 + 2 * K ** 2
    assert parse("-k1^2") == -(K ** 2)
    assert parse("1/2*k1") == K / 2


@pytest.mark.parametrize("bad", ["", "k1 +", "qq", "(k1", "k1^c", "1..2", "k1 @ c"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_render_is_deterministic():
    e = (AL * K - C) ** 3 / (K ** 2 - C)
    assert render(e) == render(parse(render(e)))
