#!/usr/bin/env python3
"""
Tests del parser de expresiones y de los documentos INI.
"""
from fractions import Fraction

import pytest

from folcalc.algebra import GaussianRational, MultiPoly, RationalFunction
from folcalc.errors import DocumentError, ParseError
from folcalc.forms import OneForm
from folcalc.parsing import load_document, parse_document, parse_expression, parse_form, parse_function, parse_polynomial

rf = RationalFunction.from_expr

FULL_DOCUMENT = """\
# ejemplo completo
[foliation]
omega = "x*dy - (1/2)*y*dx"

[triple]
omega = "dy - (1/2*y^2 - x)*dx"
eta = "y*dx"
xi = "dx"

[map]
first = "x"
second = "x*y"

[curves]
f1 = "x"
f2 = "y"

[params]
R = "x"
"""


# ---- expresiones ----

def test_parse_form_example():
    assert parse_form("x*dy - (1/2)*y*dx") == OneForm(rf("-y/2"), rf("x"))
    assert parse_form("dy/y - (2/3)*dx/x") == OneForm(rf("-2/(3*x)"), rf("1/y"))


def test_parse_gaussian_coefficients():
    p = parse_polynomial("(3/2+1/3*i)*x^2*y")
    assert p.terms() == {(2, 1): GaussianRational(Fraction(3, 2), Fraction(1, 3))}


def test_parse_expression_returns_function_or_form():
    assert isinstance(parse_expression("x^2 + 1"), RationalFunction)
    assert isinstance(parse_expression("x*dx"), OneForm)
    assert parse_function("(x^2 - 1)/(x - 1)") == rf("x + 1")


def test_unicode_minus_is_accepted():
    assert parse_form("x*dy − y*dx") == parse_form("x*dy - y*dx")


def test_zero_is_the_zero_form():
    assert parse_form("0").is_zero()
    assert parse_form("x - x").is_zero()


@pytest.mark.parametrize("text, column", [
    ("dx*dy", 3),
    ("dx^2", 3),
    ("x/dx", 2),
])
def test_nonlinear_differentials_rejected(text, column):
    with pytest.raises(ParseError, match="nonlinear differential") as info:
        parse_expression(text)
    assert info.value.column == column
    assert info.value.line == 1


def test_parse_error_positions():
    with pytest.raises(ParseError, match="Identificador desconocido") as info:
        parse_expression("2*z")
    assert info.value.column == 3

    with pytest.raises(ParseError) as info:
        parse_expression("x + * y")
    assert info.value.column == 5
    assert "(línea 1, columna 5)" in str(info.value)


@pytest.mark.parametrize("text", ["1/0", "x + dx", "", "(x + 1", "x^y", "3.5*x", "x $ y", "x^300"])
def test_invalid_expressions(text):
    with pytest.raises(ParseError):
        parse_expression(text)


def test_division_by_zero_message():
    with pytest.raises(ParseError, match="División por cero"):
        parse_expression("1/0")


def test_kind_mismatch():
    with pytest.raises(ParseError):
        parse_function("dx")
    with pytest.raises(ParseError):
        parse_form("x")
    with pytest.raises(ParseError):
        parse_polynomial("1/x")


@pytest.mark.parametrize("text", [
    "(x + y)^65",
    "((x + y)^16)^16",
    "(1/(x - y))^40 * (1/(x - y))^40",
    "x^40 * y^40",
    "x^40/y^40 + y^40/x^40",
    "((2^256)^256)^256",
    "((1/3)^200)^100",
])
def test_oversized_expressions_are_rejected(text):
    with pytest.raises(ParseError):
        parse_expression(text)


def test_expressions_at_the_degree_bound():
    assert parse_polynomial("(x + y)^64").total_degree() == 64
    assert parse_polynomial("((x + y)^8)^8").total_degree() == 64
    assert parse_function("2^256") == RationalFunction(2**256)


# ---- documentos ----

def test_full_document():
    doc = parse_document(FULL_DOCUMENT, source="ejemplo.ini")
    assert doc.omega == parse_form("x*dy - (1/2)*y*dx")
    assert doc.triple.xi == OneForm.dx()
    assert str(doc.map.second) == "x*y"
    assert [name for name, _ in doc.curves] == ["f1", "f2"]
    assert doc.curves[1][1] == MultiPoly.variable("y")
    assert doc.param("R") == "x"
    assert doc.param_function("R") == rf("x")
    assert doc.param_function("g") is None
    assert doc.echo()["foliation"] == {"omega": "x*dy - (1/2)*y*dx"}
    assert str(doc.foliation()) != ""


def test_parse_error_points_into_the_file():
    with pytest.raises(ParseError) as info:
        parse_document('[foliation]\nomega = "dx*dy"', source="malo.ini")
    assert info.value.line == 2
    assert info.value.column == 12
    assert info.value.source == "malo.ini"


@pytest.mark.parametrize("text", [
    '[surface]\nomega = "dx"',
    '[foliation]\nomega = "dx"\nextra = "dy"',
    '[triple]\nomega = "dx"\neta = "0"',
    "omega = dx",
])
def test_invalid_documents(text):
    with pytest.raises(DocumentError):
        parse_document(text)


def test_missing_sections_are_reported():
    doc = parse_document('[params]\nR = "x"')
    with pytest.raises(DocumentError):
        doc.foliation()
    with pytest.raises(DocumentError):
        doc.require_triple()


def test_load_document(write_doc):
    path = write_doc(FULL_DOCUMENT)
    assert load_document(path).source == path
    with pytest.raises(DocumentError):
        load_document(path + ".missing")
