#!/usr/bin/env python3
"""
Tests de la aritmética exacta: Q(i), polinomios, funciones racionales y
sistemas lineales.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from folcalc.algebra import (
    GaussianRational,
    I,
    MultiPoly,
    RationalFunction,
    X_POLY,
    Y_POLY,
    gaussian_sqrt,
    gq_arith,
    is_rational_square,
    nullspace,
    rank,
    ratfun_arith,
    residue_at,
    resultant,
    roots_gaussian,
    solve_linear,
    total_residue,
)
from folcalc.errors import AlgebraError, DivisionByZeroError
from folcalc.forms.calculus import differential, is_closed
from folcalc.parsing import parse_function, parse_polynomial

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)
nonzero_gaussians = gaussians.filter(lambda z: not z.is_zero())


def rf(text: str) -> RationalFunction:
    return RationalFunction.from_expr(text)


def poly(text: str) -> MultiPoly:
    return MultiPoly.from_expr(text)


# ---- Q(i) ----

def test_gaussian_field_examples():
    assert GaussianRational(1, 1) * GaussianRational(1, -1) == 2
    assert gq_arith(1, I, "div") == -I
    assert GaussianRational(Fraction(3, 2), Fraction(1, 3)) + Fraction(1, 2) == GaussianRational(2, Fraction(1, 3))


def test_gaussian_printing_is_parser_syntax():
    assert str(GaussianRational(Fraction(3, 2), Fraction(1, 3))) == "3/2+1/3*i"
    assert str(-I) == "-i"
    assert str(GaussianRational(2)) == "2"


def test_gaussian_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        gq_arith(1, 0, "div")


def test_gaussian_rejects_floats():
    with pytest.raises(AlgebraError):
        GaussianRational.coerce(0.5)


def test_rational_square():
    assert is_rational_square(Fraction(9, 4)) == Fraction(3, 2)
    assert is_rational_square(2) is None
    t = Fraction(9, 2)
    assert is_rational_square(t * t - 4 * t) == Fraction(3, 2)


def test_gaussian_sqrt():
    assert gaussian_sqrt(-4) == GaussianRational(0, 2)
    assert gaussian_sqrt(GaussianRational(0, 2)) == GaussianRational(1, 1)
    assert gaussian_sqrt(GaussianRational(3, 4)) == GaussianRational(2, 1)
    assert gaussian_sqrt(2) is None


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(gaussians, nonzero_gaussians)
def test_gaussian_division_inverts_product(a, b):
    assert (a * b) / b == a


# ---- polinomios ----

def test_resultant_examples():
    assert resultant(poly("y**2 - x"), poly("y - 1"), "y") == poly("1 - x")
    assert resultant(poly("y - x"), poly("y + x"), "y") == poly("2*x")
    assert resultant(poly("y"), poly("x"), "y") == poly("x")


def test_roots_over_gaussian_rationals():
    roots, clusters = roots_gaussian(poly("x**2 + 1"), "x")
    assert {r for r, _ in roots} == {I, -I}
    assert clusters == []

    roots, clusters = roots_gaussian(poly("x**2 - 2"), "x")
    assert roots == []
    assert clusters == [(poly("x**2 - 2"), 1)]


def test_polynomial_helpers():
    p = poly("x**2*y + 3*y - 2")
    assert p.degree_in("x") == 2
    assert p.coefficient_in("y", 1) == poly("x**2 + 3")
    assert p.evaluate(1, 1) == 2
    assert poly("x**3*y**2 + x*y**5").min_degree_in("y") == 2
    assert str(poly("x**2*y - y/2")) == "x^2*y - 1/2*y"


def test_parsed_polynomials_expose_exact_coefficients():
    assert parse_polynomial("x").terms() == {(1, 0): 1}
    p = parse_polynomial("(1 + i)*x^2*y - 3/2")
    assert p.terms() == {(2, 1): GaussianRational(1, 1), (0, 0): Fraction(-3, 2)}
    assert p.leading_coefficient() == GaussianRational(1, 1)
    assert parse_polynomial("2^3") == MultiPoly.constant(8)
    assert parse_function("(1/x)^2") == rf("1/x**2")
    assert MultiPoly.from_terms({(1, 0): 0, (0, 0): 0}).is_zero()


def test_residues():
    assert total_residue(poly("x"), poly("x**2 + 1"), poly("x**2 + 1")) == 1
    assert residue_at(poly("1"), poly("x**2 - x"), 1) == 1
    assert residue_at(poly("x + 2"), poly("(x - 1)**2"), 1) == 1
    assert residue_at(poly("1"), poly("2*x - 2*i"), I) == Fraction(1, 2)


def test_gcd_is_monic():
    assert poly("2*x**2 - 2").gcd(poly("3*x - 3")) == poly("x - 1")


def test_exact_division_failure():
    with pytest.raises(AlgebraError):
        poly("x + 1").exquo(poly("x"))


# ---- funciones racionales ----

def test_rational_function_normalization():
    assert rf("(x/y) * (y/x)") == 1
    assert rf("(x**2 - 1)/(x - 1)") == rf("x + 1")
    assert ratfun_arith(rf("1/x"), rf("1/y"), "add") == rf("(x + y)/(x*y)")
    assert rf("2*x/(2*y)").den == poly("y")


def test_partial_derivatives():
    assert rf("x**2*y").diff("x") == rf("2*x*y")
    assert rf("1/y").diff("y") == rf("-1/y**2")
    assert rf("y/x").diff("x") == rf("-y/x**2")


def test_compose_and_evaluate():
    f = rf("x/(y + 1)")
    assert f.compose(rf("x*y"), rf("y")) == rf("x*y/(y + 1)")
    assert f.evaluate(2, 1) == 1
    with pytest.raises(DivisionByZeroError):
        f.evaluate(1, -1)


def test_zero_denominator_rejected():
    with pytest.raises(DivisionByZeroError):
        RationalFunction(1, 0)


small_terms = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-5, 5),
    max_size=4,
)


@settings(max_examples=25, deadline=None)
@given(small_terms, small_terms.filter(lambda t: any(t.values())))
def test_d_of_df_is_zero(num_terms, den_terms):
    den = MultiPoly.from_terms(den_terms)
    f = RationalFunction(MultiPoly.from_terms(num_terms), den)
    assert is_closed(differential(f))


rational_functions = st.builds(
    RationalFunction,
    small_terms.map(MultiPoly.from_terms),
    small_terms.filter(lambda t: any(t.values())).map(MultiPoly.from_terms),
)


@settings(max_examples=30, deadline=None)
@given(rational_functions, rational_functions, rational_functions)
def test_rational_function_field_laws(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=30, deadline=None)
@given(rational_functions)
def test_normalization_is_idempotent(f):
    assert RationalFunction(f.num, f.den) == f
    assert f.den.leading_coefficient() == 1
    assert f.num.gcd(f.den).is_constant()
    if not f.is_zero():
        assert (f / f) == 1


small_gaussians = st.builds(
    GaussianRational,
    st.integers(-3, 3),
    st.integers(-3, 3),
)
# raíces de la forma r + s·x, coeficientes en Q(i)[x]
linear_roots = st.lists(st.tuples(small_gaussians, small_gaussians), min_size=1, max_size=3)


def from_roots(lead: GaussianRational, roots) -> MultiPoly:
    p = MultiPoly.constant(lead)
    for r, s in roots:
        p = p * (Y_POLY - MultiPoly.constant(r) - X_POLY.scale(s))
    return p


@settings(max_examples=30, deadline=None)
@given(nonzero_gaussians, linear_roots, nonzero_gaussians, linear_roots)
def test_resultant_is_product_of_root_differences(lead_p, roots_p, lead_q, roots_q):
    p, q = from_roots(lead_p, roots_p), from_roots(lead_q, roots_q)
    expected = MultiPoly.constant(lead_p ** len(roots_q) * lead_q ** len(roots_p))
    for r, s in roots_p:
        for u, v in roots_q:
            expected = expected * (MultiPoly.constant(r - u) + X_POLY.scale(s - v))
    assert resultant(p, q, "y") == expected


# ---- álgebra lineal ----

def test_linear_algebra():
    assert nullspace([[1, -1]]) == [[1, 1]]
    assert solve_linear([[1, 1], [1, -1]], [2, 0]) == [1, 1]
    assert solve_linear([[1, 1], [1, 1]], [1, 2]) is None
    assert rank([[1, 2], [2, 4]]) == 1
    assert nullspace([[1, I], [I, -1]]) == [[-I, 1]]
