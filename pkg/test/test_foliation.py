#!/usr/bin/env python3
"""
Tests de foliaciones: lugar singular, parte lineal, clasificación, índices
de Camacho–Sad y representaciones logarítmicas.
"""
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from folcalc.algebra import GaussianRational, I, MultiPoly
from folcalc.errors import NonInvariantAxisError, NotSingularError, PreconditionError, ZeroFormError
from folcalc.forms import OneForm
from folcalc.foliation import (
    Foliation,
    NonDegenerateSubtag,
    SingularPoint,
    SingularityTag,
    classify_linear_part,
    classify_singularity,
    cs_index,
    linear_part,
    logarithmic_representation,
    projective_line_index_sum,
    singular_locus,
)
from folcalc.foliation.foliation import format_matrix
from folcalc.parsing import parse_form, parse_polynomial
from folcalc.utils.logger import capture_warnings

ORIGIN = SingularPoint.at(0, 0)


def fol(text: str) -> Foliation:
    return Foliation.from_form(parse_form(text))


def matrix(a, b, c, d):
    q = GaussianRational.coerce
    return ((q(a), q(b)), (q(c), q(d)))


# ---- lugar singular ----

def test_singular_locus_examples():
    assert singular_locus(fol("x*dy - (1/2)*y*dx")) == [ORIGIN]
    assert singular_locus(fol("x*(x-1)*dy - y*dx")) == [ORIGIN, SingularPoint.at(1, 0)]


def test_common_factor_is_removed_with_warning():
    with capture_warnings() as warnings:
        foliation = fol("(x^2 - 1)*dy")
    assert foliation.omega == OneForm.dy()
    assert singular_locus(foliation) == []
    assert any("Factor común" in w for w in warnings)


def test_non_exact_points_are_reported_as_clusters():
    points = singular_locus(fol("(x^2 - 2)*dy - y*dx"))
    assert len(points) == 1
    cluster = points[0]
    assert not cluster.exact
    assert cluster.eliminant[0] == parse_polynomial("x^2 - 2")
    assert cluster.multiplicity == 2


def test_zero_form_is_not_a_foliation():
    with pytest.raises(ZeroFormError):
        Foliation.from_form(OneForm.zero())


curve_factors = st.sampled_from([
    "x", "y", "x + y", "x - y", "x - 2", "y + 1", "x + y - 1", "x*y - 1", "x^2 + y^2 - 5", "y - x^2",
])
coefficients = st.lists(curve_factors, min_size=1, max_size=2).map(
    lambda factors: parse_polynomial("*".join(f"({f})" for f in factors))
)


@settings(max_examples=40, deadline=None)
@given(coefficients, coefficients)
def test_singular_locus_matches_integer_grid(a, b):
    assume(a.gcd(b).is_constant())
    locus = singular_locus(Foliation.from_form(OneForm(a, b)))
    exact = {(p.x, p.y) for p in locus if p.exact}
    for x0, y0 in exact:
        assert a.evaluate(x0, y0).is_zero() and b.evaluate(x0, y0).is_zero()
    grid = {
        (GaussianRational(i), GaussianRational(j))
        for i in range(-3, 4)
        for j in range(-3, 4)
        if a.evaluate(i, j).is_zero() and b.evaluate(i, j).is_zero()
    }
    assert grid <= exact


# ---- parte lineal ----

def test_linear_part_examples():
    assert format_matrix(linear_part(fol("x*dy - (2/3)*y*dx"), ORIGIN)) == [["-1", "0"], ["0", "-2/3"]]
    assert format_matrix(linear_part(fol("y^2*dx - x*dy"), ORIGIN)) == [["1", "0"], ["0", "0"]]


def test_linear_part_at_regular_point():
    with pytest.raises(NotSingularError):
        linear_part(fol("dy"), ORIGIN)


# ---- clasificación ----

def test_classification_table():
    resonant = classify_linear_part(matrix(1, 0, 0, Fraction(-1, 2)))
    assert resonant.tag == SingularityTag.NON_DEGENERATE
    assert resonant.subtag == NonDegenerateSubtag.RESONANT_Q_MINUS
    assert resonant.ratio == Fraction(-1, 2)

    hyperbolic = classify_linear_part(matrix(1, 0, 0, I))
    assert hyperbolic.subtag == NonDegenerateSubtag.HYPERBOLIC
    assert hyperbolic.is_non_resonant

    irrational = classify_linear_part(matrix(1, 1, 1, 2))
    assert irrational.subtag == NonDegenerateSubtag.REAL_IRRATIONAL_NON_RESONANT
    assert irrational.t == 9


def test_degenerate_classes():
    assert classify_linear_part(matrix(0, 0, 0, 0)).tag == SingularityTag.ZERO_LINEAR_PART_REDUCIBLE
    assert classify_linear_part(matrix(0, 1, 0, 0)).tag == SingularityTag.NILPOTENT_REDUCIBLE
    assert classify_linear_part(matrix(1, 0, 0, 0)).tag == SingularityTag.SADDLE_NODE_CANDIDATE
    assert classify_linear_part(matrix(1, 0, 0, 1)).tag == SingularityTag.RADIAL_DICRITICAL


def test_positive_rational_ratio_needs_blowup():
    jordan = classify_linear_part(matrix(1, 1, 0, 1))
    assert jordan.subtag == NonDegenerateSubtag.RATIONAL_POSITIVE_REDUCIBLE
    assert jordan.ratio == 1
    assert jordan.needs_blowup

    node = classify_singularity(fol("x*dy - (5/7)*y*dx"), ORIGIN)
    assert node.ratio == Fraction(5, 7)
    assert node.needs_blowup


def test_classify_singularity_examples():
    saddle = classify_singularity(fol("x*dy - (1/2)*y*dx"), ORIGIN)
    assert saddle.label() == "NonDegenerate/RationalPositiveReducible"
    assert saddle.ratio == Fraction(1, 2)

    resonant = classify_singularity(fol("x*dy + (1/2)*y*dx"), ORIGIN)
    assert resonant.label() == "NonDegenerate/ResonantQMinus"
    assert resonant.ratio == Fraction(-1, 2)

    assert classify_singularity(fol("dy"), ORIGIN).tag == SingularityTag.REGULAR
    assert classify_singularity(fol("y^2*dx - x*dy"), ORIGIN).tag == SingularityTag.SADDLE_NODE_CANDIDATE


# ---- índices ----

def test_cs_index_examples():
    assert cs_index(fol("x*dy - (5/3)*y*dx"), ORIGIN, "y=0") == Fraction(5, 3)
    assert cs_index(fol("y^2*dx - x*dy"), ORIGIN, "y=0") == 0
    assert cs_index(fol("x*dy + (5/3 - 1)*y*dx"), ORIGIN, "y=0") == Fraction(-2, 3)
    assert cs_index(fol("x*dy - (5/3)*y*dx"), ORIGIN, "x=0") == Fraction(3, 5)


def test_cs_index_requires_invariant_axis():
    with pytest.raises(NonInvariantAxisError):
        cs_index(fol("x*dy - dx"), ORIGIN, "y=0")
    with pytest.raises(PreconditionError):
        cs_index(fol("x*dy - y*dx"), ORIGIN, "z=0")


@pytest.mark.parametrize("line, affine, infinity", [
    ("y=0", Fraction(5, 3), Fraction(-2, 3)),
    ("x=0", Fraction(3, 5), Fraction(2, 5)),
])
def test_projective_line_index_sum_is_one(line, affine, infinity):
    result = projective_line_index_sum(fol("x*dy - (5/3)*y*dx"), line)
    assert [c.value for c in result.contributions] == [affine]
    assert result.at_infinity == infinity
    assert result.total == 1


def test_index_sum_of_regular_line_comes_from_infinity():
    result = projective_line_index_sum(fol("dy"), "y=0")
    assert result.contributions == []
    assert result.at_infinity == 1
    assert result.total == 1


def test_index_sum_with_non_exact_poles():
    result = projective_line_index_sum(fol("(x^2 - 2)*dy - y*dx"), "y=0")
    assert len(result.contributions) == 1
    assert not result.contributions[0].exact
    assert result.total == 1


# ---- representación logarítmica ----

def test_logarithmic_representation_examples():
    rep = logarithmic_representation(fol("x*dy - (2/3)*y*dx"), [parse_polynomial("x"), parse_polynomial("y")])
    assert rep is not None
    assert list(rep.residues) == [Fraction(-2, 3), 1]

    rep = logarithmic_representation(fol("dy"), [parse_polynomial("y")])
    assert list(rep.residues) == [1]

    riccati = fol("x*dy - (y^2 + 1)*dx")
    assert logarithmic_representation(riccati, [parse_polynomial("x"), parse_polynomial("y")]) is None


def test_logarithmic_representation_rejects_bad_curves():
    F = fol("x*dy - y*dx")
    with pytest.raises(PreconditionError):
        logarithmic_representation(F, [])
    with pytest.raises(PreconditionError):
        logarithmic_representation(F, [MultiPoly.from_expr("x**2")])
    with pytest.raises(PreconditionError):
        logarithmic_representation(F, [parse_polynomial("x"), parse_polynomial("2*x")])
