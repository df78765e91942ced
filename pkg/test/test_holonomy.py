#!/usr/bin/env python3
"""
Tests de transformaciones de Möbius, holonomía numérica y resonancia.
"""
import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from folcalc.algebra import GaussianRational
from folcalc.errors import IntegrationError, NonInvariantAxisError, PreconditionError
from folcalc.foliation import Foliation
from folcalc.holonomy import (
    INFINITY,
    LoopSpec,
    MobiusMap,
    fixed_points,
    holonomy_multiplier,
    is_elementary,
    linearize_h1,
    mobius_ops,
    resonance_integral,
)
from folcalc.parsing import parse_form

LOOP = LoopSpec(radius=1.0, seeds=(1e-3, 2e-3), steps=256)


def fol(text: str) -> Foliation:
    return Foliation.from_form(parse_form(text))


def exact(a, b, c, d) -> MobiusMap:
    return MobiusMap.exact_map(a, b, c, d)


# ---- Möbius ----

def test_inverse_and_composition():
    f = exact(2, 1, 1, 1)
    assert f.inverse() == exact(1, -1, -1, 2)
    assert f.compose(f.inverse()).is_identity()
    assert MobiusMap.numeric(2, 1, 1, 1).inverse().equals(MobiusMap.numeric(1, -1, -1, 2))
    assert exact(1, 1, 0, 1).compose(exact(2, 0, 0, 1)) == exact(2, 1, 0, 1)


def test_exact_and_numeric_agree():
    f, g = exact(2, 1, 1, 1), exact(1, 0, 3, 1)
    numeric = f.to_numeric().compose(g.to_numeric())
    assert numeric.equals(f.compose(g), tol=1e-10)


def test_commutator():
    scale, shift = exact(2, 0, 0, 1), exact(1, 1, 0, 1)
    assert mobius_ops(scale, shift, "commutator") == shift
    assert mobius_ops(scale, exact(3, 0, 0, 1), "commutator").is_identity()
    with pytest.raises(PreconditionError):
        mobius_ops(scale, shift, "conjugate")


def test_degenerate_map_rejected():
    with pytest.raises(PreconditionError):
        exact(1, 2, 2, 4)
    with pytest.raises(PreconditionError):
        MobiusMap.numeric(1, 1, 1, 1)


def test_fixed_points():
    assert fixed_points(exact(2, 0, 0, 1)) == [0, INFINITY]
    assert fixed_points(exact(1, 1, 0, 1)) == [INFINITY]
    assert fixed_points(exact(0, 1, 1, 0)) == [-1, 1]
    with pytest.raises(PreconditionError):
        fixed_points(MobiusMap.identity(exact=True))


def test_action_on_the_sphere():
    inversion = exact(0, 1, 1, 0)
    assert inversion(INFINITY) == 0
    assert inversion(0) is INFINITY
    assert cmath.isclose(MobiusMap.numeric(2, 0, 0, 1)(1 + 1j), 2 + 2j)


def test_is_elementary():
    ok, witness = is_elementary([exact(2, 0, 0, 1), exact(1, 1, 0, 1)])
    assert ok
    assert witness == [INFINITY]

    ok, witness = is_elementary([exact(2, 0, 0, 1), exact(0, 1, 1, 0)])
    assert ok
    assert witness == [0, INFINITY]

    ok, witness = is_elementary([exact(0, 1, 1, 0), exact(0, 4, 1, 0)])
    assert ok
    assert witness == [0, INFINITY]

    ok, witness = is_elementary([exact(2, 0, 0, 1), exact(1, 1, 1, 2)])
    assert not ok
    assert witness == []

    with pytest.raises(PreconditionError):
        is_elementary([])


entries = st.integers(-3, 3)
exact_maps = st.tuples(entries, entries, entries, entries).filter(
    lambda m: m[0] * m[3] != m[1] * m[2]
).map(lambda m: exact(*m))
GRID = [INFINITY] + [GaussianRational(a, b) for a in range(-3, 4) for b in range(-3, 4)]


def image(f: MobiusMap, z):
    if z is INFINITY or isinstance(z, GaussianRational):
        return f(z)
    return f.to_numeric()(z)


def close(z, w) -> bool:
    if z is INFINITY or w is INFINITY:
        return z is w
    return abs(complex(z) - complex(w)) < 1e-9


def small_orbit(z, gens):
    """Órbita de z si tiene a lo sumo dos puntos, o None."""
    moves = list(gens) + [f.inverse() for f in gens]
    orbit, frontier = [z], [z]
    while frontier:
        p = frontier.pop()
        for f in moves:
            q = f(p)
            if not any(close(q, w) for w in orbit):
                orbit.append(q)
                if len(orbit) > 2:
                    return None
                frontier.append(q)
    return orbit


@settings(max_examples=50, deadline=None)
@given(exact_maps, exact_maps, exact_maps)
def test_mobius_composition_is_associative(f, g, h):
    assert f.compose(g).compose(h) == f.compose(g.compose(h))
    for z in (INFINITY, GaussianRational(0), GaussianRational(1, 2)):
        assert close(f.compose(g)(z), f(g(z)))


@settings(max_examples=200, deadline=None)
@given(st.lists(exact_maps, min_size=1, max_size=3))
def test_is_elementary_agrees_with_small_orbits(gens):
    ok, witness = is_elementary(gens)
    if ok:
        assert 1 <= len(witness) <= 2
        for f in gens:
            for z in witness:
                assert any(close(image(f, z), w) for w in witness)
    if any(small_orbit(z, gens) for z in GRID):
        assert ok


def test_linearize_h1():
    h = exact(2, 0, 1, 1)
    phi, linear = linearize_h1(2, 1)
    assert phi == exact(1, 0, -1, 1)
    assert phi.compose(h) == linear.compose(phi)
    with pytest.raises(PreconditionError):
        linearize_h1(1, 3)


# ---- holonomía ----

@pytest.mark.parametrize("text, lam", [
    ("x*dy - i*y*dx", 1j),
    ("x*dy + (1/2)*y*dx", -0.5),
    ("x*dy - (5/7)*y*dx", 5 / 7),
    ("x*dy - (1+i)*y*dx", 1 + 1j),
])
def test_multiplier_of_linear_models(text, lam):
    expected = cmath.exp(2j * math.pi * lam)
    estimate = holonomy_multiplier(fol(text), LOOP)
    assert abs(estimate.multiplier - expected) < 1e-6 * abs(expected)


def test_multiplier_with_fixed_step_rk4():
    estimate = holonomy_multiplier(fol("x*dy + (1/2)*y*dx"), LOOP, method="RK4")
    assert abs(estimate.multiplier + 1) < 1e-6
    assert estimate.method == "RK4"


def test_rk4_error_decreases_with_fourth_order():
    errors = []
    for steps in (64, 128):
        loop = LoopSpec(radius=1.0, seeds=(1e-3, 2e-3), steps=steps)
        estimate = holonomy_multiplier(fol("x*dy + (1/2)*y*dx"), loop, method="RK4")
        errors.append(abs(estimate.multiplier + 1))
    assert 12 < errors[0] / errors[1] < 20


def test_multiplier_along_vertical_axis():
    loop = LoopSpec(axis="x=0", radius=1.0, seeds=(1e-3, 2e-3), steps=256)
    estimate = holonomy_multiplier(fol("y*dx + 1/2*x*dy"), loop)
    assert abs(estimate.multiplier + 1) < 1e-6


def test_regular_leaf_has_trivial_holonomy():
    estimate = holonomy_multiplier(fol("dy"), LOOP)
    assert abs(estimate.multiplier - 1) < 1e-10


def test_holonomy_failures():
    with pytest.raises(NonInvariantAxisError):
        holonomy_multiplier(fol("dy - dx"), LOOP)
    with pytest.raises(IntegrationError):
        holonomy_multiplier(fol("x*(x - 1)*dy - y*dx"), LOOP)
    with pytest.raises(PreconditionError):
        holonomy_multiplier(fol("x*dy - y*dx"), LOOP, method="Euler")


def test_loop_spec_validation():
    with pytest.raises(PreconditionError):
        LoopSpec(seeds=(1e-3,))
    with pytest.raises(PreconditionError):
        LoopSpec(seeds=(1e-3, 1e-3))
    with pytest.raises(PreconditionError):
        LoopSpec(seeds=(1e-3, 2e-3), steps=10)
    with pytest.raises(PreconditionError):
        LoopSpec(axis="z=0", seeds=(1e-3, 2e-3))
    assert len(LoopSpec.from_config().seeds) >= 2


# ---- resonancia ----

def test_resonance_verdicts():
    resonant = resonance_integral(fol("x*dy + (1/2)*y*dx"), LOOP)
    assert resonant.verdict == "resonant"
    assert resonant.order == 2

    assert resonance_integral(fol("x*dy - i*y*dx"), LOOP).verdict == "non_resonant"
    assert resonance_integral(fol("dy"), LOOP).verdict == "regular"
