# folcalc/resolution/blowup.py
"""
Blow-up cuadrático de un punto en sus dos cartas.

Carta 1, coordenadas (x, t): (x, y) = (x, t·x); el divisor es {x = 0}.
Carta 2, coordenadas (s, y): (x, y) = (s·y, y); el divisor es {y = 0}.
Internamente t y s viven en las variables y, x respectivamente.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from folcalc.algebra.gaussian import GaussianRational
from folcalc.algebra.polynomial import MultiPoly, roots_gaussian
from folcalc.errors import NotSingularError
from folcalc.forms.calculus import OneForm
from folcalc.foliation.foliation import Foliation, SingularPoint

logger = logging.getLogger(__name__)

CHART1_COORDS = ("x", "t")
CHART2_COORDS = ("s", "y")

_X = MultiPoly.variable("x")
_Y = MultiPoly.variable("y")


@dataclass(frozen=True)
class DivisorPoints:
    """Puntos notables sobre el divisor excepcional."""
    singular: List[SingularPoint] = field(default_factory=list)   # carta 1, sobre x = 0
    corner_at_infinity: bool = False                               # origen de la carta 2
    tangencies: List[str] = field(default_factory=list)
    clusters: List[MultiPoly] = field(default_factory=list)


@dataclass(frozen=True)
class BlowupCharts:
    center: SingularPoint
    chart1: Foliation
    chart2: Foliation
    multiplicity: int
    dicritical: bool

    def divisor_points(self) -> DivisorPoints:
        """
        Singularidades (y tangencias si es dicrítico) sobre el divisor.

        En la carta 1 se estudia {x = 0} completo; de la carta 2 solo hace
        falta el origen (t = ∞).
        """
        a1 = self.chart1.A.substitute("x", 0)
        b1 = self.chart1.B.substitute("x", 0)
        g = a1.gcd(b1)
        singular: List[SingularPoint] = []
        clusters: List[MultiPoly] = []
        if not g.is_constant():
            roots, extra = roots_gaussian(g, "y")
            singular = [SingularPoint(GaussianRational(0), t0, multiplicity=m) for t0, m in roots]
            clusters = [f for f, _ in extra]

        a2 = self.chart2.A.evaluate(0, 0)
        b2 = self.chart2.B.evaluate(0, 0)
        corner = a2.is_zero() and b2.is_zero()

        tangencies: List[str] = []
        if self.dicritical:
            if not b1.is_zero() and not b1.is_constant():
                tangent = b1.exquo(b1.gcd(a1)) if not a1.is_zero() else b1
                if not tangent.is_constant():
                    t_roots, t_extra = roots_gaussian(tangent, "y")
                    tangencies += [f"(0, {t0}) en carta 1" for t0, _ in t_roots]
                    tangencies += [f"{f} = 0 sobre x = 0 en carta 1" for f, _ in t_extra]
            if a2.is_zero() and not b2.is_zero():
                tangencies.append("(0, 0) en carta 2")
        return DivisorPoints(singular, corner, tangencies, clusters)

    def to_dict(self) -> dict:
        return {
            "center": self.center.to_dict(),
            "chart1": str(self.chart1),
            "chart2": str(self.chart2),
            "multiplicity": self.multiplicity,
            "dicritical": self.dicritical,
        }


def _order(p: MultiPoly, var: str) -> Optional[int]:
    return None if p.is_zero() else p.min_degree_in(var)


def _strip(dx_part: MultiPoly, dy_part: MultiPoly, var: str) -> Tuple[MultiPoly, MultiPoly, int]:
    orders = [o for o in (_order(dx_part, var), _order(dy_part, var)) if o is not None]
    m = min(orders)
    power = MultiPoly.variable(var) ** m
    return dx_part.exquo(power), dy_part.exquo(power), m


def blow_up(foliation: Foliation, point: SingularPoint) -> BlowupCharts:
    """
    Pull-back de la foliación por el blow-up centrado en el punto.

    Raises:
        NonExactPointError: Si el centro no está en Q(i).
        NotSingularError: Si la foliación es regular en el centro.
    """
    point.require_exact()
    if not foliation.is_singular_at(point.x, point.y):
        raise NotSingularError(f"No se hace blow-up de un punto regular {point}")
    local = foliation.translated(point.x, point.y)
    A, B = local.A, local.B

    # carta 1: dy = t dx + x dt
    a1 = A.substitute("y", _X * _Y)
    b1 = B.substitute("y", _X * _Y)
    p1, q1, m1 = _strip(a1 + b1 * _Y, b1 * _X, "x")

    # carta 2: dx = y ds + s dy
    a2 = A.substitute("x", _X * _Y)
    b2 = B.substitute("x", _X * _Y)
    p2, q2, m2 = _strip(a2 * _Y, a2 * _X + b2, "y")

    if m1 != m2:
        logger.warning(f"Multiplicidades distintas en las cartas: {m1} y {m2}")

    chart1 = Foliation.from_form(OneForm(p1, q1, CHART1_COORDS), chart="carta 1 (x, t)", warn=False)
    chart2 = Foliation.from_form(OneForm(p2, q2, CHART2_COORDS), chart="carta 2 (s, y)", warn=False)

    # el divisor es invariante si el coeficiente de dt (resp. ds) se anula sobre él
    dicritical1 = not chart1.B.substitute("x", 0).is_zero()
    dicritical2 = not chart2.A.substitute("y", 0).is_zero()
    if dicritical1 != dicritical2:
        logger.warning("Test de dicriticidad incoherente entre cartas; se usa la carta 1")

    logger.debug(f"Blow-up en {point}: m={m1}, dicrítico={dicritical1}")
    return BlowupCharts(point, chart1, chart2, m1, dicritical1)


def strict_transform_curve(curve: MultiPoly, center: SingularPoint, chart: int) -> MultiPoly:
    """Transformada estricta de una curva por el blow-up en el centro."""
    local = curve.translate(center.x, center.y)
    if chart == 1:
        pulled = local.substitute("y", _X * _Y)
        var = "x"
    else:
        pulled = local.substitute("x", _X * _Y)
        var = "y"
    return pulled.exquo(MultiPoly.variable(var) ** pulled.min_degree_in(var))
