# folcalc/foliation/foliation.py
"""
Foliaciones polinomiales y su lugar singular.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from folcalc.algebra.gaussian import GaussianRational, ZERO
from folcalc.algebra.polynomial import MultiPoly, roots_gaussian
from folcalc.algebra.rational import RationalFunction
from folcalc.errors import AlgebraError, NonExactPointError, NotSingularError, ZeroFormError
from folcalc.forms.calculus import Coords, DEFAULT_COORDS, OneForm, dual_vector_field, saturate

logger = logging.getLogger(__name__)

Matrix2 = Tuple[Tuple[GaussianRational, GaussianRational], Tuple[GaussianRational, GaussianRational]]


@dataclass(frozen=True)
class Foliation:
    """
    Forma polinomial reducida ω = A dx + B dy (gcd(A, B) = 1).

    `chart` es la nota de procedencia (carta afín) y `stripped` el factor
    común que se quitó al construirla.
    """
    omega: OneForm
    chart: str = "C² (x, y)"
    stripped: Optional[RationalFunction] = field(default=None, compare=False)

    @classmethod
    def from_form(cls, omega: OneForm, chart: str = "C² (x, y)", warn: bool = True) -> "Foliation":
        """
        Satura la forma y registra el factor común eliminado.

        Raises:
            ZeroFormError: Si ω ≡ 0.
        """
        if omega.is_zero():
            raise ZeroFormError("Una foliación no puede definirse por la forma cero")
        saturated, factor = saturate(omega)
        if warn and not factor.is_constant():
            logger.warning(f"Factor común {factor} eliminado de la forma ({chart})")
        return cls(saturated, chart, factor)

    @property
    def coords(self) -> Coords:
        return self.omega.coords

    @property
    def A(self) -> MultiPoly:
        return self.omega.A.as_poly()

    @property
    def B(self) -> MultiPoly:
        return self.omega.B.as_poly()

    def is_singular_at(self, x0, y0) -> bool:
        return self.A.evaluate(x0, y0).is_zero() and self.B.evaluate(x0, y0).is_zero()

    def translated(self, x0, y0) -> "Foliation":
        """La misma foliación con el punto (x0, y0) llevado al origen."""
        shifted = OneForm(self.A.translate(x0, y0), self.B.translate(x0, y0), self.coords)
        return Foliation(shifted, self.chart)

    def __str__(self):
        return str(self.omega)


@dataclass(frozen=True)
class SingularPoint:
    """
    Punto singular. Si `exact` es False el punto es un cúmulo fuera de Q(i)
    descrito por `eliminant` (polinomio en x, polinomio en y) y `multiplicity`.
    """
    x: Optional[GaussianRational]
    y: Optional[GaussianRational]
    exact: bool = True
    eliminant: Optional[Tuple[MultiPoly, MultiPoly]] = None
    multiplicity: int = 1

    @classmethod
    def at(cls, x0, y0) -> "SingularPoint":
        return cls(GaussianRational.coerce(x0), GaussianRational.coerce(y0))

    def require_exact(self) -> "SingularPoint":
        if not self.exact:
            raise NonExactPointError(f"El punto {self} no tiene coordenadas en Q(i)")
        return self

    def to_dict(self) -> dict:
        if self.exact:
            return {"x": str(self.x), "y": str(self.y), "exact": True, "multiplicity": self.multiplicity}
        return {
            "exact": False,
            "eliminant": [str(p) for p in self.eliminant],
            "multiplicity": self.multiplicity,
        }

    def __str__(self):
        if self.exact:
            return f"({self.x}, {self.y})"
        ex, ey = self.eliminant
        return f"cúmulo {{{ex} = 0, {ey} = 0}}"


def _point_key(p: SingularPoint):
    if not p.exact:
        return (1, str(p))
    return (0, p.x.re, p.x.im, p.y.re, p.y.im)


def singular_locus(foliation: Foliation) -> List[SingularPoint]:
    """
    Ceros comunes de A y B.

    Elimina y con la resultante Res_y(A, B), extrae las raíces en Q(i) y
    para cada una resuelve gcd(A(x0, y), B(x0, y)). Lo que no se puede
    expresar en Q(i) sale como cúmulo con sus eliminantes.

    Raises:
        AlgebraError: Si A y B tienen un factor común (lugar singular infinito).
    """
    A, B = foliation.A, foliation.B
    if A.is_zero() or B.is_zero():
        other = B if A.is_zero() else A
        if other.is_constant():
            return []
        raise AlgebraError("Lugar singular infinito: la forma no está normalizada")
    if not A.gcd(B).is_constant():
        raise AlgebraError("Lugar singular infinito: la forma no está normalizada")
    if A.is_constant() or B.is_constant():
        return []

    res_x = A.resultant(B, "y")
    if res_x.is_constant():
        return []

    points: List[SingularPoint] = []
    x_roots, x_clusters = roots_gaussian(res_x, "x")
    for x0, _ in x_roots:
        a0 = A.substitute("x", x0)
        b0 = B.substitute("x", x0)
        g = a0.gcd(b0)
        if g.is_constant():
            continue
        y_roots, y_clusters = roots_gaussian(g, "y")
        for y0, mult in y_roots:
            points.append(SingularPoint(x0, y0, multiplicity=mult))
        for factor, mult in y_clusters:
            x_line = MultiPoly.variable("x") - MultiPoly.constant(x0)
            points.append(SingularPoint(None, None, False, (x_line, factor), mult * factor.degree_in("y")))
    if x_clusters:
        res_y = A.resultant(B, "x")
        for factor, mult in x_clusters:
            logger.warning(f"Singularidades fuera de Q(i) sobre {factor} = 0")
            points.append(SingularPoint(None, None, False, (factor, res_y), mult * factor.degree_in("x")))
    points.sort(key=_point_key)
    return points


def linear_part(foliation: Foliation, point: SingularPoint) -> Matrix2:
    """
    Jacobiano en el punto del campo dual X = −B∂x + A∂y.

    Raises:
        NonExactPointError: Si el punto no está en Q(i).
        NotSingularError: Si la foliación es regular en el punto.
    """
    point.require_exact()
    if not foliation.is_singular_at(point.x, point.y):
        raise NotSingularError(f"La foliación es regular en {point}")
    field_ = dual_vector_field(foliation.omega)
    P, Q = field_.P, field_.Q
    return (
        (P.diff("x").evaluate(point.x, point.y), P.diff("y").evaluate(point.x, point.y)),
        (Q.diff("x").evaluate(point.x, point.y), Q.diff("y").evaluate(point.x, point.y)),
    )


def format_matrix(m: Matrix2) -> List[List[str]]:
    return [[str(v) for v in row] for row in m]


def is_zero_matrix(m: Matrix2) -> bool:
    return all(v == ZERO for row in m for v in row)
