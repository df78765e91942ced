# folcalc/foliation/indices.py
"""
Índices de Camacho–Sad a lo largo de los ejes y suma sobre una recta
proyectiva invariante (con el punto del infinito en la carta estándar).
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from folcalc.algebra.gaussian import GaussianRational, ZERO
from folcalc.algebra.polynomial import MultiPoly, factor_gaussian, linear_root
from folcalc.algebra.rational import RationalFunction, residue_at, total_residue
from folcalc.errors import NonInvariantAxisError, PreconditionError
from folcalc.forms.calculus import RationalMap, pullback
from folcalc.foliation.foliation import Foliation, SingularPoint

logger = logging.getLogger(__name__)

AXES = ("y=0", "x=0")


def _check_axis(axis: str) -> str:
    if axis not in AXES:
        raise PreconditionError(f"Eje desconocido: {axis!r} (se espera 'y=0' o 'x=0')")
    return axis


def _axis_residue_data(foliation: Foliation, axis: str) -> Tuple[MultiPoly, MultiPoly, str]:
    """
    Numerador y denominador univariados cuya función tiene por residuos
    los índices a lo largo del eje.

    Eje y=0: A = y·Ā, índice = Res Ā(x,0)/(−B(x,0)).
    Eje x=0: B = x·B̄, índice = Res B̄(0,y)/(−A(0,y)).
    """
    A, B = foliation.A, foliation.B
    if _check_axis(axis) == "y=0":
        if not A.substitute("y", 0).is_zero():
            raise NonInvariantAxisError(f"La recta y=0 no es invariante para {foliation}")
        y = MultiPoly.variable("y")
        num = A.exquo(y).substitute("y", 0)
        den = -B.substitute("y", 0)
        return num, den, "x"
    if not B.substitute("x", 0).is_zero():
        raise NonInvariantAxisError(f"La recta x=0 no es invariante para {foliation}")
    x = MultiPoly.variable("x")
    num = B.exquo(x).substitute("x", 0)
    den = -A.substitute("x", 0)
    return num, den, "y"


def cs_index(foliation: Foliation, point: SingularPoint, axis: str) -> GaussianRational:
    """
    Índice de Camacho–Sad del punto a lo largo del eje invariante.

    Args:
        foliation: Foliación con el eje invariante
        point: Punto exacto sobre el eje
        axis: "y=0" o "x=0"

    Returns:
        GaussianRational: Residuo exacto

    Raises:
        NonInvariantAxisError: Si el eje no es invariante.
    """
    point.require_exact()
    num, den, var = _axis_residue_data(foliation, axis)
    on_axis = point.y if axis == "y=0" else point.x
    if not on_axis.is_zero():
        raise PreconditionError(f"El punto {point} no está sobre {axis}")
    coordinate = point.x if axis == "y=0" else point.y
    return residue_at(num, den, coordinate, var)


@dataclass
class IndexContribution:
    location: str
    value: GaussianRational
    exact: bool = True
    eliminant: Optional[MultiPoly] = None

    def to_dict(self) -> dict:
        data = {"at": self.location, "index": str(self.value), "exact": self.exact}
        if self.eliminant is not None:
            data["eliminant"] = str(self.eliminant)
        return data


@dataclass
class IndexSum:
    line: str
    contributions: List[IndexContribution] = field(default_factory=list)
    at_infinity: GaussianRational = ZERO
    total: GaussianRational = ZERO

    @property
    def some_index_not_negative_rational(self) -> bool:
        """Algún índice fuera de Q₋ (consecuencia de no resonancia)."""
        values = [c.value for c in self.contributions] + [self.at_infinity]
        return any(not (v.is_real() and v.re < 0) for v in values if not v.is_zero())

    def to_dict(self) -> dict:
        return {
            "line": self.line,
            "affine": [c.to_dict() for c in self.contributions],
            "at_infinity": str(self.at_infinity),
            "total": str(self.total),
            "some_index_not_negative_rational": self.some_index_not_negative_rational,
        }


def _affine_contributions(num: MultiPoly, den: MultiPoly, var: str) -> List[IndexContribution]:
    if den.is_constant():
        return []
    contributions = []
    _, factors = factor_gaussian(den, var)
    for factor, _ in factors:
        if factor.degree_in(var) == 1:
            root = linear_root(factor, var)
            location = f"({root}, 0)" if var == "x" else f"(0, {root})"
            contributions.append(IndexContribution(location, residue_at(num, den, root, var)))
        else:
            value = total_residue(num, den, factor, var)
            logger.warning(f"Polos fuera de Q(i) en {factor} = 0: se reporta el residuo total")
            contributions.append(IndexContribution(f"{factor} = 0", value, exact=False, eliminant=factor))
    return contributions


def infinity_chart(foliation: Foliation, line: str) -> Foliation:
    """
    Carta de CP² que contiene el punto del infinito de la recta.

    y=0: (x, y) = (1/u, v/u), la recta es v = 0.
    x=0: (x, y) = (u/v, 1/v), la recta es u = 0.
    El punto del infinito es el origen en (u, v).
    """
    u = RationalFunction.variable("x")
    v = RationalFunction.variable("y")
    if _check_axis(line) == "y=0":
        sigma = RationalMap(1 / u, v / u)
    else:
        sigma = RationalMap(u / v, 1 / v)
    pulled = pullback(sigma, foliation.omega).with_coords(("u", "v"))
    return Foliation.from_form(pulled, chart="CP² (u, v)", warn=False)


def projective_line_index_sum(foliation: Foliation, line: str = "y=0") -> IndexSum:
    """
    Suma de índices sobre la clausura proyectiva de la recta.

    Returns:
        IndexSum: Contribuciones afines, la del infinito y el total.
    """
    num, den, var = _axis_residue_data(foliation, line)
    contributions = _affine_contributions(num, den, var)

    chart = infinity_chart(foliation, line)
    axis_at_infinity = "y=0" if line == "y=0" else "x=0"
    inf_num, inf_den, inf_var = _axis_residue_data(chart, axis_at_infinity)
    at_infinity = residue_at(inf_num, inf_den, 0, inf_var) if not inf_den.is_zero() else ZERO

    total = sum((c.value for c in contributions), ZERO) + at_infinity
    logger.info(f"Suma de índices sobre {line}: {total}")
    return IndexSum(line, contributions, at_infinity, total)
