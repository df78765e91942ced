# folcalc/triples/gauge_ode.py
"""
Análisis de la ecuación s′ − ½s² = −φ² para el gauge sobre un divisor.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from folcalc.algebra.gaussian import GaussianRational
from folcalc.algebra.rational import RationalFunction
from folcalc.errors import PreconditionError

logger = logging.getLogger(__name__)


class PoleCase(str, Enum):
    SIMPLE_POLE = "SimplePole"
    HIGHER_ORDER_POLE = "HigherOrderPole"
    HOLOMORPHIC = "Holomorphic"


class ExtensionVerdict(str, Enum):
    EXTENSION_OBSTRUCTED = "ExtensionObstructed"
    NON_MEROMORPHIC = "NonMeromorphic"
    EXTENSION_POSSIBLE = "ExtensionPossible"


_VERDICTS = {
    PoleCase.SIMPLE_POLE: ExtensionVerdict.EXTENSION_OBSTRUCTED,
    PoleCase.HIGHER_ORDER_POLE: ExtensionVerdict.NON_MEROMORPHIC,
    PoleCase.HOLOMORPHIC: ExtensionVerdict.EXTENSION_POSSIBLE,
}


@dataclass(frozen=True)
class GaugeODECase:
    case: PoleCase
    phi_squared: RationalFunction
    verdict: ExtensionVerdict
    residue: Optional[GaussianRational] = None       # a, si el polo es simple
    pole_order: Optional[int] = None                 # m, si el polo es de orden ≥ 2
    alternative_phi_squared: Optional[RationalFunction] = None

    def to_dict(self) -> dict:
        return {
            "case": self.case.value,
            "verdict": self.verdict.value,
            "phi_squared": str(self.phi_squared),
            "residue": None if self.residue is None else str(self.residue),
            "pole_order": self.pole_order,
            "alternative_phi_squared": None if self.alternative_phi_squared is None else str(self.alternative_phi_squared),
        }


def gauge_ode_classify(s) -> GaugeODECase:
    """
    Clasifica el orden del polo de s(y) en y = 0 y devuelve φ² = ½s² − s′.

    Con s = a/y resulta φ² = (½a² + a)/y²; la fórmula alternativa
    (2a − a²)/y² sale del convenio de signo opuesto y se devuelve aparte
    para compararla.

    Raises:
        PreconditionError: Si s depende de x.
    """
    s = RationalFunction.coerce(s)
    if s.depends_on("x"):
        raise PreconditionError(f"s = {s} depende de x")
    phi_squared = s * s / 2 - s.diff("y")

    order = 0 if s.is_zero() else s.den.min_degree_in("y") - s.num.min_degree_in("y")
    if order <= 0:
        case = PoleCase.HOLOMORPHIC
        return GaugeODECase(case, phi_squared, _VERDICTS[case])
    if order >= 2:
        case = PoleCase.HIGHER_ORDER_POLE
        return GaugeODECase(case, phi_squared, _VERDICTS[case], pole_order=order)

    # polo simple: a = (y·s)(0)
    a = (s * RationalFunction.variable("y")).evaluate(0, 0)
    y = RationalFunction.variable("y")
    alternative = RationalFunction(2 * a - a * a) / (y * y)
    if alternative != phi_squared:
        logger.warning(
            f"Convenio de signo: ½s² − s′ da {phi_squared}, la fórmula (2a − a²)/y² da {alternative}"
        )
    case = PoleCase.SIMPLE_POLE
    return GaugeODECase(case, phi_squared, _VERDICTS[case], residue=a, alternative_phi_squared=alternative)
