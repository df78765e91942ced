# folcalc/foliation/logarithmic.py
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from folcalc.algebra.gaussian import GaussianRational
from folcalc.algebra.linear import nullspace
from folcalc.algebra.polynomial import MultiPoly, Monomial
from folcalc.algebra.rational import RationalFunction
from folcalc.errors import CheckFailedError, PreconditionError
from folcalc.forms.calculus import OneForm, differential
from folcalc.foliation.foliation import Foliation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LogarithmicRepresentation:
    """
    c·ω/(Π fⱼ) = Σ λⱼ dfⱼ/fⱼ, verificada al construirse.
    """
    curves: Tuple[MultiPoly, ...]
    residues: Tuple[GaussianRational, ...]
    scale: GaussianRational
    omega: OneForm

    def __post_init__(self):
        if self.logarithmic_form() != self.omega.scale(RationalFunction(self.scale) / _product(self.curves)):
            raise CheckFailedError("La representación logarítmica no reproduce la forma")

    def logarithmic_form(self) -> OneForm:
        total = OneForm.zero()
        for f, lam in zip(self.curves, self.residues):
            total = total + differential(f).scale(RationalFunction(MultiPoly.constant(lam)) / RationalFunction(f))
        return total

    def to_dict(self) -> dict:
        return {
            "curves": [str(f) for f in self.curves],
            "residues": [str(r) for r in self.residues],
            "scale": str(self.scale),
        }


def _product(curves: Sequence[MultiPoly]) -> RationalFunction:
    return RationalFunction(reduce(lambda a, b: a * b, curves, MultiPoly.one()))


def _check_curves(curves: Sequence[MultiPoly]) -> None:
    if not curves:
        raise PreconditionError("Se necesita al menos una curva")
    for idx, f in enumerate(curves):
        if f.is_constant():
            raise PreconditionError(f"La curva {f} es constante")
        if not f.gcd(f.diff("x")).gcd(f.diff("y")).is_constant():
            raise PreconditionError(f"La curva {f} no es libre de cuadrados")
        for g in curves[idx + 1:]:
            if not f.gcd(g).is_constant():
                raise PreconditionError(f"Las curvas {f} y {g} no son coprimas")


def logarithmic_representation(foliation: Foliation, curves: Sequence[MultiPoly]) -> Optional[LogarithmicRepresentation]:
    """
    Busca escalares λⱼ, c con c·ω = Σ λⱼ (Π_{k≠j} f_k) dfⱼ, c ≠ 0.

    El sistema homogéneo sale de comparar coeficientes monomio a monomio
    en las dos componentes.

    Returns:
        LogarithmicRepresentation o None si no hay solución con c ≠ 0.
    """
    curves = tuple(curves)
    _check_curves(curves)
    n = len(curves)

    # cada incógnita aporta un par de polinomios (parte dx, parte dy)
    columns: List[Tuple[MultiPoly, MultiPoly]] = []
    for j, f in enumerate(curves):
        others = reduce(lambda a, b: a * b, (c for k, c in enumerate(curves) if k != j), MultiPoly.one())
        columns.append((others * f.diff("x"), others * f.diff("y")))
    columns.append((-foliation.A, -foliation.B))

    monomials: Dict[Tuple[int, Monomial], int] = {}
    for dx_part, dy_part in columns:
        for comp, poly in ((0, dx_part), (1, dy_part)):
            for monom in poly.terms():
                monomials.setdefault((comp, monom), len(monomials))

    rows = []
    for (comp, monom) in monomials:
        rows.append([
            (col[comp].terms().get(monom, GaussianRational(0)))
            for col in columns
        ])
    basis = nullspace(rows, n + 1)

    for vec in basis:
        c = vec[n]
        if c.is_zero():
            continue
        residues = tuple(v / c for v in vec[:n])
        if any(r.is_zero() for r in residues):
            logger.warning("Algún residuo λⱼ es cero: la curva correspondiente sobra")
        return LogarithmicRepresentation(curves, residues, GaussianRational(1), foliation.omega)
    logger.info("No existe representación logarítmica con esas curvas")
    return None
