# folcalc/triples/projective.py
"""
Ternas proyectivas (Ω, η, ξ) y su modificación por gauge (g, h).

Relaciones:
    dΩ = η ∧ Ω,    dη = Ω ∧ ξ,    dξ = ξ ∧ η
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from folcalc.algebra.rational import RationalFunction
from folcalc.errors import PreconditionError
from folcalc.forms.calculus import OneForm, TwoForm, differential, exterior_derivative, wedge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectiveTriple:
    omega: OneForm
    eta: OneForm
    xi: OneForm

    def to_dict(self) -> dict:
        return {"omega": str(self.omega), "eta": str(self.eta), "xi": str(self.xi)}


@dataclass(frozen=True)
class TripleCheck:
    """Resultado de verify_triple, con los residuos de cada relación."""
    proj1: bool
    proj2: bool
    proj3: bool
    residual1: TwoForm
    residual2: TwoForm
    residual3: TwoForm

    @property
    def all_hold(self) -> bool:
        return self.proj1 and self.proj2 and self.proj3

    def to_dict(self) -> dict:
        return {
            "proj1": self.proj1,
            "proj2": self.proj2,
            "proj3": self.proj3,
            "residuals": [str(self.residual1), str(self.residual2), str(self.residual3)],
        }


@dataclass(frozen=True)
class GaugeData:
    g: RationalFunction
    h: RationalFunction

    def __post_init__(self):
        object.__setattr__(self, "g", RationalFunction.coerce(self.g))
        object.__setattr__(self, "h", RationalFunction.coerce(self.h))
        if self.g.is_zero():
            raise PreconditionError("El gauge g no puede ser cero")

    @classmethod
    def identity(cls) -> "GaugeData":
        return cls(RationalFunction.one(), RationalFunction.zero())

    def to_dict(self) -> dict:
        return {"g": str(self.g), "h": str(self.h)}


def verify_triple(triple: ProjectiveTriple) -> TripleCheck:
    """Comprueba las tres relaciones restando 2-formas exactas."""
    omega, eta, xi = triple.omega, triple.eta, triple.xi
    r1 = exterior_derivative(omega) - wedge(eta, omega)
    r2 = exterior_derivative(eta) - wedge(omega, xi)
    r3 = exterior_derivative(xi) - wedge(xi, eta)
    return TripleCheck(r1.is_zero(), r2.is_zero(), r3.is_zero(), r1, r2, r3)


def modify_triple(triple: ProjectiveTriple, gauge: GaugeData) -> ProjectiveTriple:
    """
    Ω′ = gΩ
    η′ = η + dg/g + hΩ
    ξ′ = (1/g)(ξ − dh − hη − (h²/2)Ω)
    """
    g, h = gauge.g, gauge.h
    omega, eta, xi = triple.omega, triple.eta, triple.xi
    new_omega = omega.scale(g)
    new_eta = eta + differential(g).scale(1 / g) + omega.scale(h)
    inner = xi - differential(h) - eta.scale(h) - omega.scale(h * h / 2)
    new_xi = inner.scale(1 / g)
    return ProjectiveTriple(new_omega, new_eta, new_xi)


def compose_gauges(first: GaugeData, second: GaugeData) -> GaugeData:
    """
    Gauge equivalente a aplicar `first` y después `second`:
    (g₁g₂, h₁ + g₁h₂).
    """
    return GaugeData(first.g * second.g, first.h + first.g * second.h)


def transverse_triple(triple: ProjectiveTriple) -> ProjectiveTriple:
    """(ξ, −η, Ω): terna de la foliación definida por ξ."""
    return ProjectiveTriple(triple.xi, -triple.eta, triple.omega)


def _ratio(form: OneForm, base: OneForm) -> RationalFunction:
    """f con form = f·base (se supone proporcionalidad)."""
    if not base.A.is_zero():
        return form.A / base.A
    return form.B / base.B


def triple_difference(triple: ProjectiveTriple, xi2: OneForm) -> Tuple[RationalFunction, bool]:
    """
    Extrae F con ξ₂ = ξ + F·Ω y comprueba 2F·dΩ + dF∧Ω = 0, que es
    d(√F Ω) = 0 sin raíces cuadradas.

    Raises:
        PreconditionError: Si ξ₂ − ξ no es proporcional a Ω.
    """
    difference = xi2 - triple.xi
    if difference.is_zero():
        return RationalFunction.zero(), True
    if triple.omega.is_zero() or not wedge(difference, triple.omega).is_zero():
        raise PreconditionError("ξ₂ − ξ no es proporcional a Ω")
    F = _ratio(difference, triple.omega)
    check = exterior_derivative(triple.omega).scale(2 * F) + wedge(differential(F), triple.omega)
    return F, check.is_zero()
