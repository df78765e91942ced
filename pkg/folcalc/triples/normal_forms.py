# folcalc/triples/normal_forms.py
"""
Formas normales de sillas resonantes y silla-nodos con su forma cerrada.
"""
import logging
from dataclasses import dataclass

from folcalc.algebra.gaussian import GaussianRational
from folcalc.algebra.polynomial import MultiPoly
from folcalc.algebra.rational import RationalFunction
from folcalc.errors import CheckFailedError, PreconditionError
from folcalc.forms.calculus import OneForm, is_closed

logger = logging.getLogger(__name__)

_X = MultiPoly.variable("x")
_Y = MultiPoly.variable("y")


@dataclass(frozen=True)
class NormalForm:
    kind: str
    omega: OneForm           # forma polinomial
    closed_form: OneForm     # múltiplo racional cerrado de omega

    def to_dict(self) -> dict:
        return {"kind": self.kind, "omega": str(self.omega), "closed_form": str(self.closed_form)}


def _check_exponents(**exponents: int) -> None:
    for name, value in exponents.items():
        if not isinstance(value, int) or value < 1:
            raise PreconditionError(f"{name} debe ser un entero ≥ 1 (recibido {value!r})")


def _assert_closed(form: OneForm, label: str) -> None:
    if not is_closed(form):
        raise CheckFailedError(f"La forma {label} no es cerrada")


def resonant_kl(k: int, l: int, c=0) -> NormalForm:
    """
    ω = k·x dy + l·y(1 + c·x^l·y^k) dx y Ω = ω/(x^{l+1}·y^{k+1}), cerrada
    para todo c.
    """
    _check_exponents(k=k, l=l)
    c = GaussianRational.coerce(c)
    monomial = _X ** l * _Y ** k
    omega = OneForm((_Y * (1 + monomial.scale(c))).scale(l), _X.scale(k))
    closed = omega.scale(RationalFunction(1, _X ** (l + 1) * _Y ** (k + 1)))
    _assert_closed(closed, f"Ω_{{{k},{l}}}")
    return NormalForm(f"resonant_kl({k}, {l}, c={c})", omega, closed)


def saddle_node_closed(k: int, lam=0) -> NormalForm:
    """
    Ω = (1 + λy^k)/y^{k+1} dy − dx/x junto a la forma polinomial
    x(1 + λy^k)dy − y^{k+1}dx = x·y^{k+1}·Ω.
    """
    _check_exponents(k=k)
    lam = GaussianRational.coerce(lam)
    factor = 1 + (_Y ** k).scale(lam)
    closed = OneForm(RationalFunction(-1, _X), RationalFunction(factor, _Y ** (k + 1)))
    _assert_closed(closed, f"Ω_{{{k},{lam}}}")
    omega = OneForm(-(_Y ** (k + 1)), _X * factor)
    return NormalForm(f"saddle_node_closed({k}, λ={lam})", omega, closed)


def normal_form_library(kind: str, **params) -> NormalForm:
    """
    Args:
        kind: "resonant_kl" (k, l, c) o "saddle_node_closed" (k, lam)
    """
    builders = {"resonant_kl": resonant_kl, "saddle_node_closed": saddle_node_closed}
    if kind not in builders:
        raise PreconditionError(f"Forma normal desconocida: {kind}")
    return builders[kind](**params)
