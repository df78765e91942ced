# folcalc/triples/riccati.py
"""
Foliaciones de Riccati p(x)dy − (y²c(x) − yb(x) − a(x))dx y la reducción
constructiva de una terna con ξ = g·dR a una ecuación de Riccati.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from folcalc.algebra.gaussian import GaussianRational
from folcalc.algebra.linear import nullspace
from folcalc.algebra.polynomial import Monomial, MultiPoly, roots_gaussian
from folcalc.algebra.rational import RationalFunction
from folcalc.config import Config
from folcalc.errors import AnsatzExhaustedError, PreconditionError, ReductionError
from folcalc.forms.calculus import (
    OneForm,
    RationalMap,
    differential,
    exterior_derivative,
    pullback,
    saturate,
    wedge,
)
from folcalc.triples.projective import GaugeData, ProjectiveTriple, modify_triple

logger = logging.getLogger(__name__)

_X = MultiPoly.variable("x")
_Y = MultiPoly.variable("y")


@dataclass(frozen=True)
class RiccatiCoefficients:
    """Coeficientes p, a, b, c, polinomios en x."""
    p: MultiPoly
    a: MultiPoly
    b: MultiPoly
    c: MultiPoly

    def __post_init__(self):
        for name in ("p", "a", "b", "c"):
            value = MultiPoly.coerce(getattr(self, name))
            if value.depends_on("y"):
                raise PreconditionError(f"El coeficiente {name} = {value} depende de y")
            object.__setattr__(self, name, value)
        if self.p.is_zero():
            raise PreconditionError("p no puede ser cero")

    def form(self) -> OneForm:
        """Ω = p dy − (y²c − yb − a)dx."""
        return OneForm(-(_Y * _Y * self.c - _Y * self.b - self.a), self.p)

    def to_dict(self) -> dict:
        return {"p": str(self.p), "a": str(self.a), "b": str(self.b), "c": str(self.c)}


@dataclass(frozen=True)
class BernoulliCoefficients:
    """α dy − (y²β₀ + yβ₁)dx."""
    alpha: MultiPoly
    beta0: MultiPoly
    beta1: MultiPoly

    def as_tuple(self) -> Tuple[MultiPoly, MultiPoly, MultiPoly]:
        return self.alpha, self.beta0, self.beta1

    def to_dict(self) -> dict:
        return {"alpha": str(self.alpha), "beta0": str(self.beta0), "beta1": str(self.beta1)}


@dataclass(frozen=True)
class RiccatiReduction:
    R: RationalFunction
    H: RationalFunction
    F: RationalFunction
    phi: RationalFunction
    sigma: RationalMap
    omega_phi: OneForm
    gauged: ProjectiveTriple
    pulled_back: OneForm

    def to_dict(self) -> dict:
        return {
            "R": str(self.R),
            "H": str(self.H),
            "F": str(self.F),
            "phi": str(self.phi).replace("x", "z"),
            "sigma": str(self.sigma),
            "omega_phi": str(self.omega_phi),
            "gauged": self.gauged.to_dict(),
            "pullback_matches": self.pulled_back == self.gauged.omega,
        }


# ---- constructores ----

def riccati_canonical_triple(coeffs: RiccatiCoefficients) -> ProjectiveTriple:
    """
    Terna canónica:
        Ω = p dy − (y²c − yb − a)dx
        η = 2dy/y + (p′ + b)/p dx + 2a/(yp) dx
        ξ = −2a/(y²p²) dx
    """
    p = RationalFunction(coeffs.p)
    a = RationalFunction(coeffs.a)
    b = RationalFunction(coeffs.b)
    y = RationalFunction.variable("y")
    omega = coeffs.form()
    eta = OneForm((p.diff("x") + b) / p + 2 * a / (y * p), 2 / y)
    xi = OneForm(-2 * a / (y * y * p * p), 0)
    return ProjectiveTriple(omega, eta, xi)


def riccati_example_gauge(coeffs: RiccatiCoefficients) -> GaugeData:
    """
    Gauge (1, −2/(py)); el parámetro g = −1/(py) del ejemplo clásico entra
    como h = 2g. Tras aplicarlo:
        η′ = (p′ − b + 2yc)/p dx,   ξ′ = 2c/p² dx
    """
    h = RationalFunction(-2, coeffs.p * _Y)
    return GaugeData(RationalFunction.one(), h)


def riccati_invariant_fibers(coeffs: RiccatiCoefficients) -> Tuple[List[GaussianRational], List[MultiPoly]]:
    """
    Fibras verticales invariantes {x = x₀}: las raíces de p. Ω es
    transversal a todas las demás.

    Returns:
        (raíces exactas, factores irreducibles sin raíz en Q(i))
    """
    if coeffs.p.is_constant():
        return [], []
    roots, clusters = roots_gaussian(coeffs.p, "x")
    return [r for r, _ in roots], [f for f, _ in clusters]


# ---- reconocedores ----

def riccati_recognize(omega: OneForm) -> Optional[RiccatiCoefficients]:
    """
    Reconoce p(x)dy − (y²c − yb − a)dx tras saturar la forma.

    Returns:
        RiccatiCoefficients o None si la forma no es de Riccati.
    """
    if omega.is_zero():
        return None
    sat, _ = saturate(omega)
    A, B = sat.A.as_poly(), sat.B.as_poly()
    if B.is_zero() or B.depends_on("y") or A.degree_in("y") > 2:
        return None
    # A = −c y² + b y + a
    return RiccatiCoefficients(
        p=B,
        a=A.coefficient_in("y", 0),
        b=A.coefficient_in("y", 1),
        c=-A.coefficient_in("y", 2),
    )


def bernoulli_recognize(omega: OneForm) -> Optional[BernoulliCoefficients]:
    """
    Caso a ≡ 0 de Riccati: α(x)dy − (y²β₀(x) + yβ₁(x))dx. La forma no
    tiene coeficiente β₂; solo se reconocen α, β₀ y β₁.

    Returns:
        (α, β₀, β₁) o None si aparece término independiente de y.
    """
    coeffs = riccati_recognize(omega)
    if coeffs is None or not coeffs.a.is_zero():
        return None
    return BernoulliCoefficients(coeffs.p, coeffs.c, -coeffs.b)


# ---- reducción ----

def _ratio(form: OneForm, base: OneForm) -> RationalFunction:
    if not base.A.is_zero():
        return form.A / base.A
    return form.B / base.B


def _ansatz_rows(F: RationalFunction, R: RationalFunction, degree: int) -> List[List[GaussianRational]]:
    """
    Sistema homogéneo en (α₀..α_d, β₀..β_d) para
    F.num·D(R) − F.den·N(R) = 0, con N(R), D(R) homogeneizados por R.den^d.
    """
    powers = [R.num ** k * R.den ** (degree - k) for k in range(degree + 1)]
    columns = [F.den * -pk for pk in powers] + [F.num * pk for pk in powers]
    index: Dict[Monomial, int] = {}
    for column in columns:
        for monom in column.terms():
            index.setdefault(monom, len(index))
    rows = [[GaussianRational(0)] * len(columns) for _ in index]
    for j, column in enumerate(columns):
        for monom, coeff in column.terms().items():
            rows[index[monom]][j] = coeff
    return rows


def _solve_phi(F: RationalFunction, R: RationalFunction, deg_bound: int) -> RationalFunction:
    """φ univariada (en la variable x) con F = φ(R) y grados ≤ deg_bound."""
    for degree in range(deg_bound + 1):
        n = degree + 1
        for vec in nullspace(_ansatz_rows(F, R, degree), 2 * n):
            beta = vec[n:]
            if all(b.is_zero() for b in beta):
                continue
            num = MultiPoly.from_terms({(k, 0): vec[k] for k in range(n)})
            den = MultiPoly.from_terms({(k, 0): beta[k] for k in range(n)})
            logger.debug(f"φ encontrada con grado {degree}")
            return RationalFunction(num, den)
    raise AnsatzExhaustedError(f"Ninguna φ de grado ≤ {deg_bound} cumple F = φ(R)")


def riccati_reduce(triple: ProjectiveTriple, R, g, deg_bound: Optional[int] = None) -> RiccatiReduction:
    """
    Reduce una terna con ξ = g·dR al modelo dy − (½y² − φ(x))dx.

    Pasos: gauge (g, 0) para tener ξ′ = dR; H = η′/dR;
    ω = dH − ½H²dR; F con Ω′ = ω + F·dR; φ con F = φ(R); σ = (R, H).

    Args:
        triple: Terna de partida
        R: Función racional con ξ = g·dR
        g: Factor no nulo
        deg_bound: Cota de grado del ansatz (por defecto DEG_BOUND)

    Returns:
        RiccatiReduction con σ*Ω_φ = Ω′ verificada.

    Raises:
        ReductionError: Si falla alguna proporcionalidad del procedimiento.
        AnsatzExhaustedError: Si no hay φ dentro de la cota.
    """
    if deg_bound is None:
        deg_bound = int(Config.get("DEG_BOUND", 8))
    if deg_bound < 0:
        raise PreconditionError("deg_bound debe ser ≥ 0")
    R = RationalFunction.coerce(R)
    g = RationalFunction.coerce(g)

    dR = differential(R)
    if dR.is_zero():
        raise ReductionError("R es constante: dR = 0")
    if triple.xi != dR.scale(g):
        raise ReductionError("ξ ≠ g dR")

    gauged = modify_triple(triple, GaugeData(g, RationalFunction.zero()))
    if not wedge(gauged.eta, dR).is_zero():
        raise ReductionError("η′ no es proporcional a dR")
    H = _ratio(gauged.eta, dR)

    omega = differential(H) - dR.scale(H * H / 2)
    rest = gauged.omega - omega
    if not wedge(rest, dR).is_zero():
        raise ReductionError("Ω′ − ω no es proporcional a dR")
    F = _ratio(rest, dR) if not rest.is_zero() else RationalFunction.zero()
    if not wedge(differential(F), dR).is_zero():
        raise ReductionError(f"F = {F} no es función de R: dF∧dR ≠ 0")

    phi = _solve_phi(F, R, deg_bound)
    y = RationalFunction.variable("y")
    omega_phi = OneForm(phi - y * y / 2, 1)
    sigma = RationalMap(R, H)
    pulled = pullback(sigma, omega_phi)
    if not wedge(pulled, gauged.omega).is_zero():
        raise ReductionError("σ*Ω_φ no es proporcional a Ω′")
    if pulled != gauged.omega:
        logger.warning("σ*Ω_φ es proporcional pero no igual a Ω′")
    logger.info(f"Reducción de Riccati: H = {H}, φ = {phi}")
    return RiccatiReduction(R, H, F, phi, sigma, omega_phi, gauged, pulled)


def eta_is_closed(triple: ProjectiveTriple) -> bool:
    return exterior_derivative(triple.eta).is_zero()
