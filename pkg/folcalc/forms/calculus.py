# folcalc/forms/calculus.py
"""
Formas diferenciales en el plano con coeficientes racionales.

Las coordenadas siempre son un par ordenado; las cartas de blow-up reutilizan
los mismos tipos y solo cambian las etiquetas (`coords`) que se usan al
imprimir, p. ej. ("x", "t") o ("s", "y").
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Tuple

from folcalc.algebra.polynomial import MultiPoly
from folcalc.algebra.rational import RationalFunction
from folcalc.errors import ZeroFormError

logger = logging.getLogger(__name__)

Coords = Tuple[str, str]
DEFAULT_COORDS: Coords = ("x", "y")

_FUNC = RationalFunction.coerce


@dataclass(frozen=True)
class TwoForm:
    """C dx∧dy."""
    C: RationalFunction
    coords: Coords = field(default=DEFAULT_COORDS, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "C", _FUNC(self.C))

    def is_zero(self) -> bool:
        return self.C.is_zero()

    def __add__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.C + other.C, self.coords)

    def __sub__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.C - other.C, self.coords)

    def __neg__(self) -> "TwoForm":
        return TwoForm(-self.C, self.coords)

    def scale(self, f) -> "TwoForm":
        return TwoForm(self.C * _FUNC(f), self.coords)

    def __str__(self):
        if self.is_zero():
            return "0"
        return relabel(f"{_coeff_text(self.C)}*dx∧dy", self.coords)


@dataclass(frozen=True)
class OneForm:
    """A dx + B dy."""
    A: RationalFunction
    B: RationalFunction
    coords: Coords = field(default=DEFAULT_COORDS, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "A", _FUNC(self.A))
        object.__setattr__(self, "B", _FUNC(self.B))

    @classmethod
    def zero(cls, coords: Coords = DEFAULT_COORDS) -> "OneForm":
        return cls(RationalFunction.zero(), RationalFunction.zero(), coords)

    @classmethod
    def dx(cls) -> "OneForm":
        return cls(1, 0)

    @classmethod
    def dy(cls) -> "OneForm":
        return cls(0, 1)

    def is_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero()

    def is_polynomial(self) -> bool:
        return self.A.is_polynomial() and self.B.is_polynomial()

    def with_coords(self, coords: Coords) -> "OneForm":
        return OneForm(self.A, self.B, coords)

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.A + other.A, self.B + other.B, self.coords)

    def __sub__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.A - other.A, self.B - other.B, self.coords)

    def __neg__(self) -> "OneForm":
        return OneForm(-self.A, -self.B, self.coords)

    def scale(self, f) -> "OneForm":
        f = _FUNC(f)
        return OneForm(self.A * f, self.B * f, self.coords)

    def d(self) -> TwoForm:
        return exterior_derivative(self)

    def __str__(self):
        return format_one_form(self)


@dataclass(frozen=True)
class VectorField:
    """P ∂/∂x + Q ∂/∂y."""
    P: RationalFunction
    Q: RationalFunction
    coords: Coords = field(default=DEFAULT_COORDS, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "P", _FUNC(self.P))
        object.__setattr__(self, "Q", _FUNC(self.Q))

    def __str__(self):
        u, v = self.coords
        return f"({self.P})∂/∂{u} + ({self.Q})∂/∂{v}"


@dataclass(frozen=True)
class RationalMap:
    """σ(x, y) = (first, second)."""
    first: RationalFunction
    second: RationalFunction

    def __post_init__(self):
        object.__setattr__(self, "first", _FUNC(self.first))
        object.__setattr__(self, "second", _FUNC(self.second))

    @classmethod
    def identity(cls) -> "RationalMap":
        return cls(RationalFunction.variable("x"), RationalFunction.variable("y"))

    def __str__(self):
        return f"({self.first}, {self.second})"


# ---- operaciones ----

def differential(f) -> OneForm:
    """df = f_x dx + f_y dy."""
    f = _FUNC(f)
    return OneForm(f.diff("x"), f.diff("y"))


def exterior_derivative(omega: OneForm) -> TwoForm:
    """d(A dx + B dy) = (∂B/∂x − ∂A/∂y) dx∧dy."""
    return TwoForm(omega.B.diff("x") - omega.A.diff("y"), omega.coords)


def wedge(alpha: OneForm, beta: OneForm) -> TwoForm:
    return TwoForm(alpha.A * beta.B - beta.A * alpha.B, alpha.coords)


def is_closed(omega: OneForm) -> bool:
    return exterior_derivative(omega).is_zero()


def dual_vector_field(omega: OneForm) -> VectorField:
    """
    X = −B ∂/∂x + A ∂/∂y, con ω(X) ≡ 0.

    Raises:
        ZeroFormError: Si ω es idénticamente cero.
    """
    if omega.is_zero():
        raise ZeroFormError("La forma es idénticamente cero")
    return VectorField(-omega.B, omega.A, omega.coords)


def contract(omega: OneForm, field_: VectorField) -> RationalFunction:
    """ω(X) = A·P + B·Q."""
    return omega.A * field_.P + omega.B * field_.Q


def jacobian_determinant(sigma: RationalMap) -> RationalFunction:
    f, g = sigma.first, sigma.second
    return f.diff("x") * g.diff("y") - f.diff("y") * g.diff("x")


def pullback(sigma: RationalMap, omega: OneForm) -> OneForm:
    """
    σ*ω = (A∘σ) dσ₁ + (B∘σ) dσ₂, exacta (sin saturar).
    """
    a = omega.A.compose(sigma.first, sigma.second)
    b = omega.B.compose(sigma.first, sigma.second)
    d1 = differential(sigma.first)
    d2 = differential(sigma.second)
    return OneForm(a * d1.A + b * d2.A, a * d1.B + b * d2.B)


def pullback_two_form(sigma: RationalMap, tau: TwoForm) -> TwoForm:
    """σ*(C dx∧dy) = (C∘σ)·det(Dσ) dx∧dy."""
    return TwoForm(tau.C.compose(sigma.first, sigma.second) * jacobian_determinant(sigma))


def same_foliation(omega1: OneForm, omega2: OneForm) -> bool:
    """True si ω₁ ∧ ω₂ ≡ 0 (formas proporcionales)."""
    if omega1.is_zero() or omega2.is_zero():
        raise ZeroFormError("same_foliation requiere formas no nulas")
    return wedge(omega1, omega2).is_zero()


def saturate(omega: OneForm) -> Tuple[OneForm, RationalFunction]:
    """
    Escribe ω = factor · ω_sat con ω_sat polinomial y coeficientes coprimos.

    Returns:
        (ω_sat, factor)
    """
    if omega.is_zero():
        raise ZeroFormError("No se satura la forma cero")
    a, b = omega.A, omega.B
    common_den = _lcm(a.den, b.den)
    num_a = a.num * common_den.exquo(a.den)
    num_b = b.num * common_den.exquo(b.den)
    g = num_a.gcd(num_b)
    sat = OneForm(num_a.exquo(g), num_b.exquo(g), omega.coords)
    return sat, RationalFunction(g, common_den)


def _lcm(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return (p * q).exquo(p.gcd(q)).monic()


# ---- impresión ----

_TOKEN = re.compile(r"\b(d?)([xy])\b")


def relabel(text: str, coords: Coords) -> str:
    """Renombra x, y, dx, dy a las etiquetas de la carta."""
    if coords == DEFAULT_COORDS:
        return text
    names = {"x": coords[0], "y": coords[1]}
    return _TOKEN.sub(lambda m: m.group(1) + names[m.group(2)], text)


def _coeff_text(f: RationalFunction) -> str:
    text = str(f)
    if f.is_polynomial() and len(f.num.terms()) == 1:
        return text
    return f"({text})"


def _term(coeff: RationalFunction, differential_name: str) -> str:
    text = str(coeff)
    if text == "1":
        return differential_name
    if text == "-1":
        return f"-{differential_name}"
    return f"{_coeff_text(coeff)}*{differential_name}"


def format_one_form(omega: OneForm, relabeled: bool = True) -> str:
    """
    Imprime A dx + B dy en la sintaxis del parser (con x, y si relabeled es False).
    """
    pieces = []
    if not omega.A.is_zero():
        pieces.append(_term(omega.A, "dx"))
    if not omega.B.is_zero():
        pieces.append(_term(omega.B, "dy"))
    if not pieces:
        return "0"
    out = pieces[0]
    for text in pieces[1:]:
        out += f" - {text[1:]}" if text.startswith("-") else f" + {text}"
    return relabel(out, omega.coords) if relabeled else out
