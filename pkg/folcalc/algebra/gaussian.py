# folcalc/algebra/gaussian.py
"""
Racionales gaussianos: el cuerpo Q(i) donde viven todos los coeficientes.

`GaussianRational` envuelve un elemento del dominio `QQ_I` de sympy; la
aritmética exacta es la del dominio y las partes real e imaginaria se
exponen como `Fraction`.
"""
import logging
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

import sympy
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.polyerrors import CoercionFailed

from folcalc.errors import AlgebraError, DivisionByZeroError

logger = logging.getLogger(__name__)

Scalar = Union["GaussianRational", int, Fraction]


def _qq(q) -> object:
    q = Fraction(q)
    return QQ(q.numerator, q.denominator)


def _fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


class GaussianRational:
    """
    Número re + im·i con re, im racionales exactos.

    Inmutable; la igualdad es la del dominio (forma canónica de sympy).
    """

    __slots__ = ("element",)

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "element", QQ_I(_qq(re), _qq(im)))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational es inmutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    # ---- construcción ----

    @classmethod
    def from_domain(cls, element) -> "GaussianRational":
        """Envuelve un elemento de QQ_I (o de un dominio convertible)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "element", QQ_I.convert(element))
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        """Convierte int, Fraction, GaussianRational o un número de sympy."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, sympy.Basic):
            return cls.from_sympy(value)
        if isinstance(value, Rational):
            return cls(Fraction(value))
        raise AlgebraError(f"No se puede interpretar {value!r} como elemento de Q(i)")

    @classmethod
    def from_sympy(cls, expr) -> "GaussianRational":
        """
        Convierte una expresión numérica de sympy (p. ej. `3/2 + I/3`).

        Raises:
            AlgebraError: Si la expresión no pertenece a Q(i).
        """
        value = sympy.expand(sympy.sympify(expr))
        if value.has(sympy.Float):
            raise AlgebraError(f"{expr} no es exacto")
        try:
            return cls.from_domain(QQ_I.from_sympy(value))
        except CoercionFailed:
            raise AlgebraError(f"{expr} no es un racional gaussiano")

    def to_sympy(self) -> sympy.Expr:
        return QQ_I.to_sympy(self.element)

    @property
    def re(self) -> Fraction:
        return _fraction(self.element.x)

    @property
    def im(self) -> Fraction:
        return _fraction(self.element.y)

    # ---- predicados ----

    def is_zero(self) -> bool:
        return not self.element

    def is_real(self) -> bool:
        return not self.element.y

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ---- aritmética de cuerpo ----

    def __add__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational.from_domain(self.element + other.element)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational.from_domain(self.element - other.element)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational.from_domain(self.element * other.element)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return GaussianRational.from_domain(-self.element)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        if exponent == 0:
            return ONE
        return GaussianRational.from_domain(base.element ** abs(exponent))

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise DivisionByZeroError("División por cero en Q(i)")
        return GaussianRational.from_domain(QQ_I.quo(QQ_I.one, self.element))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational.from_domain(QQ_I(self.element.x, -self.element.y))

    def norm(self) -> Fraction:
        """|z|² = re² + im²."""
        x, y = self.element.x, self.element.y
        return _fraction(x * x + y * y)

    # ---- igualdad y conversión ----

    def __eq__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self.element == other.element

    def __hash__(self):
        if self.is_real():
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        """Forma legible por el parser: `3/2+1/3*i`, `-i`, `2`."""
        re, im = self.re, self.im
        if im == 0:
            return _fmt(re)
        if im == 1:
            imag = "i"
        elif im == -1:
            imag = "-i"
        else:
            imag = f"{_fmt(im)}*i"
        if re == 0:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{_fmt(re)}{sign}{imag}"

    def needs_parens(self) -> bool:
        """True cuando el número impreso no es un único factor."""
        return bool(self.element.x) and bool(self.element.y)


def _fmt(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _maybe(value) -> Optional[GaussianRational]:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gq_arith(a: Scalar, b: Scalar, op: str) -> GaussianRational:
    """
    Aritmética de Q(i) seleccionada por nombre.

    Args:
        a: Primer operando
        b: Segundo operando
        op: Uno de "add", "sub", "mul", "div"

    Returns:
        GaussianRational: El resultado exacto

    Raises:
        DivisionByZeroError: Si op es "div" y b = 0.
    """
    a = GaussianRational.coerce(a)
    b = GaussianRational.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise AlgebraError(f"Operación desconocida: {op}")


def is_rational_square(q) -> Optional[Fraction]:
    """
    Devuelve r ≥ 0 con r² = q si q es cuadrado de un racional.

    Args:
        q: Racional (int o Fraction)

    Returns:
        Fraction o None
    """
    root = QQ.exsqrt(_qq(q))
    return None if root is None else abs(_fraction(root))


def gaussian_sqrt(z: Scalar) -> Optional[GaussianRational]:
    """
    Raíz cuadrada en Q(i), si existe.

    Para z = a + bi se busca w = p + qi con p² − q² = a, 2pq = b; entonces
    p² = (a + |z|)/2 y |z| = √(a² + b²) tiene que ser racional.
    """
    z = GaussianRational.coerce(z)
    a, b = z.re, z.im
    if b == 0:
        if a >= 0:
            root = is_rational_square(a)
            return GaussianRational(root) if root is not None else None
        root = is_rational_square(-a)
        return GaussianRational(0, root) if root is not None else None
    modulus = is_rational_square(a * a + b * b)
    if modulus is None:
        return None
    p = is_rational_square((a + modulus) / 2)
    if p is None or p == 0:
        return None
    return GaussianRational(p, b / (2 * p))
