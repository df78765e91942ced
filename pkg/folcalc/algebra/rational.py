# folcalc/algebra/rational.py
"""
Funciones racionales en x, y sobre Q(i), siempre normalizadas: numerador y
denominador coprimos y denominador con coeficiente principal 1.
"""
import logging
from typing import Dict, Tuple

import sympy

from folcalc.algebra.gaussian import GaussianRational, ONE
from folcalc.algebra.polynomial import MultiPoly, X, Y, var_symbol
from folcalc.errors import AlgebraError, DivisionByZeroError

logger = logging.getLogger(__name__)


class RationalFunction:
    """Cociente num/den de polinomios, inmutable y normalizado."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = MultiPoly.coerce(num)
        den = MultiPoly.one() if den is None else MultiPoly.coerce(den)
        if den.is_zero():
            raise DivisionByZeroError("Denominador cero en función racional")
        if num.is_zero():
            den = MultiPoly.one()
        elif not den.is_constant():
            g = num.gcd(den)
            if not g.is_constant():
                num = num.exquo(g)
                den = den.exquo(g)
        lc = den.leading_coefficient()
        if lc != ONE:
            inv = lc.inverse()
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    # ---- construcción ----

    @classmethod
    def coerce(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return cls(value)

    @classmethod
    def from_expr(cls, expr) -> "RationalFunction":
        """Construye desde una expresión racional de sympy en x, y."""
        num, den = sympy.fraction(sympy.together(sympy.sympify(expr)))
        return cls(MultiPoly.from_expr(num), MultiPoly.from_expr(den))

    @classmethod
    def variable(cls, var) -> "RationalFunction":
        return cls(MultiPoly.variable(var))

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(MultiPoly.zero())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(MultiPoly.one())

    # ---- predicados ----

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise AlgebraError(f"{self} no es constante")
        return self.num.constant_value() / self.den.constant_value()

    def as_poly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise AlgebraError(f"{self} no es un polinomio")
        return self.num.scale(self.den.constant_value().inverse())

    def depends_on(self, var) -> bool:
        return self.num.depends_on(var) or self.den.depends_on(var)

    # ---- aritmética ----

    def __add__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroError("División por la función racional cero")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if self.is_zero():
                raise DivisionByZeroError("Potencia negativa de cero")
            return RationalFunction(self.den ** -exponent, self.num ** -exponent)
        return RationalFunction(self.num ** exponent, self.den ** exponent)

    def diff(self, var) -> "RationalFunction":
        """Regla del cociente."""
        sym = var_symbol(var)
        if self.is_polynomial():
            return RationalFunction(self.num.diff(sym), self.den)
        return RationalFunction(
            self.num.diff(sym) * self.den - self.num * self.den.diff(sym),
            self.den * self.den,
        )

    # ---- evaluación y composición ----

    def evaluate(self, x0, y0) -> GaussianRational:
        den = self.den.evaluate(x0, y0)
        if den.is_zero():
            raise DivisionByZeroError(f"{self} tiene un polo en ({x0}, {y0})")
        return self.num.evaluate(x0, y0) / den

    def compose(self, first, second) -> "RationalFunction":
        """
        f(first(x, y), second(x, y)).

        Cada polinomio se homogeneiza respecto de los denominadores de la
        sustitución, así todo el cálculo queda en aritmética de polinomios.
        """
        first = RationalFunction.coerce(first)
        second = RationalFunction.coerce(second)
        pn, dn = _compose_poly(self.num, first, second)
        pd, dd = _compose_poly(self.den, first, second)
        if pd.is_zero():
            raise DivisionByZeroError(f"El denominador de {self} se anula tras la sustitución")
        return RationalFunction(pn * dd, dn * pd)

    def substitute(self, var, value) -> "RationalFunction":
        value = RationalFunction.coerce(value)
        if var_symbol(var) == X:
            return self.compose(value, RationalFunction.variable("y"))
        return self.compose(RationalFunction.variable("x"), value)

    # ---- conversión ----

    def as_expr(self) -> sympy.Expr:
        return self.num.as_expr() / self.den.as_expr()

    def __eq__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == MultiPoly.one():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms()) > 1 or num.startswith("-") or "*" in num or "/" in num:
            num = f"({num})"
        return f"{num}/({self.den})"


def _maybe(value):
    if isinstance(value, RationalFunction):
        return value
    try:
        return RationalFunction(MultiPoly.coerce(value))
    except AlgebraError:
        return None


def _compose_poly(p: MultiPoly, first: RationalFunction, second: RationalFunction) -> Tuple[MultiPoly, MultiPoly]:
    """p(a1/b1, a2/b2) como (numerador, b1^dx · b2^dy)."""
    dx = max(p.degree_in("x"), 0)
    dy = max(p.degree_in("y"), 0)
    a1, b1, a2, b2 = first.num, first.den, second.num, second.den
    powers: Dict[Tuple[str, int], MultiPoly] = {}

    def power(name: str, base: MultiPoly, k: int) -> MultiPoly:
        key = (name, k)
        if key not in powers:
            powers[key] = base ** k
        return powers[key]

    total = MultiPoly.zero()
    for (i, j), coeff in p.terms().items():
        term = power("a1", a1, i) * power("b1", b1, dx - i) * power("a2", a2, j) * power("b2", b2, dy - j)
        total = total + term.scale(coeff)
    return total, power("b1", b1, dx) * power("b2", b2, dy)


def ratfun_arith(f, g, op: str) -> RationalFunction:
    """
    Aritmética de funciones racionales seleccionada por nombre.

    Args:
        f: Primer operando
        g: Segundo operando
        op: "add", "sub", "mul" o "div"
    """
    f = RationalFunction.coerce(f)
    g = RationalFunction.coerce(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise AlgebraError(f"Operación desconocida: {op}")


def partial_derivative(f, var) -> RationalFunction:
    return RationalFunction.coerce(f).diff(var)


def total_residue(numerator: MultiPoly, denominator: MultiPoly, factor: MultiPoly, var="x") -> GaussianRational:
    """
    Suma de los residuos de N/D en las raíces de un factor irreducible q de D.

    Con D = q^m·E, se resuelve U·E + V·q^m = 1; P = (N·U) mod q^m tiene
    las mismas partes principales que N/D en las raíces de q, y la suma de
    residuos de P/q^m es el coeficiente de grado m·deg(q) − 1 de P dividido
    por lc(q)^m. Para q lineal es el residuo en el punto.

    Args:
        numerator: N, univariado en var
        denominator: D, univariado en var
        factor: q, factor irreducible de D
        var: Variable

    Returns:
        GaussianRational: Residuo total exacto
    """
    sym = var_symbol(var)
    n = numerator.univariate(sym)
    d = denominator.univariate(sym)
    q = factor.univariate(sym)
    if q.degree() < 1:
        raise AlgebraError("El factor debe tener grado positivo")

    mult = 0
    rest = d
    while True:
        quo, rem = rest.div(q)
        if not rem.is_zero:
            break
        rest = quo
        mult += 1
    if mult == 0:
        return GaussianRational(0)

    qm = q ** mult
    u, _, h = rest.gcdex(qm)
    if h.degree() != 0:
        raise AlgebraError("El cofactor no es coprimo con el factor")
    u = u.quo_ground(h.LC())
    p = (n * u).rem(qm)
    top = mult * q.degree() - 1
    coeff = p.coeff_monomial(sym ** top) if top > 0 else p.coeff_monomial(1)
    value = sympy.sympify(coeff) / sympy.sympify(q.LC()) ** mult
    return GaussianRational.from_sympy(value)


def residue_at(numerator: MultiPoly, denominator: MultiPoly, point, var="x") -> GaussianRational:
    """Residuo de N/D en un punto de Q(i)."""
    linear = MultiPoly.variable(var) - MultiPoly.constant(point)
    return total_residue(numerator, denominator, linear, var)
