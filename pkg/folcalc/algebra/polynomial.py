# folcalc/algebra/polynomial.py
"""
Polinomios en x, y con coeficientes en Q(i).

La representación es un `sympy.Poly` sobre el dominio `QQ_I`; la vista
dispersa {(i, j): coeficiente} se obtiene con `terms()`. El orden monomial
es graded-lex con x < y: se compara el grado total y después el exponente
de y.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy
from sympy.polys.domains import QQ_I
from sympy.polys.polyerrors import BasePolynomialError, CoercionFailed, ExactQuotientFailed

from folcalc.algebra.gaussian import GaussianRational, ONE, ZERO
from folcalc.errors import AlgebraError, DivisionByZeroError

logger = logging.getLogger(__name__)

X, Y = sympy.symbols("x y")
GENS = (X, Y)
_SYMBOLS = {"x": X, "y": Y}

Monomial = Tuple[int, int]


def var_symbol(var) -> sympy.Symbol:
    """Acepta "x", "y" o el símbolo correspondiente."""
    if isinstance(var, sympy.Symbol) and var in GENS:
        return var
    try:
        return _SYMBOLS[str(var)]
    except KeyError:
        raise AlgebraError(f"Variable desconocida: {var!r} (se espera x o y)")


def grlex_key(monomial: Monomial) -> Tuple[int, int]:
    i, j = monomial
    return (i + j, j)


class MultiPoly:
    """Polinomio bivariado inmutable sobre Q(i)."""

    __slots__ = ("poly", "_terms")

    def __init__(self, poly: sympy.Poly):
        self.poly = poly
        self._terms: Optional[Dict[Monomial, GaussianRational]] = None

    # ---- construcción ----

    @classmethod
    def from_expr(cls, expr) -> "MultiPoly":
        """
        Construye el polinomio a partir de una expresión de sympy en x, y.

        Raises:
            AlgebraError: Si la expresión no es polinomial en x, y sobre Q(i).
        """
        try:
            return cls(sympy.Poly(sympy.sympify(expr), *GENS, domain=QQ_I))
        except (BasePolynomialError, CoercionFailed, TypeError, ValueError) as e:
            raise AlgebraError(f"No es un polinomio en x, y sobre Q(i): {expr} ({e})")

    @classmethod
    def from_terms(cls, terms: Dict[Monomial, object]) -> "MultiPoly":
        rep = {}
        for monom, c in terms.items():
            element = GaussianRational.coerce(c).element
            if element:
                rep[tuple(monom)] = element
        if not rep:
            return cls.zero()
        return cls(sympy.Poly.from_dict(rep, *GENS, domain=QQ_I))

    @classmethod
    def constant(cls, value) -> "MultiPoly":
        return cls.from_expr(GaussianRational.coerce(value).to_sympy())

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls.constant(0)

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls.constant(1)

    @classmethod
    def variable(cls, var) -> "MultiPoly":
        return cls.from_expr(var_symbol(var))

    @classmethod
    def coerce(cls, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return cls.constant(value)

    # ---- vista dispersa ----

    def terms(self) -> Dict[Monomial, GaussianRational]:
        """Mapa {(i, j): coeficiente} sin ceros; vacío para el polinomio cero."""
        if self._terms is None:
            self._terms = {
                tuple(monom): GaussianRational.from_domain(coeff)
                for monom, coeff in self.poly.as_dict(native=True).items()
                if coeff
            }
        return self._terms

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self.terms())

    def constant_value(self) -> GaussianRational:
        """Coeficiente del monomio 1."""
        return self.terms().get((0, 0), ZERO)

    def total_degree(self) -> int:
        """Grado total; −1 para el polinomio cero."""
        return max((i + j for i, j in self.terms()), default=-1)

    def degree_in(self, var) -> int:
        """Grado en una variable; −1 para el polinomio cero."""
        idx = 0 if var_symbol(var) == X else 1
        return max((m[idx] for m in self.terms()), default=-1)

    def depends_on(self, var) -> bool:
        return self.degree_in(var) > 0

    def leading_monomial(self) -> Monomial:
        if self.is_zero():
            raise AlgebraError("El polinomio cero no tiene término principal")
        return max(self.terms(), key=grlex_key)

    def leading_coefficient(self) -> GaussianRational:
        return self.terms()[self.leading_monomial()]

    def min_degree_in(self, var) -> int:
        """Mayor potencia de la variable que divide al polinomio (0 si es cero)."""
        idx = 0 if var_symbol(var) == X else 1
        return min((m[idx] for m in self.terms()), default=0)

    def coefficient_in(self, var, k: int) -> "MultiPoly":
        """Coeficiente de var^k visto como polinomio en la otra variable."""
        idx = 0 if var_symbol(var) == X else 1
        picked = {}
        for monom, coeff in self.terms().items():
            if monom[idx] == k:
                rest = list(monom)
                rest[idx] = 0
                picked[tuple(rest)] = coeff
        return MultiPoly.from_terms(picked)

    # ---- aritmética ----

    def __add__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return MultiPoly(self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return MultiPoly(self.poly - other.poly)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return MultiPoly(other.poly - self.poly)

    def __mul__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return MultiPoly(self.poly * other.poly)

    __rmul__ = __mul__

    def __neg__(self):
        return MultiPoly(-self.poly)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise AlgebraError("Exponente de polinomio debe ser entero no negativo")
        return MultiPoly(self.poly ** exponent)

    def scale(self, value) -> "MultiPoly":
        return self * MultiPoly.constant(value)

    def diff(self, var) -> "MultiPoly":
        return MultiPoly(self.poly.diff(var_symbol(var)))

    def monic(self) -> "MultiPoly":
        """Divide por el coeficiente principal graded-lex."""
        if self.is_zero():
            return self
        return self.scale(self.leading_coefficient().inverse())

    # ---- evaluación y sustitución ----

    def evaluate(self, x0, y0) -> GaussianRational:
        x0 = GaussianRational.coerce(x0)
        y0 = GaussianRational.coerce(y0)
        total = ZERO
        for (i, j), coeff in self.terms().items():
            total = total + coeff * x0**i * y0**j
        return total

    def substitute(self, var, value) -> "MultiPoly":
        """Sustituye una variable por un escalar o por otro polinomio."""
        if isinstance(value, MultiPoly):
            replacement = value.as_expr()
        else:
            replacement = GaussianRational.coerce(value).to_sympy()
        return MultiPoly.from_expr(self.as_expr().subs(var_symbol(var), replacement))

    def translate(self, x0, y0) -> "MultiPoly":
        """P(x + x0, y + y0)."""
        x0 = GaussianRational.coerce(x0).to_sympy()
        y0 = GaussianRational.coerce(y0).to_sympy()
        return MultiPoly.from_expr(
            self.as_expr().subs({X: X + x0, Y: Y + y0}, simultaneous=True)
        )

    # ---- gcd, división exacta, resultante ----

    def gcd(self, other: "MultiPoly") -> "MultiPoly":
        """Máximo común divisor mónico (secuencia de subresultantes de sympy)."""
        other = MultiPoly.coerce(other)
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        return MultiPoly(self.poly.gcd(other.poly)).monic()

    def exquo(self, other: "MultiPoly") -> "MultiPoly":
        """
        División exacta.

        Raises:
            DivisionByZeroError: Si other es cero.
            AlgebraError: Si la división no es exacta.
        """
        other = MultiPoly.coerce(other)
        if other.is_zero():
            raise DivisionByZeroError("División por el polinomio cero")
        try:
            return MultiPoly(self.poly.exquo(other.poly))
        except ExactQuotientFailed:
            raise AlgebraError(f"{other} no divide a {self}")

    def divides(self, other: "MultiPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        try:
            other.exquo(self)
            return True
        except AlgebraError:
            return False

    def resultant(self, other: "MultiPoly", var) -> "MultiPoly":
        """
        Resultante de Sylvester respecto de var.

        Returns:
            MultiPoly: Polinomio en la otra variable.
        """
        sym = var_symbol(var)
        other_sym = Y if sym == X else X
        if self.is_zero() or other.is_zero():
            return MultiPoly.zero()
        p = sympy.Poly(self.as_expr(), sym, other_sym, domain=QQ_I)
        q = sympy.Poly(other.as_expr(), sym, other_sym, domain=QQ_I)
        res = p.resultant(q)
        expr = res.as_expr() if isinstance(res, sympy.Poly) else sympy.sympify(res)
        return MultiPoly.from_expr(expr)

    # ---- conversión ----

    def as_expr(self) -> sympy.Expr:
        return self.poly.as_expr()

    def univariate(self, var) -> sympy.Poly:
        """Poly univariado sobre QQ_I (requiere que no dependa de la otra variable)."""
        sym = var_symbol(var)
        other_sym = Y if sym == X else X
        if self.depends_on(other_sym):
            raise AlgebraError(f"{self} depende de {other_sym}")
        return sympy.Poly(self.as_expr(), sym, domain=QQ_I)

    def __eq__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self.terms() == other.terms()

    def __hash__(self):
        return hash(frozenset(self.terms().items()))

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        return format_poly(self)


def _maybe(value) -> Optional[MultiPoly]:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (GaussianRational, int, Fraction)):
        return MultiPoly.constant(value)
    return None


def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    """
    Imprime en la sintaxis del parser (`x^2*y - 1/2*y + (1+i)`).

    Los términos salen en orden graded-lex descendente.
    """
    terms = p.terms()
    if not terms:
        return "0"
    pieces: List[str] = []
    for monom in sorted(terms, key=grlex_key, reverse=True):
        coeff = terms[monom]
        mono = _monomial_text(*monom)
        if not mono:
            text = f"({coeff})" if coeff.needs_parens() else str(coeff)
        elif coeff == ONE:
            text = mono
        elif coeff == -ONE:
            text = f"-{mono}"
        else:
            ctext = f"({coeff})" if coeff.needs_parens() else str(coeff)
            text = f"{ctext}*{mono}"
        pieces.append(text)
    out = pieces[0]
    for text in pieces[1:]:
        if text.startswith("-"):
            out += f" - {text[1:]}"
        else:
            out += f" + {text}"
    return out


def factor_gaussian(p: MultiPoly, var="x") -> Tuple[GaussianRational, List[Tuple[MultiPoly, int]]]:
    """
    Factoriza un polinomio univariado sobre Q(i).

    Args:
        p: Polinomio que solo depende de var
        var: Variable ("x" o "y")

    Returns:
        (constante, [(factor mónico, multiplicidad), ...])
    """
    sym = var_symbol(var)
    p.univariate(sym)
    if p.is_zero():
        raise AlgebraError("No se factoriza el polinomio cero")
    _, factors = sympy.factor_list(p.as_expr(), sym, extension=sympy.I)
    result = []
    for factor, mult in factors:
        fpoly = MultiPoly.from_expr(factor)
        if fpoly.is_constant():
            continue
        result.append((fpoly.monic(), int(mult)))
    result.sort(key=lambda fm: (fm[0].degree_in(sym), str(fm[0])))
    return p.leading_coefficient(), result


def linear_root(factor: MultiPoly, var="x") -> GaussianRational:
    """Raíz de un factor de grado 1 en var."""
    sym = var_symbol(var)
    if factor.degree_in(sym) != 1:
        raise AlgebraError(f"{factor} no es lineal en {sym}")
    c1 = factor.coefficient_in(sym, 1).constant_value()
    c0 = factor.coefficient_in(sym, 0).constant_value()
    return -c0 / c1


def roots_gaussian(p: MultiPoly, var="x") -> Tuple[List[Tuple[GaussianRational, int]], List[Tuple[MultiPoly, int]]]:
    """
    Raíces exactas en Q(i) y factores irreducibles de grado ≥ 2.

    Returns:
        (raíces con multiplicidad, factores sin raíz racional gaussiana)
    """
    if p.is_constant():
        return [], []
    _, factors = factor_gaussian(p, var)
    roots, clusters = [], []
    for factor, mult in factors:
        if factor.degree_in(var) == 1:
            roots.append((linear_root(factor, var), mult))
        else:
            clusters.append((factor, mult))
    return roots, clusters


def resultant(p: MultiPoly, q: MultiPoly, var) -> MultiPoly:
    """Res_var(p, q)."""
    if p.is_zero() and q.is_zero():
        raise AlgebraError("La resultante requiere algún polinomio no nulo")
    return p.resultant(q, var)


X_POLY = MultiPoly.variable("x")
Y_POLY = MultiPoly.variable("y")
