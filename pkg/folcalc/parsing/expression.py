# folcalc/parsing/expression.py
"""
Parser descendente recursivo de expresiones racionales y 1-formas.

Gramática:
    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | base ('^' uint)?
    base   := '(' expr ')' | 'x' | 'y' | 'i' | 'dx' | 'dy' | uint

'/' es siempre el operador de división (1/2 es la división de dos enteros)
y '−' (U+2212) es un alias de '-'. Una 1-forma es cualquier expresión
lineal en dx, dy.

El grado de cada valor intermedio está acotado por MAX_DEGREE y una potencia
no puede producir coeficientes de más de MAX_COEFFICIENT_BITS bits; lo que
excede las cotas es un ParseError antes de calcularse.
"""
import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from folcalc.algebra.gaussian import I as GAUSSIAN_I
from folcalc.algebra.polynomial import MultiPoly
from folcalc.algebra.rational import RationalFunction
from folcalc.errors import ParseError
from folcalc.forms.calculus import OneForm

logger = logging.getLogger(__name__)

Parsed = Union[RationalFunction, OneForm]

_TOKEN_RE = re.compile(
    r"(?P<space>[ \t]+)"
    r"|(?P<number>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()])"
)
_IDENTIFIERS = {"x", "y", "i", "dx", "dy"}
_MINUS_ALIASES = str.maketrans({"−": "-"})
MAX_EXPONENT = 256
MAX_DEGREE = 64
MAX_COEFFICIENT_BITS = 4096


@dataclass(frozen=True)
class Token:
    kind: str     # number | ident | op | end
    text: str
    column: int   # 1-based


@dataclass(frozen=True)
class _Form:
    """Valor intermedio lineal en dx, dy."""
    A: RationalFunction
    B: RationalFunction


class ExpressionParser:
    """
    Parser de una sola expresión; las posiciones de los errores se
    desplazan por `line` y `column_offset` para reportarlas respecto del
    documento de origen.
    """

    def __init__(self, text: str, line: int = 1, column_offset: int = 0, source: str = ""):
        self.text = text.translate(_MINUS_ALIASES)
        self.line = line
        self.column_offset = column_offset
        self.source = source
        self.tokens = self._tokenize()
        self.pos = 0

    # ---- léxico ----

    def _error(self, message: str, column: int) -> ParseError:
        return ParseError(message, self.line, column + self.column_offset, self.source)

    def _tokenize(self) -> List[Token]:
        tokens: List[Token] = []
        index = 0
        while index < len(self.text):
            match = _TOKEN_RE.match(self.text, index)
            if match is None:
                raise self._error(f"Carácter inesperado {self.text[index]!r}", index + 1)
            kind = match.lastgroup
            if kind != "space":
                text = match.group()
                if kind == "ident" and text not in _IDENTIFIERS:
                    raise self._error(f"Identificador desconocido {text!r}", index + 1)
                tokens.append(Token(kind, text, index + 1))
            index = match.end()
        tokens.append(Token("end", "", len(self.text) + 1))
        return tokens

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _accept(self, *ops: str) -> Optional[Token]:
        token = self.current
        if token.kind == "op" and token.text in ops:
            return self._advance()
        return None

    # ---- sintaxis ----

    def parse(self) -> Parsed:
        if self.current.kind == "end":
            raise self._error("Expresión vacía", 1)
        value = self._expr()
        if self.current.kind != "end":
            raise self._error(f"Símbolo inesperado {self.current.text!r}", self.current.column)
        if isinstance(value, _Form):
            return OneForm(value.A, value.B)
        return value

    def _expr(self):
        value = self._term()
        while True:
            token = self._accept("+", "-")
            if token is None:
                return value
            rhs = self._term()
            value = self._combine(value, rhs, token)

    def _term(self):
        value = self._factor()
        while True:
            token = self._accept("*", "/")
            if token is None:
                return value
            rhs = self._factor()
            value = self._multiply(value, rhs, token)

    def _factor(self):
        sign = self._accept("+", "-")
        if sign is not None:
            value = self._factor()
            return _negate(value) if sign.text == "-" else value
        base = self._base()
        caret = self._accept("^")
        if caret is None:
            return base
        exponent = self.current
        if exponent.kind != "number":
            raise self._error("El exponente debe ser un entero no negativo", exponent.column)
        self._advance()
        k = int(exponent.text)
        if k > MAX_EXPONENT:
            raise self._error(f"Exponente demasiado grande (máximo {MAX_EXPONENT})", exponent.column)
        if isinstance(base, _Form):
            if k != 1:
                raise self._error("nonlinear differential: potencia de una diferencial", caret.column)
            return base
        num_degree, den_degree = _degrees(base)
        self._check_degree((k * num_degree, k * den_degree), exponent.column)
        if k * _coefficient_bits(base) > MAX_COEFFICIENT_BITS:
            raise self._error(f"Coeficientes demasiado grandes (máximo {MAX_COEFFICIENT_BITS} bits)", exponent.column)
        return base ** k

    def _base(self):
        token = self.current
        if self._accept("("):
            value = self._expr()
            if self._accept(")") is None:
                raise self._error("Falta ')'", self.current.column)
            return value
        if token.kind == "number":
            self._advance()
            return RationalFunction(int(token.text))
        if token.kind == "ident":
            self._advance()
            if token.text == "x" or token.text == "y":
                return RationalFunction.variable(token.text)
            if token.text == "i":
                return RationalFunction(MultiPoly.constant(GAUSSIAN_I))
            one, zero = RationalFunction.one(), RationalFunction.zero()
            return _Form(one, zero) if token.text == "dx" else _Form(zero, one)
        if token.kind == "end":
            raise self._error("Fin inesperado de la expresión", token.column)
        raise self._error(f"Símbolo inesperado {token.text!r}", token.column)

    # ---- semántica ----

    def _check_degree(self, degrees: Tuple[int, int], column: int) -> None:
        if max(degrees) > MAX_DEGREE:
            raise self._error(f"Grado demasiado alto (máximo {MAX_DEGREE})", column)

    def _combine(self, lhs, rhs, token: Token):
        sign = 1 if token.text == "+" else -1
        (n1, d1), (n2, d2) = _degrees(lhs), _degrees(rhs)
        self._check_degree((max(n1 + d2, n2 + d1), d1 + d2), token.column)
        lhs_form, rhs_form = isinstance(lhs, _Form), isinstance(rhs, _Form)
        if lhs_form and rhs_form:
            return _Form(lhs.A + sign * rhs.A, lhs.B + sign * rhs.B)
        if not lhs_form and not rhs_form:
            return lhs + sign * rhs
        function = rhs if lhs_form else lhs
        if function.is_zero():
            form = lhs if lhs_form else rhs
            return form if lhs_form or sign == 1 else _negate(form)
        raise self._error("No se puede sumar una función y una 1-forma", token.column)

    def _multiply(self, lhs, rhs, token: Token):
        (n1, d1), (n2, d2) = _degrees(lhs), _degrees(rhs)
        lhs_form, rhs_form = isinstance(lhs, _Form), isinstance(rhs, _Form)
        if token.text == "*":
            self._check_degree((n1 + n2, d1 + d2), token.column)
            if lhs_form and rhs_form:
                raise self._error("nonlinear differential: producto de diferenciales", token.column)
            if lhs_form:
                return _Form(lhs.A * rhs, lhs.B * rhs)
            if rhs_form:
                return _Form(rhs.A * lhs, rhs.B * lhs)
            return lhs * rhs
        if rhs_form:
            raise self._error("nonlinear differential: división por una diferencial", token.column)
        if rhs.is_zero():
            raise self._error("División por cero", token.column)
        self._check_degree((n1 + d2, d1 + n2), token.column)
        if lhs_form:
            return _Form(lhs.A / rhs, lhs.B / rhs)
        return lhs / rhs


def _negate(value):
    if isinstance(value, _Form):
        return _Form(-value.A, -value.B)
    return -value


def _parts(value) -> Tuple[RationalFunction, ...]:
    return (value.A, value.B) if isinstance(value, _Form) else (value,)


def _degrees(value) -> Tuple[int, int]:
    """Cota (grado del numerador, grado del denominador) de un valor intermedio."""
    parts = _parts(value)
    return (
        max(max(p.num.total_degree(), 0) for p in parts),
        max(max(p.den.total_degree(), 0) for p in parts),
    )


def _coefficient_bits(value) -> int:
    bits = 1
    for part in _parts(value):
        for poly in (part.num, part.den):
            for coeff in poly.terms().values():
                for q in (coeff.re, coeff.im):
                    bits = max(bits, q.numerator.bit_length(), q.denominator.bit_length())
    return bits

def parse_expression(text: str, line: int = 1, column_offset: int = 0, source: str = "") -> Parsed:
    """
    Interpreta una expresión como RationalFunction o como OneForm.

    Raises:
        ParseError: Con línea y columna del primer error.
    """
    return ExpressionParser(text, line, column_offset, source).parse()


def parse_function(text: str, line: int = 1, column_offset: int = 0, source: str = "") -> RationalFunction:
    value = parse_expression(text, line, column_offset, source)
    if isinstance(value, OneForm):
        raise ParseError("Se esperaba una función, no una 1-forma", line, column_offset + 1, source)
    return value


def parse_form(text: str, line: int = 1, column_offset: int = 0, source: str = "") -> OneForm:
    """Como parse_expression, pero exige una 1-forma (el 0 se acepta como forma nula)."""
    value = parse_expression(text, line, column_offset, source)
    if isinstance(value, RationalFunction):
        if value.is_zero():
            return OneForm.zero()
        raise ParseError("Se esperaba una 1-forma en dx, dy", line, column_offset + 1, source)
    return value


def parse_polynomial(text: str, line: int = 1, column_offset: int = 0, source: str = "") -> MultiPoly:
    value = parse_function(text, line, column_offset, source)
    if not value.is_polynomial():
        raise ParseError("Se esperaba un polinomio", line, column_offset + 1, source)
    return value.as_poly()
