# folcalc/parsing/document.py
"""
Documentos de entrada en formato INI:

    [foliation]
    omega = "x*dy - (1/2)*y*dx"

    [triple]
    omega = "dy - (1/2*y^2 - x)*dx"
    eta = "y*dx"
    xi = "dx"

    [map]
    first = "x"
    second = "x*y"

    [curves]
    f1 = "x"
    f2 = "y"

    [params]
    R = "x"

Todas las expresiones se interpretan al cargar el documento, antes de que
corra ningún cálculo.
"""
import configparser
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from folcalc.algebra.polynomial import MultiPoly
from folcalc.algebra.rational import RationalFunction
from folcalc.errors import DocumentError
from folcalc.forms.calculus import OneForm, RationalMap
from folcalc.foliation.foliation import Foliation
from folcalc.parsing.expression import parse_form, parse_function, parse_polynomial
from folcalc.triples.projective import ProjectiveTriple

logger = logging.getLogger(__name__)

SECTIONS = ("foliation", "triple", "map", "curves", "params")
_FIXED_KEYS = {
    "foliation": ("omega",),
    "triple": ("omega", "eta", "xi"),
    "map": ("first", "second"),
}

_HEADER = re.compile(r"^\s*\[(?P<name>[^\]]+)\]")
_OPTION = re.compile(r"^(?P<key>[^=:\s][^=:]*?)\s*[=:]\s*")

Position = Tuple[int, int]


def _value_positions(text: str) -> Dict[Tuple[str, str], Position]:
    """(sección, clave) → (línea, columna 0-based donde empieza el valor)."""
    positions: Dict[Tuple[str, str], Position] = {}
    section = None
    for number, raw in enumerate(text.splitlines(), start=1):
        header = _HEADER.match(raw)
        if header:
            section = header.group("name").strip()
            continue
        if section is None or raw.lstrip().startswith(("#", ";")):
            continue
        option = _OPTION.match(raw)
        if option:
            column = option.end()
            if raw[column:column + 1] in ("'", '"'):
                column += 1
            positions[(section, option.group("key").strip())] = (number, column)
    return positions


def _unquote(value: str) -> str:
    value = value.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in ("'", '"'):
        return value[1:-1]
    return value


@dataclass
class InputDocument:
    source: str = ""
    sections: Dict[str, Dict[str, str]] = field(default_factory=dict)
    omega: Optional[OneForm] = None
    triple: Optional[ProjectiveTriple] = None
    map: Optional[RationalMap] = None
    curves: List[Tuple[str, MultiPoly]] = field(default_factory=list)
    params: Dict[str, str] = field(default_factory=dict)
    positions: Dict[Tuple[str, str], Position] = field(default_factory=dict)

    def foliation(self) -> Foliation:
        if self.omega is None:
            raise DocumentError(f"{self.source or 'El documento'} no tiene sección [foliation]")
        return Foliation.from_form(self.omega)

    def require_triple(self) -> ProjectiveTriple:
        if self.triple is None:
            raise DocumentError(f"{self.source or 'El documento'} no tiene sección [triple]")
        return self.triple

    def param(self, key: str, default: Optional[str] = None) -> Optional[str]:
        return self.params.get(key, default)

    def param_function(self, key: str) -> Optional[RationalFunction]:
        """Interpreta un parámetro como función racional, con su posición en el archivo."""
        if key not in self.params:
            return None
        line, column = self.positions.get(("params", key), (1, 0))
        return parse_function(self.params[key], line, column, self.source)

    def echo(self) -> Dict[str, Dict[str, str]]:
        return {name: dict(values) for name, values in self.sections.items()}


def parse_document(text: str, source: str = "") -> InputDocument:
    """
    Raises:
        DocumentError: Secciones o claves desconocidas, INI mal formado.
        ParseError: Expresión inválida (con línea y columna en el archivo).
    """
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text, source=source or "<input>")
    except configparser.Error as e:
        raise DocumentError(f"INI mal formado en {source or '<input>'}: {e}")

    unknown = [s for s in parser.sections() if s not in SECTIONS]
    if unknown:
        raise DocumentError(f"Secciones desconocidas: {', '.join(unknown)} (válidas: {', '.join(SECTIONS)})")

    doc = InputDocument(source=source, positions=_value_positions(text))
    for name in parser.sections():
        doc.sections[name] = {key: _unquote(value) for key, value in parser.items(name)}

    def where(section: str, key: str) -> Tuple[int, int]:
        return doc.positions.get((section, key), (1, 0))

    for name, keys in _FIXED_KEYS.items():
        if name not in doc.sections:
            continue
        values = doc.sections[name]
        extra = [k for k in values if k not in keys]
        missing = [k for k in keys if k not in values]
        if extra or missing:
            raise DocumentError(
                f"Sección [{name}]: se esperan exactamente {', '.join(keys)}"
                + (f"; sobran {', '.join(extra)}" if extra else "")
                + (f"; faltan {', '.join(missing)}" if missing else "")
            )

    if "foliation" in doc.sections:
        doc.omega = parse_form(doc.sections["foliation"]["omega"], *where("foliation", "omega"), source)
    if "triple" in doc.sections:
        forms = [parse_form(doc.sections["triple"][k], *where("triple", k), source) for k in ("omega", "eta", "xi")]
        doc.triple = ProjectiveTriple(*forms)
    if "map" in doc.sections:
        first, second = (parse_function(doc.sections["map"][k], *where("map", k), source) for k in ("first", "second"))
        doc.map = RationalMap(first, second)
    for key, value in doc.sections.get("curves", {}).items():
        doc.curves.append((key, parse_polynomial(value, *where("curves", key), source)))
    doc.params = dict(doc.sections.get("params", {}))

    logger.debug(f"Documento {source or '<input>'} cargado: secciones {list(doc.sections)}")
    return doc


def load_document(path: str) -> InputDocument:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise DocumentError(f"No se puede leer {path}: {e}")
    return parse_document(text, source=path)
