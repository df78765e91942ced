# folcalc/holonomy/mobius.py
"""
Transformaciones de Möbius z ↦ (az + b)/(cz + d).

Modo numérico: entradas complejas normalizadas a det = 1 (SL(2, C)).
Modo exacto: entradas en Q(i) normalizadas proyectivamente (primera entrada
no nula igual a 1), es decir, elementos de PGL(2, Q(i)).
"""
import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from folcalc.algebra.gaussian import GaussianRational, gaussian_sqrt
from folcalc.errors import AlgebraError, PreconditionError

logger = logging.getLogger(__name__)

DET_TOL = 1e-12


class _Infinity:
    """Punto ∞ de la esfera de Riemann."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "∞"

    __str__ = __repr__


INFINITY = _Infinity()

Scalar = Union[complex, GaussianRational]
SpherePoint = Union[complex, GaussianRational, _Infinity]


def _is_inf(z) -> bool:
    return z is INFINITY


def format_point(z: SpherePoint) -> str:
    if _is_inf(z) or isinstance(z, GaussianRational):
        return str(z)
    z = complex(z)
    return f"{z.real:.12g}{z.imag:+.12g}i"


@dataclass(frozen=True)
class MobiusMap:
    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    exact: bool = False

    # ---- construcción ----

    @classmethod
    def numeric(cls, a, b, c, d) -> "MobiusMap":
        """Normaliza a det = 1 dividiendo por una raíz cuadrada del determinante."""
        m = np.array([[a, b], [c, d]], dtype=complex)
        det = np.linalg.det(m)
        if abs(det) < DET_TOL:
            raise PreconditionError("Transformación de Möbius degenerada (det = 0)")
        m = m / np.sqrt(det)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @classmethod
    def exact_map(cls, a, b, c, d) -> "MobiusMap":
        entries = [GaussianRational.coerce(v) for v in (a, b, c, d)]
        if (entries[0] * entries[3] - entries[1] * entries[2]).is_zero():
            raise PreconditionError("Transformación de Möbius degenerada (det = 0)")
        lead = next(v for v in entries if not v.is_zero())
        a, b, c, d = (v / lead for v in entries)
        return cls(a, b, c, d, exact=True)

    @classmethod
    def identity(cls, exact: bool = False) -> "MobiusMap":
        return cls.exact_map(1, 0, 0, 1) if exact else cls.numeric(1, 0, 0, 1)

    def _rebuild(self, a, b, c, d) -> "MobiusMap":
        return MobiusMap.exact_map(a, b, c, d) if self.exact else MobiusMap.numeric(a, b, c, d)

    def to_numeric(self) -> "MobiusMap":
        if not self.exact:
            return self
        return MobiusMap.numeric(*(complex(v) for v in (self.a, self.b, self.c, self.d)))

    def matrix(self) -> np.ndarray:
        return np.array([[complex(self.a), complex(self.b)], [complex(self.c), complex(self.d)]])

    # ---- grupo ----

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """self ∘ other."""
        if self.exact and other.exact:
            a, b, c, d = self.a, self.b, self.c, self.d
            e, f, g, h = other.a, other.b, other.c, other.d
            return MobiusMap.exact_map(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        m = self.matrix() @ other.matrix()
        return MobiusMap.numeric(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def inverse(self) -> "MobiusMap":
        """Adjunta [[d, −b], [−c, a]]."""
        return self._rebuild(self.d, -self.b, -self.c, self.a)

    def commutator(self, other: "MobiusMap") -> "MobiusMap":
        """[f, g] = f g f⁻¹ g⁻¹."""
        return self.compose(other).compose(self.inverse()).compose(other.inverse())

    def is_identity(self, tol: float = 1e-12) -> bool:
        if self.exact:
            return self.b.is_zero() and self.c.is_zero() and self.a == self.d
        return abs(self.b) < tol and abs(self.c) < tol and abs(self.a - self.d) < tol

    def equals(self, other: "MobiusMap", tol: float = 1e-12) -> bool:
        """Igualdad como transformaciones (M y −M coinciden)."""
        if self.exact and other.exact:
            return self == other
        m, n = self.to_numeric().matrix(), other.to_numeric().matrix()
        return min(np.abs(m - n).max(), np.abs(m + n).max()) < tol

    def trace(self) -> Scalar:
        return self.a + self.d

    # ---- acción sobre la esfera ----

    def __call__(self, z: SpherePoint) -> SpherePoint:
        a, b, c, d = self.a, self.b, self.c, self.d
        if not self.exact:
            z = z if _is_inf(z) else complex(z)
        if _is_inf(z):
            return INFINITY if _zero(c) else a / c
        den = c * z + d
        if _zero(den):
            return INFINITY
        return (a * z + b) / den

    def to_dict(self) -> dict:
        return {
            "a": format_point(self.a),
            "b": format_point(self.b),
            "c": format_point(self.c),
            "d": format_point(self.d),
            "exact": self.exact,
        }

    def __str__(self):
        a, b, c, d = (format_point(v) for v in (self.a, self.b, self.c, self.d))
        return f"z ↦ ({a}·z + {b})/({c}·z + {d})"


def _zero(v: Scalar) -> bool:
    if isinstance(v, GaussianRational):
        return v.is_zero()
    return abs(v) < DET_TOL


def mobius_ops(f: MobiusMap, g: MobiusMap, op: str) -> MobiusMap:
    """
    Args:
        op: "compose" (f∘g), "inverse" (f⁻¹) o "commutator" ([f, g])
    """
    if op == "compose":
        return f.compose(g)
    if op == "inverse":
        return f.inverse()
    if op == "commutator":
        return f.commutator(g)
    raise PreconditionError(f"Operación de Möbius desconocida: {op}")


def fixed_points(f: MobiusMap) -> List[SpherePoint]:
    """
    Raíces de cz² + (d − a)z − b = 0, con ∞ cuando c = 0.

    Un punto parabólico aparece una sola vez. En modo exacto, si el
    discriminante no es un cuadrado en Q(i) se devuelven aproximaciones
    complejas.

    Raises:
        PreconditionError: Si f es la identidad.
    """
    if f.is_identity():
        raise PreconditionError("La identidad fija todos los puntos")
    a, b, c, d = f.a, f.b, f.c, f.d
    if _zero(c):
        if _zero(a - d):
            return [INFINITY]
        return [b / (d - a), INFINITY]

    disc = (a - d) ** 2 + 4 * b * c
    if f.exact:
        root = gaussian_sqrt(disc)
        if root is None:
            logger.debug(f"Puntos fijos de {f} fuera de Q(i); se aproximan")
            return fixed_points(f.to_numeric())
    else:
        root = complex(np.sqrt(complex(disc)))
    points = [(a - d - root) / (2 * c), (a - d + root) / (2 * c)]
    if _zero(root):
        return points[:1]
    return points


def _chordal(z: SpherePoint, w: SpherePoint) -> float:
    """Distancia cordal en la esfera de Riemann."""
    if _is_inf(z) and _is_inf(w):
        return 0.0
    if _is_inf(z) or _is_inf(w):
        finite = complex(w if _is_inf(z) else z)
        return 2.0 / np.sqrt(1.0 + abs(finite) ** 2)
    z, w = complex(z), complex(w)
    return 2.0 * abs(z - w) / np.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))


def _same_point(z: SpherePoint, w: SpherePoint, tol: float) -> bool:
    exact_z = _is_inf(z) or isinstance(z, GaussianRational)
    exact_w = _is_inf(w) or isinstance(w, GaussianRational)
    if exact_z and exact_w:
        if _is_inf(z) or _is_inf(w):
            return _is_inf(z) and _is_inf(w)
        return z == w
    return _chordal(z, w) < tol


def _apply(f: MobiusMap, z: SpherePoint) -> SpherePoint:
    if f.exact and (_is_inf(z) or isinstance(z, GaussianRational)):
        return f(z)
    return f.to_numeric()(z)


def _is_invariant(points: Sequence[SpherePoint], gens: Sequence[MobiusMap], tol: float) -> bool:
    for f in gens:
        for z in points:
            image = _apply(f, z)
            if not any(_same_point(image, w, tol) for w in points):
                return False
    return True


def _candidate_maps(moving: Sequence[MobiusMap]) -> List[MobiusMap]:
    maps = list(moving)
    maps += [f.compose(f) for f in moving]
    maps += [f.compose(g) for f, g in itertools.combinations(moving, 2)]
    return [f for f in maps if not f.is_identity()]


def is_elementary(gens: Sequence[MobiusMap], tol: float = 1e-9) -> Tuple[bool, List[SpherePoint]]:
    """
    Busca un conjunto de a lo sumo dos puntos invariante por todos los
    generadores.

    Cada generador fija o intercambia los puntos de un par invariante, así
    que el par está entre los puntos fijos de algún generador, de su
    cuadrado o del producto de dos generadores.

    Returns:
        (es elemental, conjunto testigo)
    """
    if not gens:
        raise PreconditionError("Se necesita al menos un generador")
    moving = [f for f in gens if not f.is_identity()]
    if not moving:
        return True, [INFINITY]

    candidates: List[SpherePoint] = []
    for f in _candidate_maps(moving):
        for z in fixed_points(f):
            if not any(_same_point(z, w, tol) for w in candidates):
                candidates.append(z)

    for z in candidates:
        if _is_invariant([z], moving, tol):
            return True, [z]
    for z, w in itertools.combinations(candidates, 2):
        if _is_invariant([z, w], moving, tol):
            return True, [z, w]
    return False, []


def linearize_h1(a, b) -> Tuple[MobiusMap, MobiusMap]:
    """
    Conjuga h(z) = az/(1 + bz), a ≠ 1, con z ↦ az mediante
    φ(z) = z/(1 + βz), β = b/(1 − a).

    Returns:
        (φ, z ↦ az), exactos si a, b están en Q(i)
    """
    try:
        a, b = GaussianRational.coerce(a), GaussianRational.coerce(b)
        build = MobiusMap.exact_map
    except AlgebraError:
        a, b = complex(a), complex(b)
        build = MobiusMap.numeric
    if a == 1 or a == 0:
        raise PreconditionError("linearize_h1 requiere a ∉ {0, 1}")
    beta = b / (1 - a)
    return build(1, 0, beta, 1), build(a, 0, 0, 1)
