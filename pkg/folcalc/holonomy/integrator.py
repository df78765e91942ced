# folcalc/holonomy/integrator.py
"""
Holonomía numérica de una separatriz y test de resonancia exp∮tr(DX).

La separatriz se lleva siempre a {y = 0}: con eje "x=0" se intercambian las
coordenadas antes de integrar. El lazo es x = r·e^{iθ}, θ ∈ [0, 2π], y la
coordenada transversal y sigue la hoja:

    dy/dθ = (−A/B)(x, y) · i·x
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from scipy.integrate import solve_ivp

from folcalc.algebra.polynomial import X, Y
from folcalc.config import Config
from folcalc.errors import IntegrationError, NonInvariantAxisError, PreconditionError
from folcalc.foliation.foliation import Foliation

logger = logging.getLogger(__name__)

AXES = ("y=0", "x=0")
METHODS = ("DOP853", "RK45", "RK4")
MIN_STEPS = 64
TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class LoopSpec:
    axis: str = "y=0"
    radius: float = 1.0
    seeds: Tuple[complex, ...] = ()
    steps: int = 256

    def __post_init__(self):
        if self.axis not in AXES:
            raise PreconditionError(f"Eje desconocido: {self.axis} (se espera y=0 o x=0)")
        if not self.radius > 0:
            raise PreconditionError("El radio del lazo debe ser positivo")
        if self.steps < MIN_STEPS:
            raise PreconditionError(f"steps debe ser ≥ {MIN_STEPS}")
        seeds = tuple(complex(s) for s in (self.seeds or Config.get("HOLONOMY_SEEDS", [1e-3, 2e-3])))
        if len(seeds) < 2 or any(s == 0 for s in seeds) or len(set(seeds)) != len(seeds):
            raise PreconditionError("Se necesitan al menos dos semillas distintas y no nulas")
        object.__setattr__(self, "seeds", seeds)

    @classmethod
    def from_config(cls, axis: str = "y=0", radius: float = 1.0, steps: Optional[int] = None,
                    seeds: Sequence[complex] = ()) -> "LoopSpec":
        if steps is None:
            steps = int(Config.get("HOLONOMY_STEPS", 256))
        return cls(axis, radius, tuple(seeds), steps)


@dataclass(frozen=True)
class HolonomyEstimate:
    multiplier: complex
    error_estimate: float
    return_values: List[Tuple[complex, complex]] = field(default_factory=list)
    method: str = "DOP853"
    loop: Optional[LoopSpec] = None

    def to_dict(self) -> dict:
        return {
            "multiplier": _complex_dict(self.multiplier),
            "abs": abs(self.multiplier),
            "error_estimate": self.error_estimate,
            "method": self.method,
            "return_map": [
                {"seed": _complex_dict(s), "value": _complex_dict(v)} for s, v in self.return_values
            ],
        }


@dataclass(frozen=True)
class ResonanceResult:
    value: complex
    integral: complex
    verdict: str                  # "resonant", "non_resonant" o "regular"
    order: Optional[int] = None   # orden de la raíz de la unidad
    winding: int = 0

    def to_dict(self) -> dict:
        return {
            "value": _complex_dict(self.value),
            "integral": _complex_dict(self.integral),
            "verdict": self.verdict,
            "root_of_unity_order": self.order,
            "singularities_inside": self.winding,
        }


def _complex_dict(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _oriented(foliation: Foliation, axis: str) -> Tuple[sympy.Expr, sympy.Expr]:
    """(A, B) con el eje llevado a {y = 0}."""
    a, b = foliation.A.as_expr(), foliation.B.as_expr()
    if axis == "x=0":
        swap = {X: Y, Y: X}
        a, b = b.subs(swap, simultaneous=True), a.subs(swap, simultaneous=True)
    if not sympy.expand(a.subs(Y, 0)).is_zero:
        raise NonInvariantAxisError(f"El eje {axis} no es invariante")
    return a, b


def _loop_points(radius: float, steps: int) -> np.ndarray:
    theta = np.linspace(0.0, TWO_PI, steps, endpoint=False)
    return radius * np.exp(1j * theta)


def _check_loop(b_on_axis: Callable, radius: float, steps: int) -> None:
    values = np.abs(np.broadcast_to(b_on_axis(_loop_points(radius, steps)), (steps,)))
    if values.min() < 1e-12:
        raise IntegrationError(f"Hay una singularidad sobre el lazo |x| = {radius}")


def _rk4(rhs: Callable, y0: complex, steps: int) -> complex:
    """Runge–Kutta clásico de orden 4 con paso fijo 2π/steps."""
    h = TWO_PI / steps
    y = complex(y0)
    theta = 0.0
    for _ in range(steps):
        k1 = rhs(theta, y)
        k2 = rhs(theta + h / 2, y + h * k1 / 2)
        k3 = rhs(theta + h / 2, y + h * k2 / 2)
        k4 = rhs(theta + h, y + h * k3)
        y = y + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6
        theta += h
    return y


def _return_map(slope: Callable, radius: float, y0: complex, method: str, steps: int, rtol: float) -> complex:
    def rhs(theta, y):
        x = radius * np.exp(1j * theta)
        return complex(slope(x, y) * 1j * x)

    if method == "RK4":
        value = _rk4(rhs, y0, steps)
    else:
        sol = solve_ivp(
            lambda t, v: np.array([rhs(t, v[0])]),
            (0.0, TWO_PI),
            np.array([y0], dtype=complex),
            method=method,
            rtol=rtol,
            atol=rtol * abs(y0) * 1e-3,
            max_step=TWO_PI / MIN_STEPS,
        )
        if not sol.success:
            raise IntegrationError(f"Fallo de integración desde y₀ = {y0}: {sol.message}")
        value = complex(sol.y[0, -1])
    if not np.isfinite(value):
        raise IntegrationError(f"La hoja desde y₀ = {y0} escapa al infinito")
    return value


def _richardson(pairs: Sequence[Tuple[complex, complex]]) -> Tuple[complex, float]:
    """
    Con q(s) = P(s)/s = m + c·s + O(s²), elimina el término lineal con las
    dos semillas más pequeñas; el error se estima con la tercera si existe.
    """
    ordered = sorted(pairs, key=lambda sv: abs(sv[0]))
    (s1, v1), (s2, v2) = ordered[0], ordered[1]
    q1, q2 = v1 / s1, v2 / s2
    multiplier = (s2 * q1 - s1 * q2) / (s2 - s1)
    if len(ordered) > 2:
        s3, v3 = ordered[2]
        q3 = v3 / s3
        alternative = (s3 * q1 - s1 * q3) / (s3 - s1)
        error = abs(multiplier - alternative)
    else:
        error = abs(multiplier - q1)
    return multiplier, float(error)


def holonomy_multiplier(foliation: Foliation, loop: LoopSpec, method: Optional[str] = None,
                        rtol: Optional[float] = None) -> HolonomyEstimate:
    """
    Multiplicador de la holonomía de la separatriz a lo largo del lazo.

    Cada semilla se integra en un hilo; el orden de las semillas fija el
    resultado.

    Args:
        foliation: Foliación con el eje invariante
        loop: Lazo y semillas transversales
        method: "DOP853", "RK45" (scipy) o "RK4" (paso fijo)
        rtol: Tolerancia relativa de los métodos adaptativos

    Raises:
        NonInvariantAxisError: Si el eje no es invariante.
        IntegrationError: Si la integración falla o el multiplicador es 0.
    """
    method = method or Config.get("HOLONOMY_METHOD", "DOP853")
    if method not in METHODS:
        raise PreconditionError(f"Método desconocido: {method}")
    rtol = float(rtol if rtol is not None else Config.get("HOLONOMY_RTOL", 1e-12))

    a, b = _oriented(foliation, loop.axis)
    slope = sympy.lambdify((X, Y), -a / b, "numpy")
    _check_loop(sympy.lambdify(X, b.subs(Y, 0), "numpy"), loop.radius, loop.steps)

    workers = max(1, min(int(Config.get("WORKERS", 4)), len(loop.seeds)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        values = list(pool.map(
            lambda s: _return_map(slope, loop.radius, s, method, loop.steps, rtol),
            loop.seeds,
        ))
    pairs = list(zip(loop.seeds, values))
    multiplier, error = _richardson(pairs)
    if abs(multiplier) == 0 or not np.isfinite(error):
        raise IntegrationError("Multiplicador nulo o estimación de error no finita")
    logger.info(f"Holonomía en {loop.axis}: {multiplier:.12g} (error ≈ {error:.2e})")
    return HolonomyEstimate(multiplier, error, pairs, method, loop)


def _root_of_unity(value: complex, denom_bound: int, tol: float) -> Optional[int]:
    if abs(abs(value) - 1.0) > tol:
        return None
    turns = np.angle(value) / TWO_PI
    approx = Fraction(float(turns)).limit_denominator(denom_bound)
    if abs(float(approx) - turns) > tol:
        return None
    return approx.denominator


def resonance_integral(foliation: Foliation, loop: LoopSpec, denom_bound: Optional[int] = None,
                       tol: Optional[float] = None) -> ResonanceResult:
    """
    exp ∮ tr(DX) sobre el lazo de la separatriz, con X = −B∂x + A∂y.

    Sobre la hoja {y = 0} el tiempo de X cumple dx/dt = −B(x, 0), así que
    ∮ tr(DX) dt = ∮ tr(DX)(x, 0)/(−B(x, 0)) dx (regla del trapecio sobre
    el círculo).

    Returns:
        ResonanceResult con veredicto "resonant" si el valor es raíz de la
        unidad de orden ≤ denom_bound, "regular" si no hay singularidad
        dentro del lazo.
    """
    if denom_bound is None:
        denom_bound = int(Config.get("DENOM_BOUND", 64))
    if tol is None:
        tol = float(Config.get("RESONANCE_TOL", 1e-6))
    a, b = _oriented(foliation, loop.axis)
    b_axis = b.subs(Y, 0)
    trace = (sympy.diff(-b, X) + sympy.diff(a, Y)).subs(Y, 0)
    _check_loop(sympy.lambdify(X, b_axis, "numpy"), loop.radius, loop.steps)

    xs = _loop_points(loop.radius, loop.steps)
    dtheta = TWO_PI / loop.steps

    def loop_integral(expr: sympy.Expr) -> complex:
        values = np.broadcast_to(sympy.lambdify(X, expr, "numpy")(xs), xs.shape)
        return complex(np.sum(values * 1j * xs) * dtheta)

    winding = int(round((loop_integral(sympy.diff(b_axis, X) / b_axis) / (TWO_PI * 1j)).real))
    integral = loop_integral(trace / -b_axis)
    value = complex(np.exp(integral))
    if winding == 0:
        return ResonanceResult(value, integral, "regular", winding=winding)
    order = _root_of_unity(value, denom_bound, tol)
    verdict = "resonant" if order is not None else "non_resonant"
    logger.info(f"exp∮tr(DX) = {value:.12g}: {verdict}")
    return ResonanceResult(value, integral, verdict, order, winding)
