# folcalc/cli/commands.py
"""
Registro de comandos del CLI.

Cada comando se declara con el decorador `command`, que guarda el handler,
su descripción y los argumentos de argparse. Los handlers devuelven un
`Outcome` (o un dict, que equivale a un Outcome con estado ok).
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from folcalc.algebra.gaussian import GaussianRational
from folcalc.errors import DepthExhaustedError, FolcalcError, PreconditionError
from folcalc.foliation.classification import classify_singularity
from folcalc.foliation.foliation import Foliation, linear_part, format_matrix, singular_locus
from folcalc.foliation.indices import cs_index, projective_line_index_sum
from folcalc.foliation.logarithmic import logarithmic_representation
from folcalc.holonomy.integrator import LoopSpec, holonomy_multiplier, resonance_integral
from folcalc.parsing.document import InputDocument
from folcalc.parsing.expression import parse_function, parse_polynomial
from folcalc.reports import Status
from folcalc.resolution.seidenberg import is_generalized_curve, is_nonresonant_extended_gc, seidenberg_resolve
from folcalc.triples.gauge_ode import gauge_ode_classify
from folcalc.triples.normal_forms import normal_form_library
from folcalc.triples.projective import GaugeData, modify_triple, verify_triple
from folcalc.triples.riccati import (
    RiccatiCoefficients,
    bernoulli_recognize,
    riccati_canonical_triple,
    riccati_example_gauge,
    riccati_invariant_fibers,
    riccati_recognize,
    riccati_reduce,
)

logger = logging.getLogger(__name__)

Argument = Tuple[Tuple[str, ...], Dict[str, Any]]

# Registro global de comandos
COMMAND_REGISTRY: Dict[str, Dict[str, Any]] = {}


@dataclass
class Outcome:
    result: Dict[str, Any] = field(default_factory=dict)
    status: Status = Status.OK


def command(name: str, description: str, arguments: Sequence[Argument] = (), files: bool = True):
    """
    Decorador para registrar un comando.

    Args:
        name: Nombre del subcomando
        description: Ayuda que muestra argparse
        arguments: Pares (flags, kwargs) para add_argument
        files: Si el comando recibe uno o más archivos de entrada
    """
    def decorator(func: Callable):
        COMMAND_REGISTRY[name] = {
            "name": name,
            "description": description,
            "handler": func,
            "arguments": list(arguments),
            "files": files,
        }
        return func
    return decorator


def arg(*flags: str, **kwargs) -> Argument:
    return flags, kwargs


# ---- utilidades de opciones ----

def _function_option(text: Optional[str], option: str):
    if text is None:
        return None
    return parse_function(text, source=f"--{option}")


def _scalar_option(text: Optional[str], option: str) -> GaussianRational:
    value = _function_option(text or "0", option)
    if not value.is_constant():
        raise PreconditionError(f"--{option} debe ser una constante de Q(i)")
    return value.constant_value()


def _from_option_or_param(args, doc: InputDocument, key: str):
    value = getattr(args, key, None)
    if value is not None:
        return _function_option(value, key)
    return doc.param_function(key)


def _exact_points(foliation: Foliation):
    points = singular_locus(foliation)
    return [p for p in points if p.exact], [p for p in points if not p.exact]


# ---- comandos ----

@command("classify", "Singularidades de la foliación y su clase")
def classify_command(args, doc: InputDocument) -> Outcome:
    foliation = doc.foliation()
    exact, clusters = _exact_points(foliation)
    singularities = []
    for p in exact:
        entry = p.to_dict()
        entry["linear_part"] = format_matrix(linear_part(foliation, p))
        entry["class"] = classify_singularity(foliation, p).to_dict()
        singularities.append(entry)
    return Outcome({
        "foliation": str(foliation),
        "singularities": singularities,
        "clusters": [c.to_dict() for c in clusters],
    })


@command(
    "resolve",
    "Resolución de Seidenberg en cada singularidad exacta",
    [arg("--max-depth", type=int, default=None, help="Cota de profundidad (por defecto MAX_DEPTH)")],
)
def resolve_command(args, doc: InputDocument) -> Outcome:
    foliation = doc.foliation()
    exact, clusters = _exact_points(foliation)
    trees = []
    status = Status.OK
    for p in exact:
        tree = seidenberg_resolve(foliation, p, args.max_depth)
        entry = tree.to_dict()
        if tree.complete:
            entry["generalized_curve"] = is_generalized_curve(tree)
            try:
                entry["nonresonant_extended_gc"] = is_nonresonant_extended_gc(tree)
            except FolcalcError as e:
                entry["nonresonant_extended_gc"] = None
                entry["nonresonant_extended_gc_error"] = e.to_dict()
        else:
            status = Status.RESOURCE_EXCEEDED
            entry["error"] = DepthExhaustedError(f"Profundidad agotada en {p}").to_dict()
        trees.append(entry)
    return Outcome({
        "foliation": str(foliation),
        "trees": trees,
        "clusters": [c.to_dict() for c in clusters],
    }, status)


@command("verify-triple", "Comprueba las relaciones de la terna proyectiva")
def verify_triple_command(args, doc: InputDocument) -> Outcome:
    check = verify_triple(doc.require_triple())
    status = Status.OK if check.all_hold else Status.CHECK_FAILED
    return Outcome({"triple": doc.triple.to_dict(), "check": check.to_dict()}, status)


@command(
    "modify-triple",
    "Aplica el gauge (g, h) a la terna",
    [arg("--g", default="1", help="Factor g (no nulo)"), arg("--h", default="0", help="Función h")],
)
def modify_triple_command(args, doc: InputDocument) -> Outcome:
    gauge = GaugeData(_function_option(args.g, "g"), _function_option(args.h, "h"))
    modified = modify_triple(doc.require_triple(), gauge)
    check = verify_triple(modified)
    status = Status.OK if check.all_hold else Status.CHECK_FAILED
    return Outcome({"gauge": gauge.to_dict(), "triple": modified.to_dict(), "check": check.to_dict()}, status)


@command(
    "riccati",
    "Terna canónica de p dy − (y²c − yb − a)dx",
    [arg("--p", default="1"), arg("--a", default="0"), arg("--b", default="0"), arg("--c", default="0")],
    files=False,
)
def riccati_command(args) -> Outcome:
    coeffs = RiccatiCoefficients(*(parse_polynomial(getattr(args, k), source=f"--{k}") for k in "pabc"))
    triple = riccati_canonical_triple(coeffs)
    check = verify_triple(triple)
    gauged = modify_triple(triple, riccati_example_gauge(coeffs))
    roots, clusters = riccati_invariant_fibers(coeffs)
    status = Status.OK if check.all_hold else Status.CHECK_FAILED
    return Outcome({
        "coefficients": coeffs.to_dict(),
        "triple": triple.to_dict(),
        "check": check.to_dict(),
        "example_gauge": riccati_example_gauge(coeffs).to_dict(),
        "gauged_triple": gauged.to_dict(),
        "invariant_fibers": [f"x = {r}" for r in roots] + [f"{f} = 0" for f in clusters],
    }, status)


@command(
    "riccati-reduce",
    "Reducción constructiva a dy − (½y² − φ(x))dx",
    [arg("--R", dest="R", default=None), arg("--g", default=None), arg("--deg-bound", type=int, default=None)],
)
def riccati_reduce_command(args, doc: InputDocument) -> Outcome:
    R = _from_option_or_param(args, doc, "R")
    g = _from_option_or_param(args, doc, "g")
    if R is None:
        raise PreconditionError("Falta R (opción --R o clave R en [params])")
    reduction = riccati_reduce(doc.require_triple(), R, g if g is not None else 1, args.deg_bound)
    return Outcome(reduction.to_dict())


@command(
    "cs-index",
    "Índices de Camacho–Sad a lo largo de un eje invariante",
    [arg("--curve", choices=["y=0", "x=0"], default="y=0"), arg("--projective-line", action="store_true")],
)
def cs_index_command(args, doc: InputDocument) -> Outcome:
    foliation = doc.foliation()
    exact, _ = _exact_points(foliation)
    on_axis = [p for p in exact if (p.y if args.curve == "y=0" else p.x).is_zero()]
    result: Dict[str, Any] = {
        "foliation": str(foliation),
        "curve": args.curve,
        "indices": [{"point": p.to_dict(), "index": str(cs_index(foliation, p, args.curve))} for p in on_axis],
    }
    if args.projective_line:
        result["projective_line"] = projective_line_index_sum(foliation, args.curve).to_dict()
    return Outcome(result)


@command(
    "log-rep",
    "Representación logarítmica c·ω/Πfⱼ = Σλⱼ dfⱼ/fⱼ",
    [arg("--curves", default=None, help="Curvas separadas por comas (o sección [curves])")],
)
def log_rep_command(args, doc: InputDocument) -> Outcome:
    if args.curves:
        curves = [parse_polynomial(text, source="--curves") for text in args.curves.split(",")]
    else:
        curves = [f for _, f in doc.curves]
    representation = logarithmic_representation(doc.foliation(), curves)
    if representation is None:
        return Outcome({"curves": [str(f) for f in curves], "representation": None}, Status.CHECK_FAILED)
    return Outcome({"representation": representation.to_dict()})


def _loop_arguments(extra: Sequence[Argument] = ()) -> List[Argument]:
    return [
        arg("--axis", choices=["y=0", "x=0"], default="y=0"),
        arg("--radius", type=float, default=1.0),
        arg("--steps", type=int, default=None),
        *extra,
    ]


def _loop(args) -> LoopSpec:
    return LoopSpec.from_config(args.axis, args.radius, args.steps)


@command(
    "holonomy",
    "Multiplicador de holonomía de la separatriz",
    _loop_arguments([arg("--method", choices=["DOP853", "RK45", "RK4"], default=None)]),
)
def holonomy_command(args, doc: InputDocument) -> Outcome:
    estimate = holonomy_multiplier(doc.foliation(), _loop(args), args.method)
    return Outcome(estimate.to_dict())


@command(
    "resonance",
    "Test de resonancia exp∮tr(DX)",
    _loop_arguments([arg("--denom-bound", type=int, default=None)]),
)
def resonance_command(args, doc: InputDocument) -> Outcome:
    return Outcome(resonance_integral(doc.foliation(), _loop(args), args.denom_bound).to_dict())


@command("gauge-ode", "Casos de s′ − ½s² = −φ²", [arg("--s", required=True)], files=False)
def gauge_ode_command(args) -> Outcome:
    return Outcome(gauge_ode_classify(_function_option(args.s, "s")).to_dict())


@command("bernoulli", "Reconoce formas de Riccati y de Bernoulli")
def bernoulli_command(args, doc: InputDocument) -> Outcome:
    omega = doc.foliation().omega
    riccati = riccati_recognize(omega)
    bernoulli = bernoulli_recognize(omega)
    return Outcome({
        "form": str(omega),
        "riccati": None if riccati is None else riccati.to_dict(),
        "bernoulli": None if bernoulli is None else bernoulli.to_dict(),
    })


@command(
    "normal-form",
    "Formas normales resonant_kl y saddle_node_closed",
    [
        arg("--kind", choices=["resonant_kl", "saddle_node_closed"], required=True),
        arg("--k", type=int, default=1),
        arg("--l", type=int, default=1),
        arg("--c", default="0"),
        arg("--lam", default="0"),
    ],
    files=False,
)
def normal_form_command(args) -> Outcome:
    if args.kind == "resonant_kl":
        form = normal_form_library("resonant_kl", k=args.k, l=args.l, c=_scalar_option(args.c, "c"))
    else:
        form = normal_form_library("saddle_node_closed", k=args.k, lam=_scalar_option(args.lam, "lam"))
    return Outcome(form.to_dict())
