# folcalc/foliation/classification.py
"""
Árbol de decisión para singularidades: todo pasa por el invariante
t = tr(M)²/det(M) y por tests de cuadrado racional, nunca por los
autovalores.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from folcalc.algebra.gaussian import GaussianRational, is_rational_square
from folcalc.foliation.foliation import Foliation, Matrix2, SingularPoint, is_zero_matrix, linear_part

logger = logging.getLogger(__name__)


class SingularityTag(str, Enum):
    REGULAR = "Regular"
    NON_DEGENERATE = "NonDegenerate"
    SADDLE_NODE_CANDIDATE = "SaddleNodeCandidate"
    NILPOTENT_REDUCIBLE = "NilpotentReducible"
    ZERO_LINEAR_PART_REDUCIBLE = "ZeroLinearPartReducible"
    RADIAL_DICRITICAL = "RadialDicritical"


class NonDegenerateSubtag(str, Enum):
    RESONANT_Q_MINUS = "ResonantQMinus"
    HYPERBOLIC = "Hyperbolic"
    REAL_IRRATIONAL_NON_RESONANT = "RealIrrationalNonResonant"
    RATIONAL_POSITIVE_REDUCIBLE = "RationalPositiveReducible"


@dataclass(frozen=True)
class SingularityClass:
    tag: SingularityTag
    subtag: Optional[NonDegenerateSubtag] = None
    # None representa t = ∞ (det = 0) o t indefinido (M = 0)
    t: Optional[GaussianRational] = None
    ratio: Optional[Fraction] = None

    def __post_init__(self):
        if (self.subtag is not None) != (self.tag == SingularityTag.NON_DEGENERATE):
            raise ValueError("subtag presente si y solo si tag = NonDegenerate")
        rational_subtags = (NonDegenerateSubtag.RESONANT_Q_MINUS, NonDegenerateSubtag.RATIONAL_POSITIVE_REDUCIBLE)
        if (self.ratio is not None) != (self.subtag in rational_subtags):
            raise ValueError("ratio presente si y solo si λ ∈ Q")

    @property
    def is_irreducible(self) -> bool:
        """Silla no degenerada con λ ∉ Q₊ o candidato a silla-nodo."""
        if self.tag == SingularityTag.SADDLE_NODE_CANDIDATE:
            return True
        return (self.tag == SingularityTag.NON_DEGENERATE
                and self.subtag != NonDegenerateSubtag.RATIONAL_POSITIVE_REDUCIBLE)

    @property
    def needs_blowup(self) -> bool:
        return self.tag != SingularityTag.REGULAR and not self.is_irreducible

    @property
    def is_non_resonant(self) -> bool:
        return self.subtag in (NonDegenerateSubtag.HYPERBOLIC, NonDegenerateSubtag.REAL_IRRATIONAL_NON_RESONANT)

    def label(self) -> str:
        return f"{self.tag.value}/{self.subtag.value}" if self.subtag else self.tag.value

    def to_dict(self) -> dict:
        return {
            "tag": self.tag.value,
            "subtag": self.subtag.value if self.subtag else None,
            "t": "infinity" if self.t is None else str(self.t),
            "ratio": None if self.ratio is None else str(self.ratio),
        }


REGULAR = SingularityClass(SingularityTag.REGULAR)


def classify_linear_part(m: Matrix2) -> SingularityClass:
    """Clasifica una parte lineal 2×2 sobre Q(i)."""
    (a, b), (c, d) = m
    trace = a + d
    det = a * d - b * c

    if is_zero_matrix(m):
        return SingularityClass(SingularityTag.ZERO_LINEAR_PART_REDUCIBLE)
    if det.is_zero():
        if trace.is_zero():
            return SingularityClass(SingularityTag.NILPOTENT_REDUCIBLE)
        return SingularityClass(SingularityTag.SADDLE_NODE_CANDIDATE)

    t = trace * trace / det
    nd = SingularityTag.NON_DEGENERATE
    if not t.is_real():
        return SingularityClass(nd, NonDegenerateSubtag.HYPERBOLIC, t)

    # λ + 1/λ = t − 2: λ es raíz de r² − (t−2)r + 1
    tr = t.re
    disc = tr * tr - 4 * tr
    root = is_rational_square(disc)
    if root is None:
        if disc > 0:
            return SingularityClass(nd, NonDegenerateSubtag.REAL_IRRATIONAL_NON_RESONANT, t)
        return SingularityClass(nd, NonDegenerateSubtag.HYPERBOLIC, t)

    r1 = ((tr - 2) + root) / 2
    r2 = ((tr - 2) - root) / 2
    ratio = min((r1, r2), key=lambda r: (abs(r), r))
    if ratio < 0:
        return SingularityClass(nd, NonDegenerateSubtag.RESONANT_Q_MINUS, t, ratio)
    if ratio == 1 and b.is_zero() and c.is_zero() and a == d:
        return SingularityClass(SingularityTag.RADIAL_DICRITICAL, t=t)
    return SingularityClass(nd, NonDegenerateSubtag.RATIONAL_POSITIVE_REDUCIBLE, t, ratio)


def classify_singularity(foliation: Foliation, point: SingularPoint) -> SingularityClass:
    """
    Clase del punto; Regular si la foliación no es singular allí.

    Raises:
        NonExactPointError: Si el punto no está en Q(i).
    """
    point.require_exact()
    if not foliation.is_singular_at(point.x, point.y):
        return REGULAR
    result = classify_linear_part(linear_part(foliation, point))
    logger.debug(f"Clasificación en {point}: {result.label()}")
    return result
