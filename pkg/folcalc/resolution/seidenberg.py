# folcalc/resolution/seidenberg.py
"""
Resolución de Seidenberg y predicados de curva generalizada.

El árbol se construye en un solo hilo: el libro de autointersecciones es
estado secuencial.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from folcalc.algebra.polynomial import MultiPoly
from folcalc.config import Config
from folcalc.errors import (
    IncompleteTreeError,
    NonExactPointError,
    PreconditionError,
    SaddleNodePresentError,
)
from folcalc.foliation.classification import SingularityClass, SingularityTag, classify_singularity
from folcalc.foliation.foliation import Foliation, SingularPoint
from folcalc.resolution.blowup import BlowupCharts, blow_up, strict_transform_curve

logger = logging.getLogger(__name__)

# Lectura adoptada de "cada componente conexa de invariante del divisor"
COMPONENT_READING = "componentes conexas de la parte invariante del divisor de resolución"

Divisors = List[Tuple[int, MultiPoly]]


@dataclass
class LeafSingularity:
    point: SingularPoint
    singularity: SingularityClass
    chart: str
    divisors: Tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "point": self.point.to_dict(),
            "chart": self.chart,
            "class": self.singularity.to_dict(),
            "divisors": list(self.divisors),
        }


@dataclass
class ResolutionNode:
    divisor_id: int
    depth: int
    charts: BlowupCharts
    parent_chart: str
    self_intersection: int = -1
    children: List["ResolutionNode"] = field(default_factory=list)
    leaf_singularities: List[LeafSingularity] = field(default_factory=list)
    tangencies: List[str] = field(default_factory=list)

    @property
    def center(self) -> SingularPoint:
        return self.charts.center

    @property
    def dicritical(self) -> bool:
        return self.charts.dicritical

    def to_dict(self) -> dict:
        return {
            "divisor_id": self.divisor_id,
            "depth": self.depth,
            "parent_chart": self.parent_chart,
            "self_intersection": self.self_intersection,
            **self.charts.to_dict(),
            "children": [child.divisor_id for child in self.children],
            "leaf_singularities": [leaf.to_dict() for leaf in self.leaf_singularities],
            "tangencies": self.tangencies,
        }


@dataclass
class ResolutionTree:
    root: Foliation
    root_point: SingularPoint
    root_class: SingularityClass
    nodes: List[ResolutionNode] = field(default_factory=list)
    depth: int = 0
    complete: bool = True
    error_code: Optional[str] = None
    decrements: int = 0
    pending: List[LeafSingularity] = field(default_factory=list)

    def node(self, divisor_id: int) -> ResolutionNode:
        return self.nodes[divisor_id - 1]

    @property
    def leaves(self) -> List[LeafSingularity]:
        if not self.nodes:
            return [LeafSingularity(self.root_point, self.root_class, self.root.chart)]
        return [leaf for node in self.nodes for leaf in node.leaf_singularities]

    @property
    def blowups(self) -> int:
        return len(self.nodes)

    def self_intersection_sum(self) -> int:
        return sum(node.self_intersection for node in self.nodes)

    def invariant_components(self) -> List[Set[int]]:
        """
        Componentes conexas de los divisores invariantes; dos divisores se
        tocan si alguna hoja del árbol está sobre ambos.
        """
        invariant = [n.divisor_id for n in self.nodes if not n.dicritical]
        parent: Dict[int, int] = {d: d for d in invariant}

        def find(d: int) -> int:
            while parent[d] != d:
                parent[d] = parent[parent[d]]
                d = parent[d]
            return d

        for leaf in self.leaves:
            ids = [d for d in leaf.divisors if d in parent]
            for other in ids[1:]:
                parent[find(other)] = find(ids[0])

        groups: Dict[int, Set[int]] = {}
        for d in invariant:
            groups.setdefault(find(d), set()).add(d)
        return sorted(groups.values(), key=min)

    def to_dict(self) -> dict:
        return {
            "root": str(self.root),
            "root_point": self.root_point.to_dict(),
            "root_class": self.root_class.to_dict(),
            "depth": self.depth,
            "complete": self.complete,
            "error_code": self.error_code,
            "blowups": self.blowups,
            "decrements": self.decrements,
            "self_intersection_sum": self.self_intersection_sum(),
            "nodes": [node.to_dict() for node in self.nodes],
            "pending": [leaf.to_dict() for leaf in self.pending],
            "invariant_components": [sorted(c) for c in self.invariant_components()],
            "component_reading": COMPONENT_READING,
        }


def seidenberg_resolve(foliation: Foliation, point: SingularPoint, max_depth: Optional[int] = None) -> ResolutionTree:
    """
    Hace blow-ups hasta que todas las singularidades sobre el divisor sean
    irreducibles o regulares. Las singularidades sobre un divisor dicrítico
    quedan como hojas sin más blow-ups.

    Args:
        foliation: Foliación de partida
        point: Singularidad exacta a resolver
        max_depth: Cota de profundidad (por defecto MAX_DEPTH de la configuración)

    Returns:
        ResolutionTree: Si la cota se agota, árbol parcial con complete=False
            y error_code "depth_exhausted".
    """
    if max_depth is None:
        max_depth = int(Config.get("MAX_DEPTH", 32))
    if max_depth < 1:
        raise PreconditionError("max_depth debe ser ≥ 1")
    point.require_exact()

    root_class = classify_singularity(foliation, point)
    tree = ResolutionTree(foliation, point, root_class)
    if not root_class.needs_blowup:
        logger.info(f"{point} ya es {root_class.label()}: árbol de profundidad 0")
        return tree

    _blow(tree, foliation, point, [], 1, None, max_depth)
    if not tree.complete:
        logger.warning(f"Profundidad agotada ({max_depth}): árbol parcial")
    return tree


def _blow(tree: ResolutionTree, foliation: Foliation, center: SingularPoint, divisors: Divisors,
          depth: int, parent: Optional[ResolutionNode], max_depth: int) -> None:
    charts = blow_up(foliation, center)
    node = ResolutionNode(len(tree.nodes) + 1, depth, charts, foliation.chart)
    tree.nodes.append(node)
    if parent is not None:
        parent.children.append(node)
    tree.depth = max(tree.depth, depth)

    through = [(d, curve) for d, curve in divisors if curve.evaluate(center.x, center.y).is_zero()]
    for d, _ in through:
        tree.node(d).self_intersection -= 1
        tree.decrements += 1

    chart1_divisors: Divisors = [(node.divisor_id, MultiPoly.variable("x"))]
    chart2_divisors: Divisors = [(node.divisor_id, MultiPoly.variable("y"))]
    for d, curve in through:
        chart1_divisors.append((d, strict_transform_curve(curve, center, 1)))
        chart2_divisors.append((d, strict_transform_curve(curve, center, 2)))

    points = charts.divisor_points()
    if points.clusters:
        raise NonExactPointError(
            f"Singularidades fuera de Q(i) sobre el divisor {node.divisor_id}: "
            + ", ".join(str(c) for c in points.clusters)
        )
    if charts.dicritical:
        node.tangencies = points.tangencies
        logger.info(f"Divisor {node.divisor_id} dicrítico; tangencias: {points.tangencies}")

    targets = [(charts.chart1, q, chart1_divisors) for q in points.singular]
    if points.corner_at_infinity:
        targets.append((charts.chart2, SingularPoint.at(0, 0), chart2_divisors))
    for chart, q, chart_divisors in targets:
        leaf = _leaf(chart, q, chart_divisors, node)
        # la rama termina en un divisor dicrítico
        if charts.dicritical or not leaf.singularity.needs_blowup:
            node.leaf_singularities.append(leaf)
        else:
            _process(tree, chart, leaf, chart_divisors, node, max_depth)


def _leaf(foliation: Foliation, point: SingularPoint, divisors: Divisors, node: ResolutionNode) -> LeafSingularity:
    singularity = classify_singularity(foliation, point)
    through = tuple(d for d, curve in divisors if curve.evaluate(point.x, point.y).is_zero())
    return LeafSingularity(point, singularity, f"D{node.divisor_id} {foliation.chart}", through)


def _process(tree: ResolutionTree, foliation: Foliation, leaf: LeafSingularity, divisors: Divisors,
             node: ResolutionNode, max_depth: int) -> None:
    if node.depth + 1 > max_depth:
        tree.complete = False
        tree.error_code = "depth_exhausted"
        node.leaf_singularities.append(leaf)
        tree.pending.append(leaf)
        return
    _blow(tree, foliation, leaf.point, divisors, node.depth + 1, node, max_depth)


# ---- predicados ----

def _require_complete(tree: ResolutionTree) -> None:
    if not tree.complete:
        raise IncompleteTreeError("El árbol de resolución está incompleto")


def _has_saddle_node(tree: ResolutionTree) -> bool:
    return any(leaf.singularity.tag == SingularityTag.SADDLE_NODE_CANDIDATE for leaf in tree.leaves)


def is_generalized_curve(tree: ResolutionTree) -> bool:
    """No dicrítica y sin silla-nodos en la resolución."""
    _require_complete(tree)
    if any(node.dicritical for node in tree.nodes):
        return False
    return not _has_saddle_node(tree)


def is_nonresonant_extended_gc(tree: ResolutionTree) -> bool:
    """
    Cada componente conexa de la parte invariante del divisor contiene una
    singularidad no resonante (Hyperbolic o RealIrrationalNonResonant).

    Un árbol de profundidad 0 cuenta como una única componente que contiene
    la singularidad raíz.

    Raises:
        IncompleteTreeError: Si el árbol no está completo.
        SaddleNodePresentError: Si alguna hoja es silla-nodo.
    """
    _require_complete(tree)
    if _has_saddle_node(tree):
        raise SaddleNodePresentError("Hay silla-nodos en la resolución")
    if not tree.nodes:
        return tree.root_class.is_non_resonant
    leaves = tree.leaves
    for component in tree.invariant_components():
        on_component = [leaf for leaf in leaves if component.intersection(leaf.divisors)]
        if not any(leaf.singularity.is_non_resonant for leaf in on_component):
            return False
    return True
