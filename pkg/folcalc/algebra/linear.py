# folcalc/algebra/linear.py
"""
Sistemas lineales exactos sobre Q(i).

Usa `DomainMatrix` de sympy sobre `QQ_I` (eliminación gaussiana en el
cuerpo, sin simplificación simbólica). Las funciones no guardan estado, así
que son reentrantes.
"""
import logging
from typing import List, Optional, Sequence

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from folcalc.algebra.gaussian import GaussianRational

logger = logging.getLogger(__name__)

Row = Sequence[object]


def _to_domain(rows: Sequence[Row], ncols: int) -> DomainMatrix:
    elements = [
        [GaussianRational.coerce(v).element for v in row]
        for row in rows
    ]
    return DomainMatrix(elements, (len(rows), ncols), QQ_I)


def _entry(matrix, i: int, j: int) -> GaussianRational:
    return GaussianRational.from_domain(matrix[i][j])


def solve_linear(rows: Sequence[Row], rhs: Sequence[object]) -> Optional[List[GaussianRational]]:
    """
    Resuelve A·v = b.

    Args:
        rows: Filas de A
        rhs: Vector b

    Returns:
        Una solución (variables libres en 0) o None si el sistema es incompatible.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = _to_domain(augmented, ncols + 1).rref()
    if ncols in pivots:
        return None
    dense = reduced.to_list()
    solution = [GaussianRational(0)] * ncols
    for r, col in enumerate(pivots):
        solution[col] = _entry(dense, r, ncols)
    return solution


def nullspace(rows: Sequence[Row], ncols: Optional[int] = None) -> List[List[GaussianRational]]:
    """
    Base del núcleo de A, obtenida de la forma escalonada reducida.

    Cada vector tiene un 1 en su variable libre.
    """
    if not rows:
        if ncols is None:
            return []
        return [[GaussianRational(int(i == k)) for i in range(ncols)] for k in range(ncols)]
    ncols = ncols if ncols is not None else len(rows[0])
    reduced, pivots = _to_domain(rows, ncols).rref()
    dense = reduced.to_list()
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [GaussianRational(0)] * ncols
        vec[f] = GaussianRational(1)
        for r, col in enumerate(pivots):
            vec[col] = -_entry(dense, r, f)
        basis.append(vec)
    return basis


def rank(rows: Sequence[Row]) -> int:
    if not rows:
        return 0
    _, pivots = _to_domain(rows, len(rows[0])).rref()
    return len(pivots)
