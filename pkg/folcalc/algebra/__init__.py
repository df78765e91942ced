# folcalc/algebra/__init__.py
from folcalc.algebra.gaussian import (
    GaussianRational,
    I,
    ONE,
    ZERO,
    gaussian_sqrt,
    gq_arith,
    is_rational_square,
)
from folcalc.algebra.polynomial import (
    MultiPoly,
    X,
    Y,
    X_POLY,
    Y_POLY,
    factor_gaussian,
    linear_root,
    resultant,
    roots_gaussian,
)
from folcalc.algebra.rational import (
    RationalFunction,
    partial_derivative,
    ratfun_arith,
    residue_at,
    total_residue,
)
from folcalc.algebra.linear import nullspace, rank, solve_linear

__all__ = [
    "GaussianRational", "I", "ONE", "ZERO", "gaussian_sqrt", "gq_arith", "is_rational_square",
    "MultiPoly", "X", "Y", "X_POLY", "Y_POLY", "factor_gaussian", "linear_root", "resultant",
    "roots_gaussian", "RationalFunction", "partial_derivative", "ratfun_arith", "residue_at",
    "total_residue", "nullspace", "rank", "solve_linear",
]
