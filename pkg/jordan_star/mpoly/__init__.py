from jordan_star.mpoly.poly import (
    Poly,
    UnknownVariable,
    VarSet,
    VarSetMismatch,
    poly_add,
    poly_diff,
    poly_mul,
    poly_substitute,
)

__all__ = [
    "Poly",
    "UnknownVariable",
    "VarSet",
    "VarSetMismatch",
    "poly_add",
    "poly_diff",
    "poly_mul",
    "poly_substitute",
]
