from jordan_star.kkt.graded import (
    GradedLieAlgebra,
    GradingClosureFailure,
    LieElement,
    bracket,
    build_kkt,
    theta,
)
from jordan_star.kkt.killing import compare_killing_forms, killing_closed_form, killing_intrinsic
from jordan_star.kkt.symplectic import (
    NotInQ,
    SingularPairing,
    SymplecticChartBasis,
    omega_form,
    spur,
    symplectic_basis,
)
from jordan_star.kkt.verify import verify_lie_structure

__all__ = [
    "GradedLieAlgebra",
    "GradingClosureFailure",
    "LieElement",
    "NotInQ",
    "SingularPairing",
    "SymplecticChartBasis",
    "bracket",
    "build_kkt",
    "compare_killing_forms",
    "killing_closed_form",
    "killing_intrinsic",
    "omega_form",
    "spur",
    "symplectic_basis",
    "theta",
    "verify_lie_structure",
]
