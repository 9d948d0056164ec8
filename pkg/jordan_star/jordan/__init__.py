from jordan_star.jordan.algebra import (
    InvalidDimension,
    JordanAlgebra,
    JordanElement,
    L_operator,
    ValidationFailed,
    apply_matrix,
    box_operator,
    jordan_trace,
    quadratic_rep,
    tau_form,
    triple_product,
)
from jordan_star.jordan.instances import (
    BUILTINS,
    from_selector,
    load_from_file,
    load_from_structure_constants,
    make_rank_one,
    make_spin_factor,
    make_sym_matrices,
)
from jordan_star.jordan.validate import validate_jordan

__all__ = [
    "BUILTINS",
    "InvalidDimension",
    "JordanAlgebra",
    "JordanElement",
    "L_operator",
    "ValidationFailed",
    "apply_matrix",
    "box_operator",
    "from_selector",
    "jordan_trace",
    "load_from_file",
    "load_from_structure_constants",
    "make_rank_one",
    "make_spin_factor",
    "make_sym_matrices",
    "quadratic_rep",
    "tau_form",
    "triple_product",
    "validate_jordan",
]
