from jordan_star.exactnum.scalar import (
    NU,
    NotDivisible,
    Scalar,
    as_scalar,
    format_rational,
    gaussian,
    rational,
    scalar_add,
    scalar_div_exact,
    scalar_mul,
    scalar_neg,
)

__all__ = [
    "NU",
    "NotDivisible",
    "Scalar",
    "as_scalar",
    "format_rational",
    "gaussian",
    "rational",
    "scalar_add",
    "scalar_div_exact",
    "scalar_mul",
    "scalar_neg",
]
