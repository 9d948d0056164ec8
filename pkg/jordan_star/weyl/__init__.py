from jordan_star.weyl.fourier import fourier_conjugate, to_holomorphic_frame, verify_frame_maps
from jordan_star.weyl.moyal import (
    left_star_operator,
    moyal_cochain,
    moyal_star,
    moyal_terms,
    right_star_operator,
)
from jordan_star.weyl.operator import WeylOperator, apply, commutator, map_generators, weyl_mul
from jordan_star.weyl.verify import (
    run_star_suite,
    verify_covariance,
    verify_property_B,
    verify_rho_lr,
    verify_star_axioms,
)

__all__ = [
    "WeylOperator",
    "apply",
    "commutator",
    "fourier_conjugate",
    "left_star_operator",
    "map_generators",
    "moyal_cochain",
    "moyal_star",
    "moyal_terms",
    "right_star_operator",
    "run_star_suite",
    "to_holomorphic_frame",
    "verify_covariance",
    "verify_frame_maps",
    "verify_property_B",
    "verify_rho_lr",
    "verify_star_axioms",
    "weyl_mul",
]
