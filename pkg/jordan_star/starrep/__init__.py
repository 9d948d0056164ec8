from jordan_star.starrep.holomorphic import (
    HolomorphicField,
    h_poly,
    holomorphic_field,
    l_poly,
    perturb_scalar,
    rho_hat,
    rho_hat_table,
    tau_scalar,
)
from jordan_star.starrep.verify import (
    measure_kappa_h,
    star_side_table,
    verify_prop_2_7,
    verify_rho_homomorphism,
)

__all__ = [
    "HolomorphicField",
    "h_poly",
    "holomorphic_field",
    "l_poly",
    "measure_kappa_h",
    "perturb_scalar",
    "rho_hat",
    "rho_hat_table",
    "star_side_table",
    "tau_scalar",
    "verify_prop_2_7",
    "verify_rho_homomorphism",
]
