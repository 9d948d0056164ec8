from jordan_star.hds.tube import (
    TubeField,
    dpi,
    dpi_table,
    representation_sign,
    tube_field,
    verify_component_formulas,
    verify_dpi_homomorphism,
)
from jordan_star.hds.equivalence import (
    ALPHA_CANDIDATES,
    EquivalenceSolution,
    NoEquivalence,
    compare_with_theorem,
    m_paper,
    solve_equivalence,
    solve_operator_equivalence,
)

__all__ = [
    "ALPHA_CANDIDATES",
    "EquivalenceSolution",
    "NoEquivalence",
    "TubeField",
    "compare_with_theorem",
    "dpi",
    "dpi_table",
    "m_paper",
    "representation_sign",
    "solve_equivalence",
    "solve_operator_equivalence",
    "tube_field",
    "verify_component_formulas",
    "verify_dpi_homomorphism",
]
