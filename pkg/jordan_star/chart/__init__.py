from jordan_star.chart.darboux import (
    ChartContext,
    SeriesNotTerminating,
    build_chart,
    moment_map,
    poisson,
    verify_strongly_hamiltonian,
)

__all__ = [
    "ChartContext",
    "SeriesNotTerminating",
    "build_chart",
    "moment_map",
    "poisson",
    "verify_strongly_hamiltonian",
]
