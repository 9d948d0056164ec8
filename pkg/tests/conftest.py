import sys
from pathlib import Path

import pytest

project_root = Path(__file__).resolve().parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from jordan_star.chart.darboux import build_chart
from jordan_star.jordan.instances import make_rank_one, make_spin_factor, make_sym_matrices
from jordan_star.kkt.graded import build_kkt
from jordan_star.kkt.symplectic import symplectic_basis


def _chart(algebra, mu):
    g = build_kkt(algebra, mu)
    return build_chart(g, symplectic_basis(g))


@pytest.fixture(scope="session")
def sl2():
    """rank1 at mu = 1: n = r = 1, g = sl(2, R)."""
    return _chart(make_rank_one(), 1)


@pytest.fixture(scope="session")
def sl2_half():
    return _chart(make_rank_one(), "1/2")


@pytest.fixture(scope="session")
def spin3():
    return _chart(make_spin_factor(3), 1)


@pytest.fixture(scope="session")
def sym2():
    return _chart(make_sym_matrices(2), 1)
