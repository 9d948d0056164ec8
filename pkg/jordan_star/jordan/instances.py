"""Built-in Euclidean Jordan algebras and the structure-constants loader."""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Callable, Dict, List

from sympy import Matrix, QQ, Rational, zeros

from jordan_star.exactnum.matrices import rational_zeros
from jordan_star.jordan.algebra import InvalidDimension, JordanAlgebra, ValidationFailed

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def make_rank_one() -> JordanAlgebra:
    """V = R with the ordinary product; its KKT algebra is sl(2, R)."""
    structure = rational_zeros(1, 1, 1)
    structure[0, 0, 0] = QQ(1)
    return JordanAlgebra("rank1", 1, 1, ("e",), structure, [QQ(1)], lie_dimension=3)


def make_spin_factor(k: int) -> JordanAlgebra:
    """R + R^(k-1) with (s,u)o(t,v) = (st + <u,v>, sv + tu); rank 2, row so(k,2)."""
    if k < 2:
        raise InvalidDimension(f"spin factor needs k >= 2, got {k}")
    structure = rational_zeros(k, k, k)
    structure[0, 0, 0] = QQ(1)
    for i in range(1, k):
        structure[0, i, i] = QQ(1)
        structure[i, 0, i] = QQ(1)
        structure[i, i, 0] = QQ(1)
    unit = [QQ(1)] + [QQ(0)] * (k - 1)
    names = ("e0",) + tuple(f"e{i}" for i in range(1, k))
    return JordanAlgebra(f"spin:{k}", k, 2, names, structure, unit, lie_dimension=(k + 1) * (k + 2) // 2)


def _sym_basis(p: int) -> List:
    basis = []
    for a in range(p):
        m = zeros(p, p)
        m[a, a] = 1
        basis.append((f"E{a + 1}{a + 1}", m))
    for a in range(p):
        for b in range(a + 1, p):
            m = zeros(p, p)
            m[a, b] = 1
            m[b, a] = 1
            basis.append((f"F{a + 1}{b + 1}", m))
    return basis


def _sym_coordinates(p: int, m: Matrix) -> List:
    diag = [m[a, a] for a in range(p)]
    off = [m[a, b] for a in range(p) for b in range(a + 1, p)]
    return diag + off


def make_sym_matrices(p: int) -> JordanAlgebra:
    """Real symmetric p x p matrices with x o y = (xy + yx)/2; rank p, row sp(p, R)."""
    if p < 1:
        raise InvalidDimension(f"Sym(p) needs p >= 1, got {p}")
    basis = _sym_basis(p)
    n = len(basis)
    structure = rational_zeros(n, n, n)
    for a, (_, ma) in enumerate(basis):
        for b, (_, mb) in enumerate(basis):
            prod = (ma * mb + mb * ma) * Rational(1, 2)
            for c, value in enumerate(_sym_coordinates(p, prod)):
                structure[a, b, c] = QQ.from_sympy(value)
    unit = [QQ(1)] * p + [QQ(0)] * (n - p)
    names = tuple(name for name, _ in basis)
    return JordanAlgebra(f"sym:{p}", n, p, names, structure, unit, lie_dimension=p * (2 * p + 1))


def load_from_structure_constants(data: dict, validate: bool = True) -> JordanAlgebra:
    """Build an algebra from {name, dim, rank, unit, structure} and validate the axioms."""
    try:
        dim = int(data["dim"])
        rank = int(data["rank"])
        unit = list(data["unit"])
        structure = data["structure"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed algebra definition: {exc}") from exc
    if dim < 1 or rank < 1:
        raise InvalidDimension(f"dim and rank must be positive, got {dim}, {rank}")
    names = tuple(data.get("basis") or [f"e{a + 1}" for a in range(dim)])
    algebra = JordanAlgebra(
        str(data.get("name", "loaded")),
        dim,
        rank,
        names,
        structure,
        unit,
        lie_dimension=data.get("lie_dimension"),
    )
    if validate:
        from jordan_star.jordan.validate import validate_jordan

        report = validate_jordan(algebra)
        failed = report.failures()
        if failed:
            raise ValidationFailed(failed[0].name, failed[0].residual or "")
    return algebra


def load_from_file(path: str | Path) -> JordanAlgebra:
    with open(path, "r") as f:
        return load_from_structure_constants(json.load(f))


BUILTINS: Dict[str, str] = {
    "rank1": "R, n=1, r=1 -> sl(2,R)",
    "spin:k": "R + R^(k-1), n=k, r=2 -> so(k,2)   (k >= 2)",
    "sym:p": "Sym(p,R), n=p(p+1)/2, r=p -> sp(p,R)   (p >= 1)",
    "file:path": "structure-constants JSON, validated on load",
}


def from_selector(selector: str) -> JordanAlgebra:
    """rank1 | spin:k | sym:p | file:path"""
    kind, _, arg = selector.partition(":")
    factories: Dict[str, Callable[[str], JordanAlgebra]] = {
        "spin": lambda s: make_spin_factor(int(s)),
        "sym": lambda s: make_sym_matrices(int(s)),
        "file": load_from_file,
    }
    if kind == "rank1" and not arg:
        return make_rank_one()
    if kind in factories and arg:
        return factories[kind](arg)
    raise ValueError(f"unknown algebra selector {selector!r}")
