"""Multivariate polynomials over Scalar in named variables."""
from __future__ import annotations

import logging
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from jordan_star.errors import JordanStarError
from jordan_star.exactnum.scalar import Scalar, as_scalar

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


class VarSetMismatch(JordanStarError):
    """Operands live over different variable sets."""


class UnknownVariable(JordanStarError):
    """A variable name is not part of the variable set."""


class VarSet:
    """Ordered, duplicate-free tuple of variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self._index = {name: i for i, name in enumerate(self.names)}

    # --- standard coordinate systems ---
    @classmethod
    def phase_space(cls, n: int) -> "VarSet":
        """(l1..ln, lp1..lpn): positions, then the conjugate momenta."""
        return cls([f"l{a}" for a in range(1, n + 1)] + [f"lp{a}" for a in range(1, n + 1)])

    @classmethod
    def fourier(cls, n: int) -> "VarSet":
        return cls([f"l{a}" for a in range(1, n + 1)] + [f"eta{a}" for a in range(1, n + 1)])

    @classmethod
    def holomorphic(cls, n: int) -> "VarSet":
        return cls([f"z{a}" for a in range(1, n + 1)] + [f"zb{a}" for a in range(1, n + 1)])

    @classmethod
    def tube(cls, n: int) -> "VarSet":
        return cls([f"z{a}" for a in range(1, n + 1)])

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"{name!r} is not in {self.names}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarSet({', '.join(self.names)})"

    @property
    def half(self) -> int:
        if len(self.names) % 2:
            raise VarSetMismatch(f"{self} has no symplectic pairing")
        return len(self.names) // 2


def _add_exps(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Finite map exponent tuple -> Scalar over a VarSet."""

    __slots__ = ("varset", "_terms")

    def __init__(self, varset: VarSet, terms: Mapping[Sequence[int], object] | None = None):
        self.varset = varset
        clean: Dict[Exponents, Scalar] = {}
        width = len(varset)
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != width or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent {exps} for {varset}")
            value = as_scalar(coeff)
            if exps in clean:
                value = clean[exps] + value
            if value:
                clean[exps] = value
            else:
                clean.pop(exps, None)
        self._terms = clean

    @classmethod
    def _from_clean(cls, varset: VarSet, terms: Dict[Exponents, Scalar]) -> "Poly":
        obj = cls.__new__(cls)
        obj.varset = varset
        obj._terms = terms
        return obj

    # --- constructors ---
    @classmethod
    def zero(cls, varset: VarSet) -> "Poly":
        return cls._from_clean(varset, {})

    @classmethod
    def constant(cls, varset: VarSet, value) -> "Poly":
        value = as_scalar(value)
        return cls._from_clean(varset, {(0,) * len(varset): value} if value else {})

    @classmethod
    def var(cls, varset: VarSet, name: str) -> "Poly":
        exps = [0] * len(varset)
        exps[varset.index(name)] = 1
        return cls._from_clean(varset, {tuple(exps): Scalar.one()})

    @classmethod
    def monomial(cls, varset: VarSet, exps: Sequence[int], value=1) -> "Poly":
        return cls(varset, {tuple(exps): value})

    @classmethod
    def variables(cls, varset: VarSet) -> List["Poly"]:
        return [cls.var(varset, name) for name in varset]

    # --- inspection ---
    @property
    def terms(self) -> Dict[Exponents, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * len(self.varset), Scalar.zero())

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(exps), Scalar.zero())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, names_or_indices: Iterable) -> int:
        idx = [self.varset.index(v) if isinstance(v, str) else int(v) for v in names_or_indices]
        return max((sum(e[i] for i in idx) for e in self._terms), default=-1)

    def involves(self, names_or_indices: Iterable) -> bool:
        return self.degree_in(names_or_indices) > 0

    # --- arithmetic ---
    def _coerce(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            if other.varset != self.varset:
                raise VarSetMismatch(f"{self.varset} vs {other.varset}")
            return other
        try:
            return Poly.constant(self.varset, as_scalar(other))
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out[exps] + c if exps in out else c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Poly._from_clean(self.varset, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._from_clean(self.varset, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                factor = as_scalar(other)
            except TypeError:
                return NotImplemented
            if not factor:
                return Poly.zero(self.varset)
            return Poly._from_clean(self.varset, {e: c * factor for e, c in self._terms.items()})
        if other.varset != self.varset:
            raise VarSetMismatch(f"{self.varset} vs {other.varset}")
        out: Dict[Exponents, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exps(e1, e2)
                s = out[e] + c1 * c2 if e in out else c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly._from_clean(self.varset, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly.constant(self.varset, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.varset == other.varset and self._terms == other._terms
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self._terms == ({(0,) * len(self.varset): other} if other else {})

    def __hash__(self):
        return hash((self.varset, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    # --- calculus ---
    def diff(self, var, times: int = 1) -> "Poly":
        i = self.varset.index(var) if isinstance(var, str) else int(var)
        if not 0 <= i < len(self.varset):
            raise UnknownVariable(f"index {i} outside {self.varset}")
        out: Dict[Exponents, Scalar] = {}
        for exps, c in self._terms.items():
            if exps[i] < times:
                continue
            factor = 1
            for j in range(times):
                factor *= exps[i] - j
            new = list(exps)
            new[i] -= times
            out[tuple(new)] = c * factor
        return Poly._from_clean(self.varset, out)

    def diff_multi(self, orders: Sequence[int]) -> "Poly":
        """Apply d^orders[i]/dx_i^orders[i] for every variable at once."""
        out: Dict[Exponents, Scalar] = {}
        for exps, c in self._terms.items():
            factor = 1
            for e, k in zip(exps, orders):
                if e < k:
                    factor = 0
                    break
                for j in range(k):
                    factor *= e - j
            if factor:
                out[tuple(e - k for e, k in zip(exps, orders))] = c * factor
        return Poly._from_clean(self.varset, out)

    def substitute(self, mapping: Mapping[str, object], target: VarSet | None = None) -> "Poly":
        return poly_substitute(self, mapping, target)

    # --- nu handling on coefficients ---
    def map_coefficients(self, fn) -> "Poly":
        return Poly(self.varset, {e: fn(c) for e, c in self._terms.items()})

    def reflect_nu(self) -> "Poly":
        return self.map_coefficients(lambda c: c.reflect_nu())

    def evaluate_nu(self, value) -> "Poly":
        return self.map_coefficients(lambda c: c.substitute_nu(value))

    def nu_part(self, k: int) -> "Poly":
        """Coefficient polynomial of nu**k."""
        return self.map_coefficients(lambda c: Scalar.constant(c.coefficient(k)))

    def truncate_nu(self, below: int) -> "Poly":
        """Drop every nu**k with k >= below."""
        return self.map_coefficients(
            lambda c: Scalar({k: v for k, v in c.terms.items() if k < below})
        )

    def nu_degrees(self) -> List[int]:
        return sorted({k for c in self._terms.values() for k in c.terms})

    # --- serialization ---
    def sorted_terms(self) -> List[Tuple[Exponents, Scalar]]:
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def to_json(self) -> List[dict]:
        return [{"exponents": list(e), "coefficient": c.to_json()} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, varset: VarSet, data: List[dict]) -> "Poly":
        return cls(varset, {tuple(t["exponents"]): Scalar.from_json(t["coefficient"]) for t in data})

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.varset.names, exps) if e
            )
            pieces.append(_format_monomial(c, mono))
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self):
        return f"Poly({self})"


def _format_monomial(c: Scalar, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    text = str(c)
    if len(c.terms) > 1 or text.startswith("("):
        text = f"({text})"
    return f"{text}*{mono}"


# === Operations ===
def poly_add(p: Poly, q: Poly) -> Poly:
    if p.varset != q.varset:
        raise VarSetMismatch(f"{p.varset} vs {q.varset}")
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    if p.varset != q.varset:
        raise VarSetMismatch(f"{p.varset} vs {q.varset}")
    return p * q


def poly_diff(p: Poly, var: str) -> Poly:
    return p.diff(p.varset.index(var))


def poly_substitute(p: Poly, mapping: Mapping[str, object], target: VarSet | None = None) -> Poly:
    """Replace every variable by a polynomial over ``target`` (or a scalar)."""
    for name in mapping:
        p.varset.index(name)
    if target is None:
        target = next((v.varset for v in mapping.values() if isinstance(v, Poly)), None)
        if target is None:
            target = p.varset
    images: List[Optional[Poly]] = []
    for name in p.varset:
        if name in mapping:
            value = mapping[name]
            images.append(value if isinstance(value, Poly) else Poly.constant(target, value))
        else:
            images.append(None)
    powers: Dict[Tuple[int, int], Poly] = {}

    def power(i: int, e: int) -> Poly:
        if (i, e) not in powers:
            powers[(i, e)] = images[i] ** e
        return powers[(i, e)]

    result = Poly.zero(target)
    for exps, c in p.items():
        term = Poly.constant(target, c)
        for i, e in enumerate(exps):
            if not e:
                continue
            if images[i] is None:
                raise UnknownVariable(f"no image for {p.varset.names[i]!r}")
            term = term * power(i, e)
        result = result + term
    return result


def random_poly(varset: VarSet, rng, max_degree: int = 3, n_terms: int = 4, span: int = 3) -> Poly:
    """Small random polynomial with integer coefficients in [-span, span]."""
    terms: Dict[Exponents, int] = {}
    width = len(varset)
    for _ in range(n_terms):
        total = rng.randint(0, max_degree)
        exps = [0] * width
        for _ in range(total):
            exps[rng.randrange(width)] += 1
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + rng.randint(-span, span)
    return Poly(varset, terms)


def multi_indices(bounds: Sequence[int]):
    """All multi-indices k with 0 <= k[i] <= bounds[i]."""
    return product(*(range(b + 1) for b in bounds))
