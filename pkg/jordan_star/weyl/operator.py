"""Normal-ordered differential operators with polynomial coefficients (the Weyl algebra over Scalar).

A term ``(alpha, beta) -> c`` stands for ``c * x^alpha * d^beta`` with every
multiplication to the left of every derivative.
"""
from __future__ import annotations

import logging
from math import comb, perm
from typing import Dict, List, Mapping, Sequence, Tuple

from jordan_star.exactnum.scalar import Scalar, as_scalar
from jordan_star.mpoly.poly import Poly, VarSet, VarSetMismatch, multi_indices

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Key = Tuple[Exponents, Exponents]


def _add(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


class WeylOperator:
    __slots__ = ("varset", "_terms")

    def __init__(self, varset: VarSet, terms: Mapping[Key, object] | None = None):
        self.varset = varset
        width = len(varset)
        clean: Dict[Key, Scalar] = {}
        for (alpha, beta), c in (terms or {}).items():
            key = (tuple(int(e) for e in alpha), tuple(int(e) for e in beta))
            if len(key[0]) != width or len(key[1]) != width or min(key[0] + key[1], default=0) < 0:
                raise ValueError(f"bad exponents {key} for {varset}")
            value = as_scalar(c)
            if key in clean:
                value = clean[key] + value
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _from_clean(cls, varset: VarSet, terms: Dict[Key, Scalar]) -> "WeylOperator":
        obj = cls.__new__(cls)
        obj.varset = varset
        obj._terms = terms
        return obj

    # --- constructors ---
    @classmethod
    def zero(cls, varset: VarSet) -> "WeylOperator":
        return cls._from_clean(varset, {})

    @classmethod
    def constant(cls, varset: VarSet, value) -> "WeylOperator":
        null = (0,) * len(varset)
        value = as_scalar(value)
        return cls._from_clean(varset, {(null, null): value} if value else {})

    @classmethod
    def identity(cls, varset: VarSet) -> "WeylOperator":
        return cls.constant(varset, 1)

    @classmethod
    def multiplication(cls, p: Poly) -> "WeylOperator":
        null = (0,) * len(p.varset)
        return cls._from_clean(p.varset, {(exps, null): c for exps, c in p.items()})

    @classmethod
    def derivative(cls, varset: VarSet, var, times: int = 1) -> "WeylOperator":
        beta = [0] * len(varset)
        beta[varset.index(var) if isinstance(var, str) else int(var)] = times
        return cls._from_clean(varset, {((0,) * len(varset), tuple(beta)): Scalar.one()})

    @classmethod
    def first_order(cls, scalar: Poly, field: Sequence[Poly], variables: Sequence[int] | None = None) -> "WeylOperator":
        """scalar + sum_a field[a] * d_(variables[a])."""
        varset = scalar.varset
        variables = list(range(len(field))) if variables is None else list(variables)
        terms: Dict[Key, Scalar] = {}
        null = (0,) * len(varset)
        for exps, c in scalar.items():
            terms[(exps, null)] = c
        for coeff, index in zip(field, variables):
            if coeff.varset != varset:
                raise VarSetMismatch(f"{coeff.varset} vs {varset}")
            beta = [0] * len(varset)
            beta[index] = 1
            for exps, c in coeff.items():
                terms[(exps, tuple(beta))] = c
        return cls(varset, terms)

    # --- inspection ---
    @property
    def terms(self) -> Dict[Key, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def order(self) -> int:
        """Highest derivative order; -1 for the zero operator."""
        return max((sum(beta) for _, beta in self._terms), default=-1)

    def degree(self) -> int:
        return max((sum(alpha) for alpha, _ in self._terms), default=-1)

    def involves(self, indices: Sequence[int]) -> bool:
        """Does any term multiply by or differentiate in one of these variables?"""
        return any(alpha[i] or beta[i] for alpha, beta in self._terms for i in indices)

    def part_of_order(self, k: int) -> Dict[Exponents, Poly]:
        """beta -> coefficient polynomial, for every |beta| = k."""
        out: Dict[Exponents, Dict[Exponents, Scalar]] = {}
        for (alpha, beta), c in self._terms.items():
            if sum(beta) == k:
                out.setdefault(beta, {})[alpha] = c
        return {beta: Poly(self.varset, terms) for beta, terms in out.items()}

    def scalar_part(self) -> Poly:
        null = (0,) * len(self.varset)
        return self.part_of_order(0).get(null, Poly.zero(self.varset))

    def vector_part(self) -> List[Poly]:
        """Coefficients of d_1 .. d_N."""
        width = len(self.varset)
        parts = self.part_of_order(1)
        out = []
        for a in range(width):
            beta = tuple(1 if i == a else 0 for i in range(width))
            out.append(parts.get(beta, Poly.zero(self.varset)))
        return out

    # --- arithmetic ---
    def _check(self, other: "WeylOperator") -> None:
        if other.varset != self.varset:
            raise VarSetMismatch(f"{self.varset} vs {other.varset}")

    def __add__(self, other):
        if not isinstance(other, WeylOperator):
            try:
                other = WeylOperator.constant(self.varset, other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out[key] + c if key in out else c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return WeylOperator._from_clean(self.varset, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylOperator._from_clean(self.varset, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, WeylOperator):
            return weyl_mul(self, other)
        if isinstance(other, Poly):
            return weyl_mul(self, WeylOperator.multiplication(other))
        try:
            factor = as_scalar(other)
        except TypeError:
            return NotImplemented
        if not factor:
            return WeylOperator.zero(self.varset)
        return WeylOperator._from_clean(self.varset, {k: c * factor for k, c in self._terms.items()})

    def __rmul__(self, other):
        if isinstance(other, Poly):
            return weyl_mul(WeylOperator.multiplication(other), self)
        return self.__mul__(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = WeylOperator.identity(self.varset)
        for _ in range(exponent):
            result = weyl_mul(result, self)
        return result

    def __eq__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self.varset == other.varset and self._terms == other._terms

    __hash__ = None

    def __bool__(self):
        return bool(self._terms)

    # --- coefficient maps ---
    def map_coefficients(self, fn) -> "WeylOperator":
        return WeylOperator(self.varset, {k: fn(c) for k, c in self._terms.items()})

    def reflect_nu(self) -> "WeylOperator":
        return self.map_coefficients(lambda c: c.reflect_nu())

    def evaluate_nu(self, value) -> "WeylOperator":
        return self.map_coefficients(lambda c: c.substitute_nu(value))

    def restrict(self, varset: VarSet) -> "WeylOperator":
        """Re-express over a subset of the variables; dropped variables must not occur."""
        keep = [self.varset.index(name) for name in varset]
        dropped = [i for i in range(len(self.varset)) if i not in keep]
        if self.involves(dropped):
            raise ValueError(f"operator involves variables outside {varset}")
        return WeylOperator._from_clean(
            varset,
            {
                (tuple(alpha[i] for i in keep), tuple(beta[i] for i in keep)): c
                for (alpha, beta), c in self._terms.items()
            },
        )

    # --- serialization ---
    def sorted_terms(self):
        return sorted(
            self._terms.items(),
            key=lambda item: (-sum(item[0][1]), tuple(-e for e in item[0][1]), -sum(item[0][0]), tuple(-e for e in item[0][0])),
        )

    def to_json(self) -> List[dict]:
        return [
            {"mult_exponents": list(alpha), "deriv_exponents": list(beta), "coefficient": c.to_json()}
            for (alpha, beta), c in self.sorted_terms()
        ]

    def __str__(self):
        if not self._terms:
            return "0"
        names = self.varset.names
        pieces = []
        for (alpha, beta), c in self.sorted_terms():
            word = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, alpha) if e]
            word += [f"d_{n}" if e == 1 else f"d_{n}^{e}" for n, e in zip(names, beta) if e]
            mono = "*".join(word)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append(f"-{mono}")
            else:
                text = str(c)
                pieces.append(f"({text})*{mono}" if len(c.terms) > 1 or text.startswith("(") else f"{text}*{mono}")
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self):
        return f"WeylOperator({self})"


# === Operations ===
def weyl_mul(P: WeylOperator, Q: WeylOperator) -> WeylOperator:
    """Composition re-normal-ordered: d^b x^g = sum_k C(b,k) g!/(g-k)! x^(g-k) d^(b-k)."""
    P._check(Q)
    out: Dict[Key, Scalar] = {}
    for (a1, b1), c1 in P._terms.items():
        for (a2, b2), c2 in Q._terms.items():
            c12 = c1 * c2
            bounds = [min(x, y) for x, y in zip(b1, a2)]
            for kappa in multi_indices(bounds):
                factor = 1
                for b, g, k in zip(b1, a2, kappa):
                    factor *= comb(b, k) * perm(g, k)
                key = (_sub(_add(a1, a2), kappa), _sub(_add(b1, b2), kappa))
                value = c12 * factor
                s = out[key] + value if key in out else value
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return WeylOperator._from_clean(P.varset, out)


def commutator(P: WeylOperator, Q: WeylOperator) -> WeylOperator:
    return weyl_mul(P, Q) - weyl_mul(Q, P)


def apply(D: WeylOperator, f: Poly) -> Poly:
    if f.varset != D.varset:
        raise VarSetMismatch(f"{D.varset} vs {f.varset}")
    total = Poly.zero(f.varset)
    derivatives: Dict[Exponents, Poly] = {}
    for (alpha, beta), c in D.items():
        if beta not in derivatives:
            derivatives[beta] = f.diff_multi(beta)
        if derivatives[beta]:
            total = total + Poly.monomial(f.varset, alpha, c) * derivatives[beta]
    return total


def map_generators(
    D: WeylOperator,
    target: VarSet,
    mult_images: Sequence[WeylOperator],
    deriv_images: Sequence[WeylOperator],
) -> WeylOperator:
    """Algebra homomorphism fixed by images of x_i and d_i, applied word by word in normal order."""
    powers: Dict[Tuple[str, int, int], WeylOperator] = {}

    def power(kind: str, i: int, e: int) -> WeylOperator:
        key = (kind, i, e)
        if key not in powers:
            base = mult_images[i] if kind == "x" else deriv_images[i]
            powers[key] = base ** e
        return powers[key]

    total = WeylOperator.zero(target)
    for (alpha, beta), c in D.items():
        word = WeylOperator.constant(target, c)
        for i, e in enumerate(alpha):
            if e:
                word = weyl_mul(word, power("x", i, e))
        for i, e in enumerate(beta):
            if e:
                word = weyl_mul(word, power("d", i, e))
        total = total + word
    return total
