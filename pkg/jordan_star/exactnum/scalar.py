"""Exact scalars.

Rationals are sympy ``QQ`` elements, Gaussian rationals are ``QQ_I`` elements,
and a :class:`Scalar` is a Laurent polynomial in the formal parameter ``nu``
with Gaussian-rational coefficients.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Mapping

from sympy import I as SYMPY_I
from sympy import QQ, QQ_I, Integer, Rational as SympyRational, Symbol

from jordan_star.errors import JordanStarError

logger = logging.getLogger(__name__)

NU = Symbol("nu")

RationalType = type(QQ(1))
GaussianType = type(QQ_I(1, 0))

_GZERO = QQ_I(0, 0)
_GONE = QQ_I(1, 0)


class NotDivisible(JordanStarError):
    """No exact Laurent quotient exists."""


# === Rationals and Gaussian rationals ===
def rational(value) -> RationalType:
    """Coerce ints, strings "p/q", Fractions and sympy rationals to a QQ element."""
    if QQ.of_type(value):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        frac = Fraction(value.strip())
        return QQ(frac.numerator, frac.denominator)
    if isinstance(value, (SympyRational, Integer)):
        return QQ.from_sympy(value)
    if isinstance(value, GaussianType):
        if value.y:
            raise ValueError(f"{value} is not real")
        return value.x
    if isinstance(value, Scalar):
        return value.as_rational()
    raise TypeError(f"cannot read {value!r} as a rational")


def gaussian(re=0, im=0) -> GaussianType:
    if isinstance(re, GaussianType) and im == 0:
        return re
    return QQ_I(rational(re), rational(im))


def format_rational(q) -> str:
    q = rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_to_json(q) -> str:
    q = rational(q)
    return f"{q.numerator}/{q.denominator}"


def format_gaussian(g: GaussianType) -> str:
    if not g.y:
        return format_rational(g.x)
    im = _format_imaginary(g.y)
    if not g.x:
        return im
    if g.y < 0:
        return f"({format_rational(g.x)} - {_format_imaginary(-g.y)})"
    return f"({format_rational(g.x)} + {im})"


def _format_imaginary(y) -> str:
    if y == 1:
        return "i"
    if y == -1:
        return "-i"
    return f"{format_rational(y)}*i"


def _to_gaussian(value) -> GaussianType:
    if isinstance(value, GaussianType):
        return value
    if isinstance(value, Mapping):
        return QQ_I(rational(value.get("re", 0)), rational(value.get("im", 0)))
    return QQ_I(rational(value), QQ(0))


# === Laurent polynomials in nu ===
class Scalar:
    """Finite sum of c_k * nu**k with Gaussian-rational c_k, k of any sign."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: Dict[int, GaussianType] = {}
        for k, c in (terms or {}).items():
            g = _to_gaussian(c)
            key = int(k)
            if key in clean:
                g = clean[key] + g
            if g:
                clean[key] = g
            else:
                clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: Dict[int, GaussianType]) -> "Scalar":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    # --- constructors ---
    @classmethod
    def zero(cls) -> "Scalar":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "Scalar":
        return cls._from_clean({0: _GONE})

    @classmethod
    def constant(cls, value) -> "Scalar":
        g = _to_gaussian(value)
        return cls._from_clean({0: g} if g else {})

    @classmethod
    def monomial(cls, value, k: int) -> "Scalar":
        g = _to_gaussian(value)
        return cls._from_clean({int(k): g} if g else {})

    @classmethod
    def nu(cls, k: int = 1) -> "Scalar":
        return cls._from_clean({int(k): _GONE})

    @classmethod
    def imaginary_unit(cls) -> "Scalar":
        return cls._from_clean({0: QQ_I(0, 1)})

    # --- inspection ---
    @property
    def terms(self) -> Dict[int, GaussianType]:
        return dict(self._terms)

    def coefficient(self, k: int) -> GaussianType:
        return self._terms.get(k, _GZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero has no degree")
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero has no degree")
        return max(self._terms)

    def as_rational(self) -> RationalType:
        if not self._terms:
            return QQ(0)
        if not self.is_constant or self._terms[0].y:
            raise ValueError(f"{self} is not a rational constant")
        return self._terms[0].x

    def as_gaussian(self) -> GaussianType:
        if not self._terms:
            return _GZERO
        if not self.is_constant:
            raise ValueError(f"{self} depends on nu")
        return self._terms[0]

    # --- arithmetic ---
    @staticmethod
    def _coerce(value) -> "Scalar | None":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction, GaussianType)) or QQ.of_type(value):
            return Scalar.constant(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, _GZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Scalar._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._from_clean({k: -c for k, c in self._terms.items()})

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
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[int, GaussianType] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                s = out.get(k, _GZERO) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return Scalar._from_clean(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return scalar_div_exact(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return scalar_div_exact(other, self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return scalar_div_exact(Scalar.one(), self) ** (-exponent)
        result = Scalar.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset((k, (c.x, c.y)) for k, c in self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # --- nu manipulations ---
    def reflect_nu(self) -> "Scalar":
        """nu -> -nu."""
        return Scalar._from_clean({k: (-c if k % 2 else c) for k, c in self._terms.items()})

    def evaluate(self, value) -> GaussianType:
        """Substitute a Gaussian-rational number for nu."""
        point = _to_gaussian(value)
        if not point and any(k < 0 for k in self._terms):
            raise NotDivisible(f"cannot evaluate {self} at nu = 0")
        total = _GZERO
        for k, c in self._terms.items():
            total = total + c * (point ** k)
        return total

    def substitute_nu(self, value) -> "Scalar":
        return Scalar.constant(self.evaluate(value))

    def conjugate(self) -> "Scalar":
        return Scalar._from_clean({k: QQ_I(c.x, -c.y) for k, c in self._terms.items()})

    # --- serialization ---
    def to_json(self) -> Dict[str, Dict[str, str]]:
        return {
            str(k): {"re": rational_to_json(c.x), "im": rational_to_json(c.y)}
            for k, c in sorted(self._terms.items())
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Mapping[str, str]]) -> "Scalar":
        return cls({int(k): _to_gaussian(v) for k, v in data.items()})

    def to_sympy(self):
        expr = Integer(0)
        for k, c in self._terms.items():
            expr += (QQ.to_sympy(c.x) + SYMPY_I * QQ.to_sympy(c.y)) * NU**k
        return expr

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = [_format_term(c, k) for k, c in sorted(self._terms.items(), reverse=True)]
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self):
        return f"Scalar({self})"


def _format_term(c: GaussianType, k: int) -> str:
    if k == 0:
        return format_gaussian(c)
    power = "nu" if k == 1 else f"nu^{k}"
    if c == _GONE:
        return power
    if c == -_GONE:
        return f"-{power}"
    return f"{format_gaussian(c)}*{power}"


def as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (str, SympyRational, Integer)):
        return Scalar.constant(rational(value))
    coerced = Scalar._coerce(value)
    if coerced is None:
        raise TypeError(f"cannot read {value!r} as a Scalar")
    return coerced


# === Operations ===
def scalar_add(a, b) -> Scalar:
    return as_scalar(a) + as_scalar(b)


def scalar_mul(a, b) -> Scalar:
    return as_scalar(a) * as_scalar(b)


def scalar_neg(a) -> Scalar:
    return -as_scalar(a)


def scalar_div_exact(a, b) -> Scalar:
    """Return q with q*b == a, or raise NotDivisible."""
    a, b = as_scalar(a), as_scalar(b)
    if b.is_zero:
        raise NotDivisible("division by zero")
    if b.is_monomial:
        ((kb, cb),) = b._terms.items()
        return Scalar._from_clean({k - kb: c / cb for k, c in a._terms.items()})
    if a.is_zero:
        return Scalar.zero()

    # shift both to polynomials with nonzero constant term, then long division
    a_low, b_low = a.min_degree, b.min_degree
    remainder = {k - a_low: c for k, c in a._terms.items()}
    divisor = {k - b_low: c for k, c in b._terms.items()}
    top_b = max(divisor)
    lead = divisor[top_b]
    quotient: Dict[int, GaussianType] = {}
    while remainder and max(remainder) >= top_b:
        top = max(remainder)
        factor = remainder[top] / lead
        shift = top - top_b
        quotient[shift] = factor
        for k, c in divisor.items():
            s = remainder.get(k + shift, _GZERO) - factor * c
            if s:
                remainder[k + shift] = s
            else:
                remainder.pop(k + shift, None)
    if remainder:
        raise NotDivisible(f"({a}) is not divisible by ({b})")
    return Scalar._from_clean({k + a_low - b_low: c for k, c in quotient.items() if c})
