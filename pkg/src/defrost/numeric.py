"""Exact scalars, dense polynomials in x, and generalized falling factorials.

Scalars are :class:`fractions.Fraction`, which keeps every value in lowest
terms with a positive denominator.  Polynomials are :class:`Poly`, an
immutable ascending-power coefficient tuple.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import RationalParseError

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"-3/5"``, ``"7"`` or ``"0"``; reject anything else."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise RationalParseError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def fmt_rational(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _trim(coeffs: Iterable[Scalar]) -> tuple:
    c = [Fraction(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Dense univariate polynomial in x with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``; the zero polynomial has an
    empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __repr__(self):
        return f"Poly([{', '.join(fmt_rational(c) for c in self.coeffs)}])"

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c / other for c in self.coeffs)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, arg):
        """Evaluate at a scalar, or compose with another polynomial."""
        if isinstance(arg, Poly):
            acc = Poly()
            for c in reversed(self.coeffs):
                acc = acc * arg + c
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * arg + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def to_strings(self) -> list:
        return [fmt_rational(c) for c in self.coeffs] or ["0"]


X = Poly.x()


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def affine(shift: Scalar, scale: Scalar = 1) -> Poly:
    """The polynomial ``shift + scale*x``, used for substitutions."""
    return Poly((shift, scale))


def genfall(x, lam: Scalar, n: int):
    """Generalized falling factorial ``x (x - lam) ... (x - (n-1) lam)``.

    ``x`` may be a scalar or a :class:`Poly`; the result has the same kind.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    lam = Fraction(lam)
    if isinstance(x, Poly):
        result = Poly.const(1)
    else:
        x = Fraction(x)
        result = Fraction(1)
    for j in range(n):
        result = result * (x - j * lam)
    return result
