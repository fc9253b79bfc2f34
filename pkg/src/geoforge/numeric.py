"""Exact rational and Gaussian-rational arithmetic.

Real scalars are :class:`fractions.Fraction` values, which are already kept
in canonical form (positive denominator, reduced, zero as ``0/1``).  Complex
coordinates use :class:`GaussianRational`, a complex number whose two parts
are Fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Fraction",
    "GaussianRational",
    "rat_normalize",
    "format_rational",
    "parse_rational",
    "gauss_arith",
    "conjugate",
    "norm_sq",
    "inner_product",
    "unimodular_from_parameter",
    "parse_gaussian",
]


def rat_normalize(num: int, den: int) -> Fraction:
    """Return ``num/den`` in canonical form.

    Raises ZeroDivisionError when ``den`` is zero.
    """
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def format_rational(x) -> str:
    """Text form ``num/den``; the denominator is omitted when it is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_RAT_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`.  Decimal text is rejected."""
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rat_normalize(num, den)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, _RationalABC):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Complex number ``re + im*i`` with exact rational parts.

    Supports the field operations and ``conjugate()``, and mixes with ints
    and Fractions.  ``real``/``imag`` mirror the attribute names of the
    builtin ``complex`` so code can be written once for both.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return cls(_as_fraction(value), Fraction(0))

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = other.norm_sq()
        if n == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        num = self * other.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** -k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RationalABC):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}*i"

    def __repr__(self):
        return f"GaussianRational({self})"


_GAUSS_RE = re.compile(r"\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*i\s*$")


def parse_gaussian(text: str) -> GaussianRational:
    """Parse the ``re+im*i`` text form produced by ``str()``."""
    m = _GAUSS_RE.match(text)
    if m is None:
        raise ValueError(f"not a Gaussian rational literal: {text!r}")
    im = parse_rational(m.group(3))
    return GaussianRational(parse_rational(m.group(1)), -im if m.group(2) == "-" else im)


def gauss_arith(a, b, op: str) -> GaussianRational:
    """Apply ``op`` (one of add, sub, mul, div) to two Gaussian rationals."""
    a = GaussianRational.coerce(a)
    b = GaussianRational.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def conjugate(a):
    return a.conjugate()


def norm_sq(a):
    """``a * conj(a)`` as a real number (Fraction for exact input)."""
    if isinstance(a, GaussianRational):
        return a.norm_sq()
    a = complex(a)
    return a.real * a.real + a.imag * a.imag


def inner_product(a, b):
    """Real inner product ``re(a)re(b) + im(a)im(b)`` of two complex numbers.

    This equals ``(a*conj(b) + conj(a)*b) / 2``.
    """
    return a.real * b.real + a.imag * b.imag


def unimodular_from_parameter(t) -> GaussianRational:
    """Rational point on the unit circle from the stereographic parameter ``t``.

    ``t -> ((1 - t^2) + 2t i) / (1 + t^2)``; the result has norm exactly 1.
    """
    t = _as_fraction(t)
    d = 1 + t * t
    return GaussianRational((1 - t * t) / d, 2 * t / d)
