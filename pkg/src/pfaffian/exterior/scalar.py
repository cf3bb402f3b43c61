"""Exact Gaussian-rational scalars."""

from fractions import Fraction
from numbers import Rational

__all__ = ["CScalar", "as_scalar", "ZERO", "ONE", "I"]


class CScalar:
    """A complex number ``re + im*i`` with exact rational parts.

    Instances are immutable. Both parts are stored as reduced
    :class:`fractions.Fraction` objects, so equality is structural.

    >>> CScalar(1, 2) * CScalar(1, -2)
    CScalar(5)
    >>> str(CScalar(Fraction(1, 2), 3))
    '1/2 + 3i'
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, CScalar) or isinstance(im, CScalar):
            raise TypeError("CScalar parts must be rational")
        self._re = _rational(re)
        self._im = _rational(im)

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        obj._re = re
        obj._im = im
        return obj

    @classmethod
    def from_complex(cls, value, max_denominator=10**12):
        """Rational approximation of a Python complex number."""
        value = complex(value)
        return cls(Fraction(value.real).limit_denominator(max_denominator),
                   Fraction(value.imag).limit_denominator(max_denominator))

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    @property
    def is_real(self):
        return self._im == 0

    def conjugate(self):
        return CScalar._raw(self._re, -self._im)

    def norm2(self):
        """Squared modulus, an exact rational."""
        return self._re * self._re + self._im * self._im

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __eq__(self, other):
        if isinstance(other, CScalar):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Rational)):
            return self._im == 0 and self._re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __neg__(self):
        return CScalar._raw(-self._re, -self._im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return CScalar._raw(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return CScalar._raw(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        if not b and not d:
            return CScalar._raw(a * c, b)
        return CScalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by the zero scalar")
        n = other.norm2()
        num = self * other.conjugate()
        return CScalar._raw(num._re / n, num._im / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / (self ** -exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __repr__(self):
        if self._im == 0:
            return f"CScalar({self._re})"
        return f"CScalar({self._re}, {self._im})"

    def __str__(self):
        re, im = self._re, self._im
        if im == 0:
            return str(re)
        if re == 0:
            return _imag_str(im)
        sign = "-" if im < 0 else "+"
        return f"{re} {sign} {_imag_str(abs(im))}"


def _imag_str(im):
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}i"


def _rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected a rational number, got {type(value).__name__}")


def _coerce(value):
    if isinstance(value, CScalar):
        return value
    if isinstance(value, (int, Rational)):
        return CScalar._raw(Fraction(value), Fraction(0))
    return None


def as_scalar(value):
    """Coerce ints, Fractions and CScalars; reject floats to keep arithmetic exact."""
    out = _coerce(value)
    if out is None:
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")
    return out


ZERO = CScalar(0)
ONE = CScalar(1)
I = CScalar(0, 1)
