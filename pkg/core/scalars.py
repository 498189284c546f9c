"""
Scalar kernels shared by every other module.

Exact values are fractions.Fraction and GaussianRational (rationals adjoined i), held in
numpy object arrays. Approximate values are float64 / complex128 arrays. GaussPoly is the
univariate polynomial ring over the Gaussian rationals used by rational motions.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from core.errors import InputError, DegeneracyError


Rational = Fraction


def _is_exact_number(value):
    if isinstance(value, bool):
        return False
    return isinstance(value, (numbers.Rational, GaussianRational))


def parse_rational(value):
    """
    reads a rational from "p/q", a decimal string, an integer or a Fraction
    floats are taken verbatim from their decimal representation
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError('cannot read a rational from %r' % (value,))
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputError('non-finite value %r' % value)
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError('malformed rational %r' % value)
    raise InputError('cannot read a rational from %r' % (value,))


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


class GaussianRational(object):
    """
    a + ib with a, b rational
    mixes with int and Fraction exactly, with float and complex by promotion to complex
    """
    __slots__ = ('re', 'im')

    def __init__(self, re=0, im=0):
        self.re = parse_rational(re)
        self.im = parse_rational(im)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, GaussianRational):
            return value
        if _is_exact_number(value):
            return cls(value, 0)
        raise InputError('not an exact value: %r' % (value,))

    @staticmethod
    def _exact(other):
        if isinstance(other, GaussianRational):
            return other
        if _is_exact_number(other):
            return GaussianRational(other, 0)
        return None

    @staticmethod
    def _inexact(other):
        return isinstance(other, (float, complex, np.floating, np.complexfloating))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self):
        return self.re * self.re + self.im * self.im

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def is_real(self):
        return self.im == 0

    def __add__(self, other):
        o = self._exact(other)
        if o is not None:
            return GaussianRational(self.re + o.re, self.im + o.im)
        if self._inexact(other):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._exact(other)
        if o is not None:
            return GaussianRational(self.re - o.re, self.im - o.im)
        if self._inexact(other):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        o = self._exact(other)
        if o is not None:
            return o - self
        if self._inexact(other):
            return other - complex(self)
        return NotImplemented

    def __mul__(self, other):
        o = self._exact(other)
        if o is not None:
            return GaussianRational(self.re * o.re - self.im * o.im,
                                    self.re * o.im + self.im * o.re)
        if self._inexact(other):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._exact(other)
        if o is not None:
            n = o.norm2()
            if n == 0:
                raise ZeroDivisionError('division by zero Gaussian rational')
            num = self * o.conjugate()
            return GaussianRational(num.re / n, num.im / n)
        if self._inexact(other):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._exact(other)
        if o is not None:
            return o / self
        if self._inexact(other):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, k):
        assert isinstance(k, numbers.Integral)
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._exact(other)
        if o is not None:
            return self.re == o.re and self.im == o.im
        if self._inexact(other):
            return complex(self) == other
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return math.sqrt(float(self.norm2()))

    def __repr__(self):
        return 'GaussianRational(%s, %s)' % (format_rational(self.re), format_rational(self.im))

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        sign = '-' if self.im < 0 else '+'
        return '%s%s%si' % (format_rational(self.re), sign, format_rational(abs(self.im)))


I = GaussianRational(0, 1)


class ComplexApprox(complex):
    """
    complex128 value with finite parts
    """

    def __new__(cls, re=0.0, im=0.0):
        re, im = float(re), float(im)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise InputError('non-finite value %r' % complex(re, im))
        return complex.__new__(cls, re, im)


@dataclass(frozen=True)
class TolerancePolicy:
    """
    |a - b| <= abs_tol + rel_tol * scale decides equality of approximate values
    """
    abs_tol: float = 1e-9
    rel_tol: float = 1e-9

    def __post_init__(self):
        if not (self.abs_tol >= 0 and self.rel_tol >= 0):
            raise InputError('tolerances must be non-negative')

    def bound(self, scale=0.0):
        return self.abs_tol + self.rel_tol * scale

    def small(self, value, scale=0.0):
        return abs(value) <= self.bound(scale)

    def close(self, a, b):
        return abs(a - b) <= self.bound(max(abs(a), abs(b)))


DEFAULT_TOL = TolerancePolicy()


def tolerance(value):
    """accepts a TolerancePolicy, a number (used for both bounds) or None"""
    if value is None:
        return DEFAULT_TOL
    if isinstance(value, TolerancePolicy):
        return value
    value = float(value)
    return TolerancePolicy(value, value)


# arrays


def is_exact(arr):
    return np.asarray(arr).dtype == object


def _flat(values):
    return list(np.asarray(values, dtype=object).ravel())


def real_array(values):
    """object array of Fractions when every entry is exact, float64 otherwise"""
    arr = np.asarray(values, dtype=object)
    flat = list(arr.ravel())
    if all(_is_exact_number(v) and (not isinstance(v, GaussianRational) or v.is_real())
           for v in flat):
        out = np.empty(arr.shape, dtype=object)
        out.ravel()[:] = [Fraction(v.re if isinstance(v, GaussianRational) else v)
                          for v in flat] if flat else []
        return out
    if any(isinstance(v, GaussianRational) and not v.is_real() for v in flat):
        raise InputError('complex value where a real one is expected')
    out = np.array([float(v.re) if isinstance(v, GaussianRational) else float(v) for v in flat],
                   dtype=np.float64).reshape(arr.shape)
    if not np.all(np.isfinite(out)):
        raise InputError('non-finite value')
    return out


def scalar_array(values):
    """object array of GaussianRationals when every entry is exact, complex128 otherwise"""
    arr = np.asarray(values, dtype=object)
    flat = list(arr.ravel())
    if all(_is_exact_number(v) for v in flat):
        out = np.empty(arr.shape, dtype=object)
        out.ravel()[:] = [GaussianRational.coerce(v) for v in flat] if flat else []
        return out
    out = np.array([complex(v) for v in flat], dtype=np.complex128).reshape(arr.shape)
    if not np.all(np.isfinite(out)):
        raise InputError('non-finite value')
    return out


def as_complex(values):
    arr = np.asarray(values)
    if arr.dtype == object:
        return np.array([complex(v) for v in arr.ravel()], dtype=np.complex128).reshape(arr.shape)
    return arr.astype(np.complex128)


def as_float(values):
    arr = np.asarray(values)
    if arr.dtype == object:
        return np.array([float(v) for v in arr.ravel()], dtype=np.float64).reshape(arr.shape)
    if np.iscomplexobj(arr):
        return arr.real.astype(np.float64)
    return arr.astype(np.float64)


def abs2(value):
    if isinstance(value, GaussianRational):
        return value.norm2()
    if isinstance(value, numbers.Rational):
        return Fraction(value) * Fraction(value)
    return abs(value) ** 2


def max_abs(values):
    flat = _flat(values)
    if not flat:
        return 0.0
    return max(abs(complex(v)) for v in flat)


def all_zero(values, tol=None, scale=1.0):
    """exact arrays compare with 0, approximate ones against the tolerance bound"""
    arr = np.asarray(values)
    if arr.dtype == object:
        return all(v == 0 for v in arr.ravel())
    return max_abs(arr) <= tolerance(tol).bound(scale)


def first_max_index(values):
    """
    index of the first entry of largest magnitude
    approximate entries within a relative 1e-9 of the maximum count as ties
    """
    flat = _flat(values)
    assert flat
    if all(_is_exact_number(v) for v in flat):
        mags = [abs2(v) for v in flat]
        top = max(mags)
        return mags.index(top)
    mags = [abs(complex(v)) for v in flat]
    top = max(mags)
    for k, m in enumerate(mags):
        if m >= top * (1 - 1e-9):
            return k
    return int(np.argmax(mags))


def det3(M):
    return (M[0, 0] * (M[1, 1] * M[2, 2] - M[1, 2] * M[2, 1])
            - M[0, 1] * (M[1, 0] * M[2, 2] - M[1, 2] * M[2, 0])
            + M[0, 2] * (M[1, 0] * M[2, 1] - M[1, 1] * M[2, 0]))


def cross3(a, b):
    return np.array([a[1] * b[2] - a[2] * b[1],
                     a[2] * b[0] - a[0] * b[2],
                     a[0] * b[1] - a[1] * b[0]], dtype=np.asarray(a).dtype)


def scalar_to_json(value):
    if isinstance(value, GaussianRational):
        return {'re': format_rational(value.re), 'im': format_rational(value.im)}
    if isinstance(value, numbers.Rational) and not isinstance(value, bool):
        return {'re': format_rational(value), 'im': '0'}
    value = complex(value)
    return {'re': value.real, 'im': value.imag}


def scalar_from_json(obj, exact=True):
    """
    {"re": .., "im": ..} or a bare real number/string
    exact=True yields GaussianRational, otherwise ComplexApprox
    """
    if isinstance(obj, dict):
        if set(obj) - {'re', 'im'}:
            raise InputError('unexpected keys in scalar %r' % (obj,))
        re, im = obj.get('re', 0), obj.get('im', 0)
    else:
        re, im = obj, 0
    if exact:
        return GaussianRational(parse_rational(re), parse_rational(im))
    return ComplexApprox(_real(re), _real(im))


def _real(value):
    if isinstance(value, str):
        return float(parse_rational(value))
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise InputError('malformed real %r' % (value,))
    return float(value)


class GaussPoly(object):
    """
    univariate polynomial over Q(i), coefficients in increasing degree
    the zero polynomial has degree -1
    """
    __slots__ = ('coefficients',)

    def __init__(self, coefficients=()):
        coeffs = [GaussianRational.coerce(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else GaussianRational(0)

    def coefficient(self, k):
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return GaussianRational(0)

    def _lift(self, other):
        if isinstance(other, GaussPoly):
            return other
        if _is_exact_number(other):
            return GaussPoly([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coefficients), len(o.coefficients))
        return GaussPoly([self.coefficient(k) + o.coefficient(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return GaussPoly([-c for c in self.coefficients])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return GaussPoly()
        out = [GaussianRational(0)] * (len(self.coefficients) + len(o.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(o.coefficients):
                out[i + j] = out[i + j] + a * b
        return GaussPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coefficients == o.coefficients

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash(self.coefficients)

    def __call__(self, t):
        return poly_eval(self, t)

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        rem = list(self.coefficients)
        quo = [GaussianRational(0)] * max(len(rem) - len(o.coefficients) + 1, 0)
        lead = o.leading
        while len(rem) >= len(o.coefficients) and rem:
            shift = len(rem) - len(o.coefficients)
            factor = rem[-1] / lead
            quo[shift] = factor
            for k, c in enumerate(o.coefficients):
                rem[shift + k] = rem[shift + k] - factor * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return GaussPoly(quo), GaussPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading
        return GaussPoly([c / lead for c in self.coefficients])

    def derivative(self):
        return GaussPoly([k * c for k, c in enumerate(self.coefficients)][1:])

    def __repr__(self):
        return 'GaussPoly([%s])' % ', '.join(str(c) for c in self.coefficients)


def poly_eval(p, t):
    """
    Horner evaluation, exact for exact t (int, Fraction, GaussianRational), complex otherwise
    """
    coeffs = p.coefficients
    if _is_exact_number(t):
        t = GaussianRational.coerce(t)
        acc = GaussianRational(0)
        for c in reversed(coeffs):
            acc = acc * t + c
        return acc
    t = complex(t)
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * t + complex(c)
    return acc


def poly_gcd(a, b):
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def poly_gcd_many(polys):
    """monic gcd of a family, the zero family raises DegeneracyError("zero family")"""
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise DegeneracyError('zero family')
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        if g.degree == 0:
            break
        g = poly_gcd(g, p)
    return g
