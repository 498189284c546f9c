"""
Tests exact scalars, tolerances and polynomials over Q(i).
"""
from __future__ import print_function

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import DegeneracyError, InputError
from core.scalars import (I, ComplexApprox, GaussianRational, GaussPoly, TolerancePolicy, first_max_index,
                          format_rational, parse_rational, poly_eval, poly_gcd_many, real_array,
                          scalar_array, scalar_from_json, scalar_to_json)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gaussians = st.builds(GaussianRational, fractions, fractions)


class TestScalars(object):
    """
    test of exact arithmetic
    """

    def pytestcase_parse_rational(self):
        assert parse_rational('1/3') == Fraction(1, 3)
        assert parse_rational('0.1') == Fraction(1, 10)
        assert parse_rational(0.1) == Fraction(1, 10)
        assert parse_rational(-4) == Fraction(-4)
        for bad in ('one', '1/0', float('nan'), float('inf'), True, None):
            with pytest.raises(InputError):
                parse_rational(bad)

    def pytestcase_format_rational(self):
        assert format_rational(Fraction(6, 4)) == '3/2'
        assert format_rational(Fraction(-5)) == '-5'

    def pytestcase_i_squared(self):
        assert I * I == -1
        assert (1 + I) * (1 - I) == 2
        assert str(GaussianRational(Fraction(1, 2), -3)) == '1/2-3i'

    @settings(max_examples=200, deadline=None)
    @given(gaussians, gaussians)
    def pytestcase_field_operations(self, a, b):
        assert a + b - b == a
        assert a * b == b * a
        if b != 0:
            assert (a * b) / b == a
        assert (a * a.conjugate()).is_real()
        assert (a * a.conjugate()).re == a.norm2()

    @settings(max_examples=100, deadline=None)
    @given(gaussians, st.integers(min_value=-4, max_value=6))
    def pytestcase_power(self, a, k):
        if a == 0 and k < 0:
            return
        expected = GaussianRational(1)
        for _ in range(abs(k)):
            expected = expected * a
        if k < 0:
            expected = 1 / expected
        assert a ** k == expected

    def pytestcase_mixing_with_floats_promotes(self):
        z = GaussianRational(1, 2) * 0.5
        assert isinstance(z, complex)
        assert z == 0.5 + 1j

    def pytestcase_complex_approx_rejects_nan(self):
        assert ComplexApprox(1, 2) == 1 + 2j
        with pytest.raises(InputError):
            ComplexApprox(float('nan'), 0)

    def pytestcase_tolerance(self):
        tol = TolerancePolicy(1e-9, 1e-6)
        assert tol.bound(10) == pytest.approx(1e-9 + 1e-5)
        assert tol.close(1000.0, 1000.0005)
        assert not tol.close(1.0, 1.001)
        with pytest.raises(InputError):
            TolerancePolicy(-1, 0)

    def pytestcase_arrays(self):
        assert real_array([1, Fraction(1, 2)]).dtype == object
        assert real_array([1, 0.5]).dtype == np.float64
        assert scalar_array([1, I]).dtype == object
        assert scalar_array([1, 1j]).dtype == np.complex128
        with pytest.raises(InputError):
            real_array([1, I])
        assert first_max_index([1, -3, 3, 2]) == 1
        assert first_max_index([1.0, 3.0 * (1 - 1e-12), 3.0]) == 1

    def pytestcase_scalar_json(self):
        z = GaussianRational(Fraction(-1, 3), 2)
        assert scalar_to_json(z) == {'re': '-1/3', 'im': '2'}
        assert scalar_from_json(scalar_to_json(z)) == z
        assert scalar_from_json('1/2') == Fraction(1, 2)
        assert scalar_from_json({'re': 0.5, 'im': 1}, exact=False) == 0.5 + 1j
        with pytest.raises(InputError):
            scalar_from_json({'re': 1, 'j': 2})


class TestGaussPoly(object):
    """
    test of polynomials over Q(i)
    """

    def init(self):
        self.t = GaussPoly([0, 1])
        self.one = GaussPoly([1])

    def pytestcase_degree_and_zero(self):
        self.init()
        assert GaussPoly().degree == -1
        assert GaussPoly([1, 2, 0, 0]).degree == 1
        assert (self.t * self.t + self.one).degree == 2

    def pytestcase_roots_of_unit_circle_family(self):
        self.init()
        h = self.one + self.t * self.t
        assert poly_eval(h, I) == 0
        assert poly_eval(h, -I) == 0
        assert poly_eval(h, 2) == 5
        assert abs(poly_eval(h, 1j)) < 1e-15

    @settings(max_examples=100, deadline=None)
    @given(st.lists(gaussians, min_size=1, max_size=6), st.lists(gaussians, min_size=1, max_size=4))
    def pytestcase_division(self, a, b):
        a, b = GaussPoly(a), GaussPoly(b)
        if b.is_zero():
            return
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def pytestcase_gcd(self):
        self.init()
        t, one = self.t, self.one
        p1 = (t - I) * (t + one)
        p2 = (t - I) * (t - 2 * one)
        assert poly_gcd_many([p1, p2, GaussPoly()]) == t - I
        assert poly_gcd_many([p1, t + 3 * one]).degree == 0
        with pytest.raises(DegeneracyError, match='zero family'):
            poly_gcd_many([GaussPoly(), GaussPoly()])

    def pytestcase_derivative(self):
        self.init()
        p = GaussPoly([3, 0, I, 2])
        assert p.derivative() == GaussPoly([0, 2 * I, 6])
