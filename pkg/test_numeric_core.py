import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st
from numpy.testing import assert_allclose
from scipy import special

from hypertype.errors import BranchCutError, DivisionError, DomainError, ParseError, PoleError
from hypertype.numeric_core import (
    Status, format_complex, gamma, log_principal, parse_complex, pochhammer, pow_principal, quad_complex, rgamma,
    sum_asymptotic_series, sum_power_series,
)

ULP = np.finfo(float).eps


@pytest.mark.parametrize('text, expected', [
    ('3', 3),
    ('-7', -7),
    ('1/3', Fraction(1, 3)),
    ('4/2', 2),
    ('0.5', 0.5),
    ('1e-3', 1e-3),
    ('2i', 2j),
    ('i', 1j),
    ('-i', -1j),
    ('0.3-1e-2i', complex(0.3, -0.01)),
    ('1.5+2.25i', complex(1.5, 2.25)),
])
def test_parse_complex(text, expected):
    value = parse_complex(text)
    assert value == expected
    assert type(value) is type(expected)


@pytest.mark.parametrize('text', ['', 'abc', '1+', '1..2i', '1/0.5'])
def test_parse_complex_rejects(text):
    with pytest.raises(ParseError):
        parse_complex(text)


@settings(max_examples=200)
@given(st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=1e300))
def test_format_complex_parses_back_exactly(value):
    assert complex(parse_complex(format_complex(value))) == value


def test_format_complex_real_values_have_no_imaginary_part():
    assert format_complex(2.5) == '2.5'
    assert format_complex(complex(1, -2)) == '1-2i'


def test_gamma_integers_and_poles():
    assert gamma(5) == 24
    assert_allclose(gamma(0.5), math.sqrt(math.pi), rtol=4 * ULP)
    assert_allclose(gamma(2.5), 0.75 * math.sqrt(math.pi), rtol=4 * ULP)
    assert_allclose(rgamma(0.5), 1 / math.sqrt(math.pi), rtol=4 * ULP)
    for n in (0, -1, -4):
        with pytest.raises(PoleError):
            gamma(n)
    with pytest.raises(PoleError):
        gamma(-2.0)
    assert rgamma(-3) == 0


@settings(max_examples=100)
@given(st.floats(-4.5, 4.5), st.floats(-3, 3))
def test_gamma_recurrence_and_reflection(x, y):
    assume(abs(y) > 0.05 or abs(x - round(x)) > 0.05)
    z = complex(x, y)
    assert_allclose(gamma(z + 1), z * gamma(z), rtol=1e-11)
    assert_allclose(gamma(z) * gamma(1 - z), math.pi / cmath.sin(math.pi * z), rtol=1e-9)


def test_pochhammer_exact_and_negative_index():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(3, 0) == 1
    assert pochhammer(Fraction(5), -2) == Fraction(1, 12)
    assert_allclose(pochhammer(0.3 + 0.1j, 4), (0.3 + 0.1j) * (1.3 + 0.1j) * (2.3 + 0.1j) * (3.3 + 0.1j))
    with pytest.raises(DivisionError):
        pochhammer(2, -3)


def test_principal_branches():
    assert log_principal(-1) == complex(0, math.pi)
    with pytest.raises(DomainError):
        log_principal(0)
    assert pow_principal(-2, 3) == -8
    assert_allclose(pow_principal(1j, 0.5), cmath.exp(0.25j * math.pi))
    with pytest.raises(BranchCutError):
        pow_principal(-1, 0.5)
    with pytest.raises(PoleError):
        pow_principal(0, -1)


def test_power_series_geometric():
    result = sum_power_series(lambda n: 1, 0.5, tol=1e-14, derivatives=1)
    assert result.status is Status.CONVERGED
    assert_allclose(result.value, 2.0, rtol=1e-13)
    assert_allclose(result.derivatives[0], 4.0, rtol=1e-12)
    # the tail test is relative to the largest partial sum, here f' ~ 4
    assert result.err_estimate <= 1e-14 * abs(result.derivatives[0])


@pytest.mark.parametrize('scale', [1e-10, 1e-200, 1e120])
def test_power_series_tolerance_is_relative(scale):
    result = sum_power_series(lambda n: 1, 0.5, tol=1e-14, leading=scale)
    assert result.status is Status.CONVERGED
    assert_allclose(result.value, 2 * scale, rtol=1e-13)
    assert result.terms_used > 40


def test_power_series_fails_outside_disc():
    result = sum_power_series(lambda n: 1, 1.5, max_terms=200)
    assert result.status is Status.FAILED


def test_power_series_terminates():
    # (1 + z)^3
    result = sum_power_series(lambda n: (3 - n) / (n + 1), 2.0)
    assert result.status is Status.CONVERGED
    assert result.value == 27
    assert result.err_estimate == 0


def test_asymptotic_series_is_optimally_truncated():
    # sum n! (-z)^n, the Euler series, at z = 0.1
    result = sum_asymptotic_series(lambda n: -(n + 1), 0.1)
    assert result.status is Status.OPTIMALLY_TRUNCATED
    exact = 10 * math.exp(10) * special.exp1(10)
    assert abs(result.value - exact) <= 3 * result.err_estimate


def test_quad_complex():
    value, err = quad_complex(lambda t: cmath.exp(1j * t), 0, math.pi)
    assert_allclose(value, 2j, atol=1e-12)
    assert err < 1e-10


def test_series_result_scaling():
    result = sum_power_series(lambda n: 1, 0.5, derivatives=1).scaled(2j)
    assert_allclose(result.value, 4j, rtol=1e-11)
    assert_allclose(result.derivatives[0], 8j, rtol=1e-10)
    assert result.to_dict()['status'] == 'Converged'
